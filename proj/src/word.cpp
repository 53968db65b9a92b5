#include "ucox/word.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ucox {

namespace {

void check_letter(int rank, int letter) {
    if (letter < 1 || letter > rank)
        throw std::invalid_argument("letter " + std::to_string(letter) + " outside 1.." +
                                    std::to_string(rank));
}

}  // namespace

Word Word::generator(int rank, int i) {
    check_letter(rank, i);
    Word w(rank);
    w.letters_.push_back(i);
    return w;
}

void Word::push(int letter) {
    if (!letters_.empty() && letters_.back() == letter)
        letters_.pop_back();
    else
        letters_.push_back(letter);
}

Word Word::reduce(int rank, std::span<const int> letters) {
    if (rank < 1) throw std::invalid_argument("rank must be positive");
    Word w(rank);
    for (int a : letters) {
        check_letter(rank, a);
        w.push(a);
    }
    return w;
}

Word Word::reduce(int rank, std::initializer_list<int> letters) {
    return reduce(rank, std::span<const int>(letters.begin(), letters.size()));
}

Word Word::parse(int rank, const std::string& text) {
    if (text == "e" || text.empty()) return Word(rank);
    std::vector<int> seq;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, '.')) {
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(), ::isdigit))
            throw std::invalid_argument("malformed word '" + text + "'");
        seq.push_back(std::stoi(tok));
    }
    return reduce(rank, seq);
}

Word Word::inverse() const {
    Word w(rank_);
    w.letters_.assign(letters_.rbegin(), letters_.rend());
    return w;
}

std::string Word::str() const {
    if (letters_.empty()) return "e";
    std::string s;
    for (std::size_t k = 0; k < letters_.size(); ++k) {
        if (k) s += '.';
        s += std::to_string(letters_[k]);
    }
    return s;
}

Word operator*(const Word& a, const Word& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch in product");
    Word r = a;
    for (int x : b.letters()) r.push(x);
    return r;
}

Word power(const Word& w, int e) {
    Word base = e < 0 ? w.inverse() : w;
    Word r(w.rank());
    for (int k = 0; k < std::abs(e); ++k) r = r * base;
    return r;
}

CyclicForm cyclic_reduce(const Word& w) {
    const auto& L = w.letters();
    std::size_t lo = 0, hi = L.size();
    while (hi - lo >= 2 && L[lo] == L[hi - 1]) {
        ++lo;
        --hi;
    }
    CyclicForm f{Word(w.rank()), Word(w.rank())};
    for (std::size_t k = lo; k < hi; ++k) f.core.push(L[k]);
    for (std::size_t k = 0; k < lo; ++k) f.conjugator.push(L[k]);
    return f;
}

std::optional<Word> are_conjugate(const Word& w, const Word& v) {
    if (w.rank() != v.rank()) throw std::invalid_argument("rank mismatch in conjugacy test");
    CyclicForm fw = cyclic_reduce(w), fv = cyclic_reduce(v);
    const auto& a = fw.core.letters();
    const auto& b = fv.core.letters();
    if (a.size() != b.size()) return std::nullopt;
    std::size_t L = a.size();
    // core_v = r^-1 core_w r where r is the prefix of length s of core_w.
    for (std::size_t s = 0; s < std::max<std::size_t>(L, 1); ++s) {
        bool ok = true;
        for (std::size_t k = 0; k < L && ok; ++k) ok = a[(k + s) % L] == b[k];
        if (!ok) continue;
        Word r(w.rank());
        for (std::size_t k = 0; k < s; ++k) r.push(a[k]);
        Word g = fv.conjugator * r.inverse() * fw.conjugator.inverse();
        if (g * w * g.inverse() == v) return g;
    }
    return std::nullopt;
}

Word canonical_conjugacy_rep(const Word& w) {
    Word core = cyclic_reduce(w).core;
    const auto& a = core.letters();
    std::size_t L = a.size();
    if (L <= 1) return core;
    std::size_t best = 0;
    for (std::size_t s = 1; s < L; ++s) {
        for (std::size_t k = 0; k < L; ++k) {
            int x = a[(s + k) % L], y = a[(best + k) % L];
            if (x != y) {
                if (x < y) best = s;
                break;
            }
        }
    }
    std::vector<int> rot(L);
    for (std::size_t k = 0; k < L; ++k) rot[k] = a[(best + k) % L];
    return Word::reduce(w.rank(), rot);
}

Word Involution::word() const {
    return conjugator * Word::generator(conjugator.rank(), letter) * conjugator.inverse();
}

std::optional<Involution> as_involution(const Word& w) {
    std::size_t L = w.size();
    if (L % 2 == 0) return std::nullopt;
    for (std::size_t k = 0; k < L / 2; ++k)
        if (w[k] != w[L - 1 - k]) return std::nullopt;
    Involution inv{Word(w.rank()), w[L / 2]};
    for (std::size_t k = 0; k < L / 2; ++k) inv.conjugator.push(w[k]);
    return inv;
}

bool is_involution(const Word& w) { return as_involution(w).has_value(); }

Word substitute(const Word& w, const std::vector<Word>& images) {
    if (images.empty()) throw std::invalid_argument("empty substitution");
    Word r(images.front().rank());
    for (int x : w.letters()) {
        if (x < 1 || x > static_cast<int>(images.size()))
            throw std::invalid_argument("substitution does not cover letter");
        r = r * images[x - 1];
    }
    return r;
}

std::vector<Word> parse_word_list(int rank, const std::string& text) {
    std::vector<Word> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
        if (tok.empty()) continue;
        out.push_back(Word::parse(rank, tok));
    }
    return out;
}

std::string format_word_list(const std::vector<Word>& words) {
    std::string s;
    for (std::size_t k = 0; k < words.size(); ++k) {
        if (k) s += ',';
        s += words[k].str();
    }
    return s;
}

std::size_t WordHash::operator()(const Word& w) const {
    std::size_t h = static_cast<std::size_t>(w.rank()) * 0x9e3779b97f4a7c15ULL;
    for (int x : w.letters()) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
    return h;
}

}  // namespace ucox
