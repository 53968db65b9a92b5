#include "ucox/aut.hpp"

#include <algorithm>
#include <stdexcept>

namespace ucox {

namespace {

void check_index(int rank, int i) {
    if (i < 1 || i > rank) throw std::invalid_argument("generator index out of range");
}

void validate_move(int rank, const GeneratorMove& m) {
    if (auto* pc = std::get_if<PartialConj>(&m)) {
        check_index(rank, pc->i);
        for (std::size_t k = 0; k < pc->set.size(); ++k) {
            check_index(rank, pc->set[k]);
            if (pc->set[k] == pc->i) throw std::invalid_argument("partial conjugation set contains i");
            if (k && pc->set[k] <= pc->set[k - 1])
                throw std::invalid_argument("partial conjugation set must be sorted and distinct");
        }
    } else {
        auto& s = std::get<Swap>(m);
        check_index(rank, s.i);
        check_index(rank, s.j);
        if (s.i == s.j) throw std::invalid_argument("swap of a generator with itself");
    }
}

}  // namespace

GeneratorMove sigma_move(int j, int i) { return PartialConj{{j}, i}; }

Word apply_move(const GeneratorMove& m, const Word& w) {
    Word r(w.rank());
    if (auto* pc = std::get_if<PartialConj>(&m)) {
        for (int x : w.letters()) {
            if (std::binary_search(pc->set.begin(), pc->set.end(), x)) {
                r.push(pc->i);
                r.push(x);
                r.push(pc->i);
            } else {
                r.push(x);
            }
        }
    } else {
        auto& s = std::get<Swap>(m);
        for (int x : w.letters()) r.push(x == s.i ? s.j : x == s.j ? s.i : x);
    }
    return r;
}

std::string move_str(const GeneratorMove& m) {
    if (auto* pc = std::get_if<PartialConj>(&m)) {
        std::string s = "pc({";
        for (std::size_t k = 0; k < pc->set.size(); ++k) {
            if (k) s += ',';
            s += std::to_string(pc->set[k]);
        }
        return s + "}," + std::to_string(pc->i) + ")";
    }
    auto& s = std::get<Swap>(m);
    return "swap(" + std::to_string(s.i) + "," + std::to_string(s.j) + ")";
}

Automorphism Automorphism::identity(int rank) {
    if (rank < 1) throw std::invalid_argument("rank must be positive");
    Automorphism f;
    f.rank_ = rank;
    for (int i = 1; i <= rank; ++i) f.images_.push_back(Word::generator(rank, i));
    return f;
}

Automorphism Automorphism::from_moves(int rank, std::vector<GeneratorMove> moves) {
    Automorphism f = identity(rank);
    for (auto& m : moves) validate_move(rank, m);
    for (auto it = moves.rbegin(); it != moves.rend(); ++it)
        for (auto& img : f.images_) img = apply_move(*it, img);
    f.moves_ = std::move(moves);
    return f;
}

Automorphism Automorphism::from_images_unchecked(std::vector<Word> images) {
    if (images.empty()) throw std::invalid_argument("no images");
    Automorphism f;
    f.rank_ = images.front().rank();
    if (static_cast<int>(images.size()) != f.rank_) throw std::invalid_argument("wrong image count");
    f.images_ = std::move(images);
    f.has_moves_ = false;
    std::vector<int> perm = class_permutation(f);
    std::vector<int> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < f.rank_; ++i)
        if (sorted[i] != i + 1) throw std::invalid_argument("images do not permute the classes");
    return f;
}

Word Automorphism::apply(const Word& w) const {
    if (w.rank() != rank_) throw std::invalid_argument("rank mismatch in apply");
    return substitute(w, images_);
}

std::vector<Word> Automorphism::apply(const std::vector<Word>& ws) const {
    std::vector<Word> out;
    out.reserve(ws.size());
    for (auto& w : ws) out.push_back(apply(w));
    return out;
}

Automorphism compose(const Automorphism& f, const Automorphism& g) {
    if (f.rank() != g.rank()) throw std::invalid_argument("rank mismatch in compose");
    Automorphism h;
    h.rank_ = f.rank();
    h.images_ = f.apply(g.images());
    h.has_moves_ = f.has_moves() && g.has_moves();
    if (h.has_moves_) {
        h.moves_ = f.moves();
        h.moves_.insert(h.moves_.end(), g.moves().begin(), g.moves().end());
    }
    return h;
}

Automorphism invert(const Automorphism& f) {
    if (!f.has_moves()) throw std::logic_error("cannot invert an automorphism without a move word");
    std::vector<GeneratorMove> mv(f.moves().rbegin(), f.moves().rend());
    return Automorphism::from_moves(f.rank(), std::move(mv));
}

bool equal_exact(const Automorphism& f, const Automorphism& g) { return f.images() == g.images(); }

std::vector<int> class_permutation(const Automorphism& f) {
    std::vector<int> perm;
    for (auto& img : f.images()) {
        auto inv = as_involution(img);
        if (!inv) throw std::invalid_argument("image is not an involution: " + img.str());
        perm.push_back(inv->letter);
    }
    return perm;
}

bool in_Cn(const Automorphism& f) {
    auto p = class_permutation(f);
    for (std::size_t k = 0; k < p.size(); ++k)
        if (p[k] != static_cast<int>(k) + 1) return false;
    return true;
}

std::optional<Word> equal_outer(const Automorphism& f, const Automorphism& g) {
    if (f.rank() != g.rank()) throw std::invalid_argument("rank mismatch in equal_outer");
    auto h0 = are_conjugate(f.images()[0], g.images()[0]);
    if (!h0) return std::nullopt;
    // The centralizer of the involution g(x_1) is {1, g(x_1)}.
    for (const Word& h : {*h0, g.images()[0] * *h0}) {
        bool ok = true;
        Word hi = h.inverse();
        for (int i = 0; i < f.rank() && ok; ++i) ok = h * f.images()[i] * hi == g.images()[i];
        if (ok) return h;
    }
    return std::nullopt;
}

std::vector<Word> outer_key(const Automorphism& f) {
    auto inv = as_involution(f.images()[0]);
    Word u = inv->conjugator.inverse();
    std::vector<Word> best;
    for (const Word& h : {u, Word::generator(f.rank(), inv->letter) * u}) {
        std::vector<Word> cand;
        Word hi = h.inverse();
        for (auto& img : f.images()) cand.push_back(h * img * hi);
        if (best.empty() || cand < best) best = cand;
    }
    return best;
}

Automorphism sigma(int rank, int j, int i) { return Automorphism::from_moves(rank, {sigma_move(j, i)}); }

Automorphism swap_aut(int rank, int i, int j) { return Automorphism::from_moves(rank, {Swap{i, j}}); }

Automorphism partial_conj(int rank, std::vector<int> set, int i) {
    std::sort(set.begin(), set.end());
    return Automorphism::from_moves(rank, {PartialConj{std::move(set), i}});
}

Automorphism inner(const Word& g) {
    int n = g.rank();
    std::vector<GeneratorMove> mv;
    for (int x : g.letters()) {
        PartialConj pc{{}, x};
        for (int j = 1; j <= n; ++j)
            if (j != x) pc.set.push_back(j);
        if (pc.set.empty()) continue;
        mv.push_back(pc);
    }
    return Automorphism::from_moves(n, std::move(mv));
}

Automorphism conj_generator(int i, const Word& w) {
    int n = w.rank();
    check_index(n, i);
    Word v = w;
    if (!v.empty() && v.back() == i) v = v * Word::generator(n, i);
    for (int x : v.letters())
        if (x == i) throw std::invalid_argument("conjugator for x_i must avoid x_i");
    // x_i -> w_1..w_m x_i w_m..w_1 is sigma(i,w_m) o ... o sigma(i,w_1).
    std::vector<GeneratorMove> mv;
    for (auto it = v.letters().rbegin(); it != v.letters().rend(); ++it) mv.push_back(sigma_move(i, *it));
    return Automorphism::from_moves(n, std::move(mv));
}

Automorphism F(int rank, int i) {
    if (i < 3) throw std::invalid_argument("F_i is defined for i >= 3");
    return conj_generator(i, Word::reduce(rank, {1, 2}));
}

std::string to_string(const Automorphism& f) {
    std::string s = "[";
    for (int i = 0; i < f.rank(); ++i) {
        if (i) s += ", ";
        s += "x" + std::to_string(i + 1) + " -> " + f.images()[i].str();
    }
    return s + "]";
}

}  // namespace ucox
