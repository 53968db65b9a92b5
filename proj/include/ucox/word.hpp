#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ucox {

// Reduced word in the universal Coxeter group W_n = <x_1..x_n | x_i^2>.
// Letters are 1-based; adjacent letters always differ.
class Word {
public:
    Word() = default;
    explicit Word(int rank) : rank_(rank) {}

    static Word identity(int rank) { return Word(rank); }
    static Word generator(int rank, int i);
    // Freely reduces an arbitrary letter sequence. Throws on letters outside 1..rank.
    static Word reduce(int rank, std::span<const int> letters);
    static Word reduce(int rank, std::initializer_list<int> letters);
    // Parses "1.2.3" or "e". Throws std::invalid_argument on malformed input.
    static Word parse(int rank, const std::string& text);

    int rank() const { return rank_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    const std::vector<int>& letters() const { return letters_; }
    int operator[](std::size_t k) const { return letters_[k]; }
    int front() const { return letters_.front(); }
    int back() const { return letters_.back(); }

    Word inverse() const;
    // Appends one letter with cancellation.
    void push(int letter);
    std::string str() const;

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word& a, const Word& b) {
        if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
        return a.letters_ <=> b.letters_;
    }

private:
    int rank_ = 0;
    std::vector<int> letters_;
};

Word operator*(const Word& a, const Word& b);
Word power(const Word& w, int e);

// w = conjugator * core * conjugator^-1 with core cyclically reduced.
struct CyclicForm {
    Word core;
    Word conjugator;
};
CyclicForm cyclic_reduce(const Word& w);

// Some g with g * w * g^-1 == v, if w and v are conjugate.
std::optional<Word> are_conjugate(const Word& w, const Word& v);
// Lexicographically least rotation of the cyclic core.
Word canonical_conjugacy_rep(const Word& w);

// Involutions of W_n are exactly u x_j u^-1.
struct Involution {
    Word conjugator;
    int letter = 0;
    Word word() const;
};
std::optional<Involution> as_involution(const Word& w);
bool is_involution(const Word& w);

// Substitutes letter i by images[i-1] and reduces.
Word substitute(const Word& w, const std::vector<Word>& images);

// Comma separated list of words, e.g. "1.2.1,3".
std::vector<Word> parse_word_list(int rank, const std::string& text);
std::string format_word_list(const std::vector<Word>& words);

struct WordHash {
    std::size_t operator()(const Word& w) const;
};

}  // namespace ucox
