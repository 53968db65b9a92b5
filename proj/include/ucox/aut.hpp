#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ucox/word.hpp"

namespace ucox {

// x_j -> x_i x_j x_i for every j in set; other generators fixed.
struct PartialConj {
    std::vector<int> set;  // sorted, does not contain i
    int i = 0;
    friend bool operator==(const PartialConj&, const PartialConj&) = default;
};

// Exchanges x_i and x_j.
struct Swap {
    int i = 0, j = 0;
    friend bool operator==(const Swap&, const Swap&) = default;
};

using GeneratorMove = std::variant<PartialConj, Swap>;

GeneratorMove sigma_move(int j, int i);
Word apply_move(const GeneratorMove& m, const Word& w);
std::string move_str(const GeneratorMove& m);

// Automorphism of W_n stored as a move word m_1 ... m_k meaning m_1 o ... o m_k
// (m_k is applied first) together with the cached generator images.
class Automorphism {
public:
    Automorphism() = default;
    static Automorphism identity(int rank);
    static Automorphism from_moves(int rank, std::vector<GeneratorMove> moves);
    // Images only; the result has no move word and cannot be inverted.
    // Throws unless the images are involutions with a permutation of classes.
    static Automorphism from_images_unchecked(std::vector<Word> images);

    int rank() const { return rank_; }
    const std::vector<GeneratorMove>& moves() const { return moves_; }
    bool has_moves() const { return has_moves_; }
    const std::vector<Word>& images() const { return images_; }
    const Word& image(int i) const { return images_.at(i - 1); }

    Word apply(const Word& w) const;
    std::vector<Word> apply(const std::vector<Word>& ws) const;

private:
    friend Automorphism compose(const Automorphism& f, const Automorphism& g);
    int rank_ = 0;
    bool has_moves_ = true;
    std::vector<GeneratorMove> moves_;
    std::vector<Word> images_;
};

Automorphism compose(const Automorphism& f, const Automorphism& g);  // f o g
Automorphism invert(const Automorphism& f);
bool equal_exact(const Automorphism& f, const Automorphism& g);

// h with ad_h o f == g, when f and g agree in Out(W_n).
std::optional<Word> equal_outer(const Automorphism& f, const Automorphism& g);
// A canonical representative of the outer class, usable as a hash key.
std::vector<Word> outer_key(const Automorphism& f);

// perm[i-1] = j when f(x_i) is conjugate to x_j.
std::vector<int> class_permutation(const Automorphism& f);
bool in_Cn(const Automorphism& f);

// Named families.
Automorphism sigma(int rank, int j, int i);
Automorphism swap_aut(int rank, int i, int j);
Automorphism partial_conj(int rank, std::vector<int> set, int i);
Automorphism inner(const Word& g);                 // x -> g x g^-1
Automorphism conj_generator(int i, const Word& w);  // x_i -> w x_i w^-1, rest fixed
Automorphism F(int rank, int i);                    // x_i -> x1 x2 x_i x2 x1, i >= 3

std::string to_string(const Automorphism& f);

}  // namespace ucox
