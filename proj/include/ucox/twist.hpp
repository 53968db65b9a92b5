#pragma once

#include <vector>

#include "ucox/aut.hpp"
#include "ucox/splitting.hpp"

namespace ucox {

// Twist D_{e,z}: identity on the side of edge e whose vertex group contains z,
// conjugation by z on the other side. Throws if z lies in neither side.
Automorphism twist(const SplittingTree& tree, int edge, const Word& z);

// Concatenated vertex-group bases of a valid tree, read off the vertex cores.
std::vector<Word> tree_basis(const SplittingTree& tree);

// The representative f~ of [f] with f~(A) = A and f~(leaf) = leaf, where
// W_n = A * <leaf>. Throws std::invalid_argument if [f] does not fix the star.
Automorphism normalize_stabilizer_rep(const Automorphism& f, const std::vector<Word>& a_gens, const Word& leaf);

}  // namespace ucox
