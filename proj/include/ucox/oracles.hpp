#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "ucox/aut.hpp"
#include "ucox/word.hpp"

// Independent reference implementations used only for verification. They work
// on plain letter vectors and share no code with the library algorithms.
namespace ucox::oracle {

using Letters = std::vector<int>;

// Repeatedly scans for an adjacent equal pair and deletes it.
Letters naive_reduce(Letters seq);
Letters concat(const Letters& a, const Letters& b);
Letters reversed(const Letters& a);

// w has order two iff w != 1 and w*w reduces to the empty word.
bool is_involution_by_squaring(const Letters& w);

// Breadth-first search over conjugation by single generators, restricted to
// words no longer than max(|w|, |v|). Returns a conjugator g with g w g^-1 = v.
std::optional<Letters> conjugacy_bfs(int rank, const Letters& w, const Letters& v);
// Exhaustive search over all reduced conjugators of length <= max_len.
std::optional<Letters> conjugacy_brute_force(int rank, const Letters& w, const Letters& v, int max_len);

enum class Membership { Member, NonMember, Unknown };
// Truncated coset enumeration: identifies prefixes of the generators and of w
// under the right congruence generated by h ~ 1 for every generator h. Exact
// when every word involved has length <= depth; Unknown otherwise.
Membership coset_enumeration(int rank, const std::vector<Letters>& gens, const Letters& w, int depth);

// Size of the permutation group generated by the given permutations (1-based images).
std::size_t permutation_group_order(int n, const std::vector<std::vector<int>>& gens);

}  // namespace ucox::oracle

namespace ucox::rnd {

using Rng = std::mt19937_64;

Rng case_rng(std::uint64_t seed, const std::string& suite, int rank, int case_index);
int uniform(Rng& rng, int lo, int hi);  // inclusive
Word random_word(Rng& rng, int rank, int length);  // reduced, exact length
Word random_word_upto(Rng& rng, int rank, int max_length);
Word random_word_in(Rng& rng, int rank, const std::vector<int>& letters, int length);
GeneratorMove random_muhlherr_move(Rng& rng, int rank);
Automorphism random_automorphism(Rng& rng, int rank, int moves);
std::vector<int> random_subset(Rng& rng, int n, int size);

}  // namespace ucox::rnd
