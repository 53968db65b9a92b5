#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ucox/aut.hpp"
#include "ucox/subgroup.hpp"

namespace ucox {

// Graph-of-groups splitting of W_n with trivial edge groups. A vertex group is
// given by generating involutions; an empty list is a trivial vertex.
struct SplittingTree {
    int rank = 0;
    std::vector<std::vector<Word>> vertex_groups;
    std::vector<std::pair<int, int>> edges;

    int vertex_count() const { return static_cast<int>(vertex_groups.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }
    int degree(int v) const;
    std::vector<int> neighbors(int v) const;
    std::vector<Word> all_generators() const;
};

// Center <x_i : i in center>, one leaf <x_j> for every other j.
SplittingTree standard_star(int rank, const std::vector<int>& center);
SplittingTree act(const Automorphism& f, const SplittingTree& t);
SplittingTree collapse(const SplittingTree& t, const std::vector<int>& edge_indices);
// New trivial vertex adjacent to v that takes over the edges from v to moved.
SplittingTree blow_up(const SplittingTree& t, int v, const std::vector<int>& moved);
// Blows up trivial vertices of degree >= 4 until every trivial vertex is trivalent.
SplittingTree trivalent_refinement(const SplittingTree& t);

struct ValidationReport {
    bool ok = true;
    std::string reason;
    int vertex = -1;
};
ValidationReport validate(const SplittingTree& t);

// Equivalence class of a W_k-star, determined by its set of corank-1 free
// factor classes (one per leaf). Compared by canonical codes.
struct StarClass {
    int rank = 0;
    int k = 0;
    std::vector<FreeFactorClass> corank1;  // sorted, distinct

    static StarClass of(int rank, std::vector<FreeFactorClass> classes);
    std::vector<std::string> codes() const;
    int leaves() const { return static_cast<int>(corank1.size()); }

    friend bool operator==(const StarClass& a, const StarClass& b) {
        return a.rank == b.rank && a.k == b.k && a.corank1 == b.corank1;
    }
    friend bool operator<(const StarClass& a, const StarClass& b) {
        if (a.rank != b.rank) return a.rank < b.rank;
        if (a.k != b.k) return a.k < b.k;
        return a.corank1 < b.corank1;
    }
};

// Identifies center and leaves of a star-shaped tree. Throws if not a star.
StarClass star_class(const SplittingTree& t);
StarClass act(const Automorphism& f, const StarClass& s);

class IncompatibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RefineResult {
    StarClass cls;
    // Vertex 0 is the center; vertex j+1 is the leaf whose collapse gives cls.corank1[j].
    SplittingTree witness;
};

// Common refinement of one-edge splittings given by corank-1 classes, or nullopt
// when they are not pairwise compatible. Every returned witness is verified.
std::optional<RefineResult> refine(const std::vector<FreeFactorClass>& classes);
RefineResult refine_or_throw(const std::vector<FreeFactorClass>& classes);
SplittingTree star_tree(const StarClass& s);

// Requires a != b.
std::optional<RefineResult> compatible_one_edge(const FreeFactorClass& a, const FreeFactorClass& b);
bool is_compatible(const StarClass& s, const StarClass& t);
// t is a proper collapse of s.
bool refines(const StarClass& s, const StarClass& t);

// t with <Z, t> == D, where Z is a corank-1 free factor of D and D is a free
// product of k+1 conjugates of generators.
std::optional<Word> complement_in(const CoreGraph& z, const CoreGraph& d);
std::optional<Word> complement(const FreeFactorClass& a);
// One-edge splitting <A> * <t>.
SplittingTree one_edge_splitting(const FreeFactorClass& a);

struct FreeFactorSystem {
    std::vector<FreeFactorClass> factors;
};
FreeFactorSystem ffs_of(const SplittingTree& t);
bool ffs_leq(const FreeFactorSystem& a, const FreeFactorSystem& b);

}  // namespace ucox
