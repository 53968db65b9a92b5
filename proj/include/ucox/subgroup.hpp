#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ucox/aut.hpp"
#include "ucox/word.hpp"

namespace ucox {

// Folded core graph of a finitely generated subgroup of W_n. Every vertex has at
// most one edge per letter; an i-edge is undirected, an i-loop is a fixed point.
// Vertices are numbered breadth first from the base (vertex 0) in letter order,
// so equal subgroups produce identical graphs.
class CoreGraph {
public:
    static constexpr int kNone = -1;

    CoreGraph() = default;
    static CoreGraph from_generators(int rank, const std::vector<Word>& generators);
    // Builds from an explicit transition table; slot(v,i) = target or kNone.
    static CoreGraph from_table(int rank, int vertices, std::vector<int> table, int base = 0);

    int rank() const { return rank_; }
    int vertex_count() const { return vertices_; }
    int base() const { return 0; }
    bool empty() const { return vertices_ == 0; }
    int next(int v, int letter) const { return table_[v * rank_ + letter - 1]; }
    const std::vector<int>& table() const { return table_; }
    const std::vector<Word>& generators() const { return generators_; }

    int loop_count() const;
    int edge_count() const;  // non-loop edges
    int degree(int v) const;
    std::vector<int> loop_letters() const;

    // Label of the breadth-first tree path from the base to v.
    Word path_to(int v) const;
    // Free generating set read off a spanning tree.
    std::vector<Word> generators_from_core() const;

    friend bool operator==(const CoreGraph& a, const CoreGraph& b) {
        return a.rank_ == b.rank_ && a.vertices_ == b.vertices_ && a.table_ == b.table_;
    }

private:
    friend CoreGraph cyclic_core(const CoreGraph&);
    friend CoreGraph intersect(const CoreGraph&, const CoreGraph&);
    static CoreGraph normalized(int rank, int vertices, const std::vector<int>& table, int base,
                                bool prune_base);

    int rank_ = 0;
    int vertices_ = 0;
    std::vector<int> table_;
    std::vector<Word> generators_;
};

// H = W_k1 * ... * F_r; k = number of loops, r = rank of the free part.
struct KuroshSignature {
    int k = 0;
    int r = 0;
    friend bool operator==(const KuroshSignature&, const KuroshSignature&) = default;
};

bool member(const CoreGraph& core, const Word& w);
KuroshSignature kurosh_signature(const CoreGraph& core);
bool same_subgroup(const CoreGraph& a, const CoreGraph& b);
bool contains(const CoreGraph& big, const CoreGraph& small);

// Core with all hair removed, the base included. Empty for the trivial subgroup.
CoreGraph cyclic_core(const CoreGraph& core);
// Conjugation invariant code: minimum over start vertices of the BFS encoding.
std::string canonical_code(const CoreGraph& core);
// Rebuilds a based graph (base = BFS start) from a canonical code.
CoreGraph decode_code(const std::string& code);
int code_size(const std::string& code);

// g with g A g^-1 == B.
std::optional<Word> conjugate_subgroups(const CoreGraph& a, const CoreGraph& b);
// g with g A g^-1 containing the involution t.
std::optional<Word> conjugate_into(const CoreGraph& a, const Word& t);
// g with g A g^-1 contained in B.
std::optional<Word> conjugate_into_subgroup(const CoreGraph& a, const CoreGraph& b);

CoreGraph intersect(const CoreGraph& a, const CoreGraph& b);

std::string core_to_dot(const CoreGraph& core);

// Conjugacy class of a subgroup, compared by canonical code. A representative
// generating set is kept for computation.
struct FreeFactorClass {
    int rank = 0;
    std::string code;
    KuroshSignature signature;
    std::vector<Word> generators;

    static FreeFactorClass of(int rank, const std::vector<Word>& generators);
    static FreeFactorClass of(const CoreGraph& core);
    static FreeFactorClass from_code(const std::string& code);
    CoreGraph core() const { return CoreGraph::from_generators(rank, generators); }
    int complexity() const { return code_size(code); }

    friend bool operator==(const FreeFactorClass& a, const FreeFactorClass& b) {
        return a.rank == b.rank && a.code == b.code;
    }
    friend bool operator<(const FreeFactorClass& a, const FreeFactorClass& b) {
        return a.rank != b.rank ? a.rank < b.rank : a.code < b.code;
    }
};

FreeFactorClass act(const Automorphism& f, const FreeFactorClass& a);

enum class Verdict { Yes, No, Inconclusive };
std::string to_string(Verdict v);

struct FreeFactorResult {
    Verdict verdict = Verdict::Inconclusive;
    std::optional<Automorphism> witness;  // maps the subgroup onto <x_i : i in I>
    std::vector<int> standard_letters;    // I
    int moves_used = 0;
};

struct FreeFactorOptions {
    int max_depth = 6;          // move budget for plateau search
    int max_plateau = 20000;    // state budget for plateau search
};

// Whitehead-style descent on core size. Throws std::invalid_argument if the
// subgroup has free rank r > 0 (never a free factor of W_n).
FreeFactorResult is_free_factor(const CoreGraph& core, const FreeFactorOptions& opts = {});

// Automorphism b with b(x_i) = basis[i-1] exactly, found by descent on total
// length. Returns nullopt when the tuple is not recognized as a basis.
std::optional<Automorphism> reduce_basis(const std::vector<Word>& basis);

// All partial conjugations PartialConj(S, i) with nonempty S.
std::vector<GeneratorMove> all_partial_conjugations(int rank);

}  // namespace ucox
