#include "ucox/twist.hpp"

#include <stdexcept>

namespace ucox {

std::vector<Word> tree_basis(const SplittingTree& tree) {
    std::vector<Word> basis;
    for (auto& g : tree.vertex_groups) {
        if (g.empty()) continue;
        auto b = CoreGraph::from_generators(tree.rank, g).generators_from_core();
        basis.insert(basis.end(), b.begin(), b.end());
    }
    return basis;
}

Automorphism twist(const SplittingTree& tree, int edge, const Word& z) {
    int n = tree.rank;
    if (edge < 0 || edge >= tree.edge_count()) throw std::invalid_argument("edge index out of range");
    if (z.empty()) return Automorphism::identity(n);
    std::vector<int> others;
    for (int e = 0; e < tree.edge_count(); ++e)
        if (e != edge) others.push_back(e);
    SplittingTree one = others.empty() ? tree : collapse(tree, others);
    CoreGraph side0 = CoreGraph::from_generators(n, one.vertex_groups[0]);
    CoreGraph side1 = CoreGraph::from_generators(n, one.vertex_groups[1]);
    int near;
    if (!one.vertex_groups[0].empty() && member(side0, z))
        near = 0;
    else if (!one.vertex_groups[1].empty() && member(side1, z))
        near = 1;
    else
        throw std::invalid_argument("twistor does not lie in an endpoint vertex group");
    // Basis adapted to the edge: near side first, then far side.
    std::vector<Word> nb = (near == 0 ? side0 : side1).generators_from_core();
    std::vector<Word> fb = (near == 0 ? side1 : side0).generators_from_core();
    std::vector<Word> basis = nb;
    basis.insert(basis.end(), fb.begin(), fb.end());
    if (static_cast<int>(basis.size()) != n) throw std::invalid_argument("tree is not a free splitting of W_n");
    auto beta = reduce_basis(basis);
    if (!beta) throw std::invalid_argument("vertex groups do not form a basis");
    // In standard coordinates the twist conjugates each far letter by beta^-1(z).
    Automorphism beta_inv = invert(*beta);
    Word zs = beta_inv.apply(z);
    Automorphism d = Automorphism::identity(n);
    for (int j = static_cast<int>(nb.size()) + 1; j <= n; ++j) d = compose(d, conj_generator(j, zs));
    Automorphism result = compose(*beta, compose(d, beta_inv));
    // Direct check of the defining property.
    Word zi = z.inverse();
    for (auto& w : nb)
        if (result.apply(w) != w) throw std::logic_error("twist does not fix the near side");
    for (auto& w : fb)
        if (result.apply(w) != z * w * zi) throw std::logic_error("twist does not conjugate the far side");
    return result;
}

Automorphism normalize_stabilizer_rep(const Automorphism& f, const std::vector<Word>& a_gens, const Word& leaf) {
    int n = f.rank();
    CoreGraph a = CoreGraph::from_generators(n, a_gens);
    auto g1 = conjugate_subgroups(CoreGraph::from_generators(n, f.apply(a_gens)), a);
    if (!g1) throw std::invalid_argument("automorphism does not stabilize the star class");
    Word u = *g1 * f.apply(leaf) * g1->inverse();
    auto c0 = are_conjugate(u, leaf);
    if (!c0) throw std::invalid_argument("automorphism does not stabilize the star class");
    // Solutions of c u c^-1 = leaf form the coset <leaf> c0; at most one lies in A.
    std::optional<Word> c;
    for (const Word& cand : {*c0, leaf * *c0}) {
        if (!member(a, cand)) continue;
        if (c) throw std::logic_error("normalization is not unique");
        c = cand;
    }
    if (!c) throw std::invalid_argument("automorphism does not stabilize the star class");
    Automorphism r = compose(inner(*c * *g1), f);
    if (!(CoreGraph::from_generators(n, r.apply(a_gens)) == a) || r.apply(leaf) != leaf)
        throw std::logic_error("normalization failed to fix the star");
    return r;
}

}  // namespace ucox
