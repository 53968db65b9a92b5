#include "ucox/splitting.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace ucox {

int SplittingTree::degree(int v) const {
    int d = 0;
    for (auto& [a, b] : edges) d += (a == v) + (b == v);
    return d;
}

std::vector<int> SplittingTree::neighbors(int v) const {
    std::vector<int> out;
    for (auto& [a, b] : edges) {
        if (a == v) out.push_back(b);
        if (b == v) out.push_back(a);
    }
    return out;
}

std::vector<Word> SplittingTree::all_generators() const {
    std::vector<Word> out;
    for (auto& g : vertex_groups) out.insert(out.end(), g.begin(), g.end());
    return out;
}

SplittingTree standard_star(int rank, const std::vector<int>& center) {
    if (rank < 3) throw std::invalid_argument("splittings require rank >= 3");
    std::vector<char> in_center(rank + 1, 0);
    SplittingTree t;
    t.rank = rank;
    t.vertex_groups.emplace_back();
    for (int i : center) {
        if (i < 1 || i > rank || in_center[i]) throw std::invalid_argument("bad center letters");
        in_center[i] = 1;
        t.vertex_groups[0].push_back(Word::generator(rank, i));
    }
    std::sort(t.vertex_groups[0].begin(), t.vertex_groups[0].end());
    for (int j = 1; j <= rank; ++j) {
        if (in_center[j]) continue;
        t.vertex_groups.push_back({Word::generator(rank, j)});
        t.edges.push_back({0, t.vertex_count() - 1});
    }
    if (t.edges.empty()) throw std::invalid_argument("a star needs at least one leaf");
    return t;
}

SplittingTree act(const Automorphism& f, const SplittingTree& t) {
    SplittingTree r = t;
    for (auto& g : r.vertex_groups) g = f.apply(g);
    return r;
}

SplittingTree collapse(const SplittingTree& t, const std::vector<int>& edge_indices) {
    int V = t.vertex_count();
    std::vector<int> rep(V);
    std::iota(rep.begin(), rep.end(), 0);
    std::function<int(int)> find = [&](int x) { return rep[x] == x ? x : rep[x] = find(rep[x]); };
    std::vector<char> dropped(t.edge_count(), 0);
    for (int e : edge_indices) {
        if (e < 0 || e >= t.edge_count()) throw std::invalid_argument("edge index out of range");
        dropped[e] = 1;
        int a = find(t.edges[e].first), b = find(t.edges[e].second);
        if (a != b) rep[std::max(a, b)] = std::min(a, b);
    }
    if (std::all_of(dropped.begin(), dropped.end(), [](char c) { return c; }))
        throw std::invalid_argument("collapsing every edge leaves a point");
    std::vector<int> index(V, -1);
    SplittingTree r;
    r.rank = t.rank;
    for (int v = 0; v < V; ++v) {
        int root = find(v);
        if (index[root] < 0) {
            index[root] = r.vertex_count();
            r.vertex_groups.emplace_back();
        }
    }
    for (int v = 0; v < V; ++v) {
        auto& g = r.vertex_groups[index[find(v)]];
        g.insert(g.end(), t.vertex_groups[v].begin(), t.vertex_groups[v].end());
    }
    for (int e = 0; e < t.edge_count(); ++e)
        if (!dropped[e]) r.edges.push_back({index[find(t.edges[e].first)], index[find(t.edges[e].second)]});
    return r;
}

SplittingTree blow_up(const SplittingTree& t, int v, const std::vector<int>& moved) {
    SplittingTree r = t;
    int u = r.vertex_count();
    r.vertex_groups.emplace_back();
    for (int x : moved) {
        bool found = false;
        for (auto& [a, b] : r.edges) {
            if ((a == v && b == x) || (a == x && b == v)) {
                a = u;
                b = x;
                found = true;
                break;
            }
        }
        if (!found) throw std::invalid_argument("blow_up: not a neighbor");
    }
    r.edges.push_back({v, u});
    return r;
}

SplittingTree trivalent_refinement(const SplittingTree& t) {
    SplittingTree r = t;
    for (bool again = true; again;) {
        again = false;
        for (int v = 0; v < r.vertex_count(); ++v) {
            if (!r.vertex_groups[v].empty() || r.degree(v) < 4) continue;
            auto nb = r.neighbors(v);
            r = blow_up(r, v, {nb[0], nb[1]});
            again = true;
            break;
        }
    }
    return r;
}

ValidationReport validate(const SplittingTree& t) {
    ValidationReport rep;
    auto fail = [&](std::string why, int v = -1) {
        rep.ok = false;
        rep.reason = std::move(why);
        rep.vertex = v;
        return rep;
    };
    int V = t.vertex_count(), n = t.rank;
    if (V < 2) return fail("tree must have at least one edge");
    if (t.edge_count() != V - 1) return fail("edge count is not vertices - 1");
    std::vector<int> comp(V);
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
    for (auto& [a, b] : t.edges) {
        if (a < 0 || b < 0 || a >= V || b >= V || a == b) return fail("bad edge");
        if (find(a) == find(b)) return fail("graph has a cycle");
        comp[find(a)] = find(b);
    }
    for (int v = 0; v < V; ++v)
        if (t.vertex_groups[v].empty() && t.degree(v) < 3) return fail("trivial vertex of degree < 3", v);
    std::vector<int> letters;
    for (int v = 0; v < V; ++v) {
        if (t.vertex_groups[v].empty()) continue;
        CoreGraph g = CoreGraph::from_generators(n, t.vertex_groups[v]);
        try {
            auto ff = is_free_factor(g);
            if (ff.verdict != Verdict::Yes)
                return fail("vertex group is not a free factor (" + to_string(ff.verdict) + ")", v);
        } catch (const std::invalid_argument&) {
            return fail("vertex group has a free part", v);
        }
        auto l = g.loop_letters();
        letters.insert(letters.end(), l.begin(), l.end());
    }
    std::sort(letters.begin(), letters.end());
    std::vector<int> expect(n);
    std::iota(expect.begin(), expect.end(), 1);
    if (letters != expect) return fail("vertex group classes are not one of each generator");
    CoreGraph all = CoreGraph::from_generators(n, t.all_generators());
    if (all.vertex_count() != 1 || all.loop_count() != n) return fail("vertex groups do not generate W_n");
    return rep;
}

StarClass StarClass::of(int rank, std::vector<FreeFactorClass> classes) {
    if (classes.empty()) throw std::invalid_argument("a star class needs at least one corank-1 class");
    for (auto& c : classes) {
        if (c.rank != rank) throw std::invalid_argument("rank mismatch in star class");
        if (c.signature != KuroshSignature{rank - 1, 0})
            throw std::invalid_argument("star class entries must be corank-1 free factor classes");
    }
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    if (static_cast<int>(classes.size()) > rank) throw std::invalid_argument("too many corank-1 classes");
    StarClass s;
    s.rank = rank;
    s.k = rank - static_cast<int>(classes.size());
    s.corank1 = std::move(classes);
    return s;
}

std::vector<std::string> StarClass::codes() const {
    std::vector<std::string> out;
    for (auto& c : corank1) out.push_back(c.code);
    return out;
}

StarClass star_class(const SplittingTree& t) {
    int V = t.vertex_count(), n = t.rank;
    if (n < 3) throw std::invalid_argument("splittings require rank >= 3");
    if (V < 2 || t.edge_count() != V - 1) throw std::invalid_argument("not a star");
    int center = -1;
    if (V == 2) {
        center = t.vertex_groups[0].size() >= t.vertex_groups[1].size() ? 0 : 1;
    } else {
        for (int v = 0; v < V; ++v)
            if (t.degree(v) == V - 1) center = v;
    }
    if (center < 0) throw std::invalid_argument("not a star");
    std::vector<FreeFactorClass> classes;
    for (int v = 0; v < V; ++v) {
        if (v == center) continue;
        if (t.vertex_groups[v].size() != 1) throw std::invalid_argument("star leaves must be rank-one factors");
        std::vector<Word> gens;
        for (int u = 0; u < V; ++u)
            if (u != v) gens.insert(gens.end(), t.vertex_groups[u].begin(), t.vertex_groups[u].end());
        classes.push_back(FreeFactorClass::of(n, gens));
    }
    StarClass s = StarClass::of(n, classes);
    if (s.k != static_cast<int>(t.vertex_groups[center].size()))
        throw std::invalid_argument("center rank does not match the number of leaves");
    return s;
}

StarClass act(const Automorphism& f, const StarClass& s) {
    std::vector<FreeFactorClass> out;
    for (auto& c : s.corank1) out.push_back(act(f, c));
    return StarClass::of(s.rank, std::move(out));
}

std::optional<Word> complement_in(const CoreGraph& z, const CoreGraph& d) {
    int n = d.rank();
    auto dsig = kurosh_signature(d);
    if (dsig.r != 0) return std::nullopt;
    int m = dsig.k;  // rank of D as a free product of Z/2
    // Basis of D and the loop index of each (vertex, letter).
    std::vector<Word> basis;
    std::vector<int> loop_index(d.vertex_count() * n, -1);
    for (int v = 0; v < d.vertex_count(); ++v)
        for (int i = 1; i <= n; ++i)
            if (d.next(v, i) == v) {
                loop_index[v * n + i - 1] = static_cast<int>(basis.size()) + 1;
                basis.push_back(d.path_to(v) * Word::generator(n, i) * d.path_to(v).inverse());
            }
    // Rewrite the generators of Z in the basis of D.
    std::vector<Word> rewritten;
    for (auto& g : z.generators_from_core()) {
        Word r(m);
        int v = 0;
        for (int x : g.letters()) {
            int w = d.next(v, x);
            if (w == CoreGraph::kNone) return std::nullopt;
            if (w == v) r.push(loop_index[v * n + x - 1]);
            v = w;
        }
        if (v != 0) return std::nullopt;
        rewritten.push_back(r);
    }
    CoreGraph zc = CoreGraph::from_generators(m, rewritten);
    auto zsig = kurosh_signature(zc);
    if (zsig.r != 0 || zsig.k != m - 1) return std::nullopt;
    auto letters = zc.loop_letters();
    std::sort(letters.begin(), letters.end());
    int missing = -1;
    for (int c = 1, p = 0; c <= m; ++c) {
        if (p < static_cast<int>(letters.size()) && letters[p] == c) {
            ++p;
            continue;
        }
        if (missing >= 0) return std::nullopt;
        missing = c;
    }
    if (missing < 0) return std::nullopt;
    // The complement's stem must stay inside the core of Z; try every vertex.
    for (int v = 0; v < zc.vertex_count(); ++v) {
        Word q = zc.path_to(v);
        Word cand = q * Word::generator(m, missing) * q.inverse();
        auto gens = rewritten;
        gens.push_back(cand);
        CoreGraph all = CoreGraph::from_generators(m, gens);
        if (all.vertex_count() != 1 || all.loop_count() != m) continue;
        Word t = substitute(cand, basis);
        auto zg = z.generators_from_core();
        zg.push_back(t);
        if (same_subgroup(CoreGraph::from_generators(n, zg), d)) return t;
    }
    return std::nullopt;
}

std::optional<Word> complement(const FreeFactorClass& a) {
    int n = a.rank;
    std::vector<Word> gens;
    for (int i = 1; i <= n; ++i) gens.push_back(Word::generator(n, i));
    return complement_in(a.core(), CoreGraph::from_generators(n, gens));
}

SplittingTree one_edge_splitting(const FreeFactorClass& a) {
    auto t = complement(a);
    if (!t) throw std::invalid_argument("class is not a corank-1 free factor");
    SplittingTree tree;
    tree.rank = a.rank;
    tree.vertex_groups = {a.generators, {*t}};
    tree.edges = {{0, 1}};
    return tree;
}

std::optional<RefineResult> refine(const std::vector<FreeFactorClass>& input) {
    if (input.empty()) throw std::invalid_argument("refine needs at least one class");
    int n = input.front().rank;
    StarClass target = StarClass::of(n, input);
    const auto& classes = target.corank1;
    int m = static_cast<int>(classes.size());

    auto t1 = complement(classes[0]);
    if (!t1) return std::nullopt;
    // Align every class so that it contains t1.
    std::vector<CoreGraph> aligned{classes[0].core()};
    for (int j = 1; j < m; ++j) {
        CoreGraph cj = classes[j].core();
        auto g = conjugate_into(cj, *t1);
        if (!g) return std::nullopt;
        Word gi = g->inverse();
        std::vector<Word> gens;
        for (auto& x : classes[j].generators) gens.push_back(*g * x * gi);
        aligned.push_back(CoreGraph::from_generators(n, gens));
    }
    auto intersect_except = [&](int skip) {
        std::optional<CoreGraph> acc;
        for (int j = 0; j < m; ++j) {
            if (j == skip) continue;
            acc = acc ? intersect(*acc, aligned[j]) : aligned[j];
        }
        return *acc;
    };
    CoreGraph z = intersect_except(-1);
    if (kurosh_signature(z) != KuroshSignature{n - m, 0}) return std::nullopt;
    std::vector<Word> leaves{*t1};
    for (int i = 1; i < m; ++i) {
        auto s = complement_in(z, intersect_except(i));
        if (!s) return std::nullopt;
        leaves.push_back(*s);
    }
    RefineResult res;
    res.cls = target;
    res.witness.rank = n;
    res.witness.vertex_groups.push_back(z.generators_from_core());
    for (int i = 0; i < m; ++i) {
        res.witness.vertex_groups.push_back({leaves[i]});
        res.witness.edges.push_back({0, i + 1});
    }
    CoreGraph all = CoreGraph::from_generators(n, res.witness.all_generators());
    if (all.vertex_count() != 1 || all.loop_count() != n) return std::nullopt;
    for (int i = 0; i < m; ++i) {
        std::vector<Word> gens = res.witness.vertex_groups[0];
        for (int j = 0; j < m; ++j)
            if (j != i) gens.push_back(leaves[j]);
        if (!(FreeFactorClass::of(n, gens) == classes[i])) return std::nullopt;
    }
    return res;
}

RefineResult refine_or_throw(const std::vector<FreeFactorClass>& classes) {
    auto r = refine(classes);
    if (!r) throw IncompatibleError("one-edge splittings are not pairwise compatible");
    return *r;
}

SplittingTree star_tree(const StarClass& s) { return refine_or_throw(s.corank1).witness; }

std::optional<RefineResult> compatible_one_edge(const FreeFactorClass& a, const FreeFactorClass& b) {
    if (a == b) throw std::invalid_argument("compatible_one_edge requires distinct classes");
    return refine({a, b});
}

bool is_compatible(const StarClass& s, const StarClass& t) {
    if (s.rank != t.rank) throw std::invalid_argument("rank mismatch");
    std::vector<FreeFactorClass> u = s.corank1;
    u.insert(u.end(), t.corank1.begin(), t.corank1.end());
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    if (static_cast<int>(u.size()) > s.rank) return false;
    return refine(u).has_value();
}

bool refines(const StarClass& s, const StarClass& t) {
    if (s.rank != t.rank) throw std::invalid_argument("rank mismatch");
    if (t.corank1.size() >= s.corank1.size()) return false;
    return std::includes(s.corank1.begin(), s.corank1.end(), t.corank1.begin(), t.corank1.end());
}

FreeFactorSystem ffs_of(const SplittingTree& t) {
    FreeFactorSystem f;
    for (auto& g : t.vertex_groups)
        if (!g.empty()) f.factors.push_back(FreeFactorClass::of(t.rank, g));
    std::sort(f.factors.begin(), f.factors.end());
    return f;
}

bool ffs_leq(const FreeFactorSystem& a, const FreeFactorSystem& b) {
    for (auto& fa : a.factors) {
        CoreGraph ca = fa.core();
        bool inside = false;
        for (auto& fb : b.factors)
            if (conjugate_into_subgroup(ca, fb.core())) {
                inside = true;
                break;
            }
        if (!inside) return false;
    }
    return true;
}

}  // namespace ucox
