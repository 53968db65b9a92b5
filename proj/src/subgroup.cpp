#include "ucox/subgroup.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace ucox {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (b < a) std::swap(a, b);
        parent[b] = a;
        return true;
    }
};

struct RawEdge {
    int u, letter, v;
};

// Vertices of the cyclic core (hair pruned, base included).
std::vector<char> cyclic_mask(const CoreGraph& g) {
    int V = g.vertex_count(), n = g.rank();
    std::vector<char> alive(V, 1);
    std::vector<int> deg(V, 0);
    for (int v = 0; v < V; ++v) deg[v] = g.degree(v);
    auto is_hair = [&](int v) {
        if (deg[v] != 1) return false;
        for (int i = 1; i <= n; ++i) {
            int w = g.next(v, i);
            if (w != CoreGraph::kNone && alive[w]) return w != v;
        }
        return false;
    };
    std::deque<int> queue;
    for (int v = 0; v < V; ++v)
        if (deg[v] == 0 || is_hair(v)) queue.push_back(v);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (!alive[v] || !(deg[v] == 0 || is_hair(v))) continue;
        alive[v] = 0;
        for (int i = 1; i <= n; ++i) {
            int w = g.next(v, i);
            if (w == CoreGraph::kNone || w == v || !alive[w]) continue;
            if (--deg[w] <= 1) queue.push_back(w);
        }
    }
    return alive;
}

int first_alive(const std::vector<char>& mask) {
    for (std::size_t v = 0; v < mask.size(); ++v)
        if (mask[v]) return static_cast<int>(v);
    return -1;
}

// BFS encoding of the masked graph from start; entry = BFS index or -1.
std::vector<int> bfs_encoding(const CoreGraph& g, const std::vector<char>& mask, int start) {
    int n = g.rank();
    std::vector<int> index(g.vertex_count(), -1), order{start}, enc;
    index[start] = 0;
    for (std::size_t h = 0; h < order.size(); ++h) {
        int v = order[h];
        for (int i = 1; i <= n; ++i) {
            int w = g.next(v, i);
            if (w == CoreGraph::kNone || !mask[w]) {
                enc.push_back(-1);
                continue;
            }
            if (index[w] < 0) {
                index[w] = static_cast<int>(order.size());
                order.push_back(w);
            }
            enc.push_back(index[w]);
        }
    }
    return enc;
}

}  // namespace

CoreGraph CoreGraph::normalized(int rank, int vertices, const std::vector<int>& table, int base,
                                bool prune_base) {
    // Prune hair: vertices whose only edge is a single non-loop edge.
    std::vector<int> tab = table;
    std::vector<char> alive(vertices, 1);
    auto degree = [&](int v) {
        int d = 0;
        for (int i = 0; i < rank; ++i) d += tab[v * rank + i] != kNone;
        return d;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < vertices; ++v) {
            if (!alive[v] || (v == base && !prune_base)) continue;
            int d = degree(v);
            bool hair = d == 0;
            if (d == 1) {
                for (int i = 0; i < rank; ++i) {
                    int w = tab[v * rank + i];
                    if (w != kNone) hair = w != v;
                }
            }
            if (!hair) continue;
            alive[v] = 0;
            for (int i = 0; i < rank; ++i) {
                int w = tab[v * rank + i];
                if (w != kNone && w != v) tab[w * rank + i] = kNone;
                tab[v * rank + i] = kNone;
            }
            changed = true;
        }
    }
    CoreGraph g;
    g.rank_ = rank;
    int start = alive[base] ? base : -1;
    if (start < 0)
        for (int v = 0; v < vertices && start < 0; ++v)
            if (alive[v]) start = v;
    if (start < 0) return g;
    std::vector<int> index(vertices, -1), order{start};
    index[start] = 0;
    for (std::size_t h = 0; h < order.size(); ++h) {
        int v = order[h];
        for (int i = 0; i < rank; ++i) {
            int w = tab[v * rank + i];
            if (w != kNone && index[w] < 0) {
                index[w] = static_cast<int>(order.size());
                order.push_back(w);
            }
        }
    }
    g.vertices_ = static_cast<int>(order.size());
    g.table_.assign(g.vertices_ * rank, kNone);
    for (int k = 0; k < g.vertices_; ++k)
        for (int i = 0; i < rank; ++i) {
            int w = tab[order[k] * rank + i];
            g.table_[k * rank + i] = w == kNone ? kNone : index[w];
        }
    return g;
}

CoreGraph CoreGraph::from_generators(int rank, const std::vector<Word>& generators) {
    if (rank < 1) throw std::invalid_argument("rank must be positive");
    std::vector<RawEdge> edges;
    int V = 1;
    for (auto& w : generators) {
        if (w.rank() != rank) throw std::invalid_argument("generator rank mismatch");
        if (w.empty()) throw std::invalid_argument("empty generator word");
        int prev = 0;
        for (std::size_t k = 0; k < w.size(); ++k) {
            int nxt = k + 1 == w.size() ? 0 : V++;
            edges.push_back({prev, w[k], nxt});
            prev = nxt;
        }
    }
    UnionFind uf(V);
    bool changed = true;
    while (changed) {
        changed = false;
        std::unordered_map<long long, int> slot;
        auto see = [&](int u, int letter, int v) {
            long long key = static_cast<long long>(uf.find(u)) * (rank + 1) + letter;
            auto [it, fresh] = slot.emplace(key, v);
            if (!fresh && uf.unite(it->second, v)) changed = true;
        };
        for (auto& e : edges) {
            see(e.u, e.letter, e.v);
            see(e.v, e.letter, e.u);
        }
    }
    std::vector<int> table(V * rank, kNone);
    for (auto& e : edges) {
        int u = uf.find(e.u), v = uf.find(e.v);
        table[u * rank + e.letter - 1] = v;
        table[v * rank + e.letter - 1] = u;
    }
    CoreGraph g = normalized(rank, V, table, uf.find(0), false);
    if (g.vertices_ == 0) {
        g.vertices_ = 1;
        g.table_.assign(rank, kNone);
    }
    g.generators_ = generators;
    return g;
}

CoreGraph CoreGraph::from_table(int rank, int vertices, std::vector<int> table, int base) {
    if (static_cast<int>(table.size()) != vertices * rank) throw std::invalid_argument("bad table size");
    for (int v = 0; v < vertices; ++v)
        for (int i = 0; i < rank; ++i) {
            int w = table[v * rank + i];
            if (w == kNone) continue;
            if (w < 0 || w >= vertices || table[w * rank + i] != v)
                throw std::invalid_argument("transition table is not an involutive graph");
        }
    CoreGraph g = normalized(rank, vertices, table, base, false);
    if (g.vertices_ == 0) {
        g.vertices_ = 1;
        g.table_.assign(rank, kNone);
    }
    g.generators_ = g.generators_from_core();
    return g;
}

int CoreGraph::loop_count() const {
    int c = 0;
    for (int v = 0; v < vertices_; ++v)
        for (int i = 1; i <= rank_; ++i) c += next(v, i) == v;
    return c;
}

int CoreGraph::edge_count() const {
    int c = 0;
    for (int v = 0; v < vertices_; ++v)
        for (int i = 1; i <= rank_; ++i) {
            int w = next(v, i);
            c += w != kNone && w > v;
        }
    return c;
}

int CoreGraph::degree(int v) const {
    int d = 0;
    for (int i = 1; i <= rank_; ++i) d += next(v, i) != kNone;
    return d;
}

std::vector<int> CoreGraph::loop_letters() const {
    std::vector<int> out;
    for (int v = 0; v < vertices_; ++v)
        for (int i = 1; i <= rank_; ++i)
            if (next(v, i) == v) out.push_back(i);
    return out;
}

Word CoreGraph::path_to(int v) const {
    // BFS tree in letter order; the parent of a vertex is its BFS discoverer.
    std::vector<int> parent(vertices_, -1), letter(vertices_, 0), order{0};
    parent[0] = 0;
    for (std::size_t h = 0; h < order.size() && parent[v] < 0; ++h) {
        int u = order[h];
        for (int i = 1; i <= rank_; ++i) {
            int w = next(u, i);
            if (w != kNone && parent[w] < 0) {
                parent[w] = u;
                letter[w] = i;
                order.push_back(w);
            }
        }
    }
    std::vector<int> rev;
    for (int u = v; u != 0; u = parent[u]) rev.push_back(letter[u]);
    std::reverse(rev.begin(), rev.end());
    return Word::reduce(rank_, rev);
}

std::vector<Word> CoreGraph::generators_from_core() const {
    std::vector<int> parent(vertices_, -1), letter(vertices_, 0), order{0};
    if (vertices_ == 0) return {};
    parent[0] = 0;
    for (std::size_t h = 0; h < order.size(); ++h) {
        int u = order[h];
        for (int i = 1; i <= rank_; ++i) {
            int w = next(u, i);
            if (w != kNone && parent[w] < 0) {
                parent[w] = u;
                letter[w] = i;
                order.push_back(w);
            }
        }
    }
    std::vector<Word> path(vertices_, Word(rank_));
    for (std::size_t h = 1; h < order.size(); ++h) {
        int w = order[h];
        path[w] = path[parent[w]] * Word::generator(rank_, letter[w]);
    }
    std::vector<Word> gens;
    for (int v = 0; v < vertices_; ++v)
        for (int i = 1; i <= rank_; ++i) {
            int w = next(v, i);
            if (w == kNone || w < v) continue;
            bool tree = (parent[w] == v && letter[w] == i && w != 0) || (parent[v] == w && letter[v] == i && v != 0);
            if (tree && w != v) continue;
            gens.push_back(path[v] * Word::generator(rank_, i) * path[w].inverse());
        }
    return gens;
}

bool member(const CoreGraph& core, const Word& w) {
    if (w.rank() != core.rank()) throw std::invalid_argument("rank mismatch in membership");
    int v = 0;
    for (int x : w.letters()) {
        v = core.next(v, x);
        if (v == CoreGraph::kNone) return false;
    }
    return v == 0;
}

KuroshSignature kurosh_signature(const CoreGraph& core) {
    return {core.loop_count(), core.edge_count() - core.vertex_count() + 1};
}

bool same_subgroup(const CoreGraph& a, const CoreGraph& b) { return a == b; }

bool contains(const CoreGraph& big, const CoreGraph& small) {
    for (auto& g : small.generators_from_core())
        if (!member(big, g)) return false;
    return true;
}

CoreGraph cyclic_core(const CoreGraph& core) {
    return CoreGraph::normalized(core.rank(), core.vertex_count(), core.table(), 0, true);
}

std::string canonical_code(const CoreGraph& core) {
    auto mask = cyclic_mask(core);
    std::vector<int> best;
    for (int s = 0; s < core.vertex_count(); ++s) {
        if (!mask[s]) continue;
        auto enc = bfs_encoding(core, mask, s);
        if (best.empty() || enc < best) best = std::move(enc);
    }
    std::string out = std::to_string(core.rank()) + ":";
    int n = core.rank();
    for (std::size_t k = 0; k < best.size(); ++k) {
        if (k) out += (k % n == 0) ? ';' : ',';
        out += best[k] < 0 ? std::string("-") : std::to_string(best[k]);
    }
    return out;
}

int code_size(const std::string& code) {
    auto colon = code.find(':');
    if (colon == std::string::npos || colon + 1 == code.size()) return 0;
    return 1 + static_cast<int>(std::count(code.begin() + colon, code.end(), ';'));
}

CoreGraph decode_code(const std::string& code) {
    auto colon = code.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("malformed canonical code");
    int rank = std::stoi(code.substr(0, colon));
    std::vector<int> table;
    std::string body = code.substr(colon + 1);
    std::string tok;
    for (char c : body + ",") {
        if (c == ',' || c == ';') {
            if (tok.empty()) throw std::invalid_argument("malformed canonical code");
            table.push_back(tok == "-" ? CoreGraph::kNone : std::stoi(tok));
            tok.clear();
        } else {
            tok += c;
        }
    }
    if (body.empty()) return CoreGraph::from_generators(rank, {});
    if (table.size() % rank != 0) throw std::invalid_argument("malformed canonical code");
    return CoreGraph::from_table(rank, static_cast<int>(table.size()) / rank, table, 0);
}

namespace {

// Tries to extend a0 -> w to a label-preserving map from the masked part of A
// into B. If iso, the map must be a bijection onto the masked part of B.
bool extend_map(const CoreGraph& a, const std::vector<char>& ma, int a0, const CoreGraph& b,
                const std::vector<char>& mb, int w, bool iso) {
    int n = a.rank();
    std::vector<int> img(a.vertex_count(), -1), order{a0};
    std::vector<char> used(b.vertex_count(), 0);
    img[a0] = w;
    used[w] = 1;
    for (std::size_t h = 0; h < order.size(); ++h) {
        int u = order[h];
        for (int i = 1; i <= n; ++i) {
            int ua = a.next(u, i);
            int ub = b.next(img[u], i);
            bool has_a = ua != CoreGraph::kNone && ma[ua];
            bool has_b = ub != CoreGraph::kNone && (!iso || mb[ub]);
            if (iso && has_a != has_b) return false;
            if (!has_a) continue;
            if (!has_b) return false;
            if (img[ua] < 0) {
                if (iso && used[ub]) return false;
                img[ua] = ub;
                used[ub] = 1;
                order.push_back(ua);
            } else if (img[ua] != ub) {
                return false;
            }
        }
    }
    if (iso) {
        int cb = 0;
        for (char c : mb) cb += c;
        if (cb != static_cast<int>(order.size())) return false;
    }
    return true;
}

}  // namespace

std::optional<Word> conjugate_subgroups(const CoreGraph& a, const CoreGraph& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch in conjugacy test");
    auto ma = cyclic_mask(a), mb = cyclic_mask(b);
    int a0 = first_alive(ma);
    if (a0 < 0) {
        if (first_alive(mb) < 0) return Word(a.rank());
        return std::nullopt;
    }
    Word pa_inv = a.path_to(a0).inverse();
    auto ga = a.generators_from_core();
    auto gb = b.generators_from_core();
    for (int w = 0; w < b.vertex_count(); ++w) {
        if (!mb[w] || !extend_map(a, ma, a0, b, mb, w, true)) continue;
        Word g = b.path_to(w) * pa_inv;
        Word gi = g.inverse();
        bool ok = true;
        for (auto& x : ga) ok = ok && member(b, g * x * gi);
        for (auto& y : gb) ok = ok && member(a, gi * y * g);
        if (ok) return g;
    }
    return std::nullopt;
}

std::optional<Word> conjugate_into_subgroup(const CoreGraph& a, const CoreGraph& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch in conjugacy test");
    auto ma = cyclic_mask(a), mb = cyclic_mask(b);
    int a0 = first_alive(ma);
    if (a0 < 0) return Word(a.rank());
    Word pa_inv = a.path_to(a0).inverse();
    auto ga = a.generators_from_core();
    for (int w = 0; w < b.vertex_count(); ++w) {
        if (!mb[w] || !extend_map(a, ma, a0, b, mb, w, false)) continue;
        Word g = b.path_to(w) * pa_inv;
        Word gi = g.inverse();
        bool ok = true;
        for (auto& x : ga) ok = ok && member(b, g * x * gi);
        if (ok) return g;
    }
    return std::nullopt;
}

std::optional<Word> conjugate_into(const CoreGraph& a, const Word& t) {
    auto inv = as_involution(t);
    if (!inv) throw std::invalid_argument("conjugate_into expects an involution");
    for (int v = 0; v < a.vertex_count(); ++v) {
        if (a.next(v, inv->letter) != v) continue;
        Word g = inv->conjugator * a.path_to(v).inverse();
        if (member(a, g.inverse() * t * g)) return g;
    }
    return std::nullopt;
}

CoreGraph intersect(const CoreGraph& a, const CoreGraph& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch in intersection");
    int n = a.rank();
    std::map<std::pair<int, int>, int> id;
    std::vector<std::pair<int, int>> states{{0, 0}};
    id[{0, 0}] = 0;
    std::vector<int> table;
    for (std::size_t h = 0; h < states.size(); ++h) {
        auto [u, v] = states[h];
        for (int i = 1; i <= n; ++i) {
            int ua = a.next(u, i), vb = b.next(v, i);
            int t = CoreGraph::kNone;
            if (ua != CoreGraph::kNone && vb != CoreGraph::kNone) {
                auto [it, fresh] = id.emplace(std::make_pair(ua, vb), static_cast<int>(states.size()));
                if (fresh) states.push_back({ua, vb});
                t = it->second;
            }
            table.push_back(t);
        }
    }
    CoreGraph g = CoreGraph::normalized(n, static_cast<int>(states.size()), table, 0, false);
    if (g.vertices_ == 0) {
        g.vertices_ = 1;
        g.table_.assign(n, CoreGraph::kNone);
    }
    g.generators_ = g.generators_from_core();
    return g;
}

std::string core_to_dot(const CoreGraph& core) {
    std::ostringstream os;
    os << "graph core {\n";
    for (int v = 0; v < core.vertex_count(); ++v)
        os << "  v" << v << (v == 0 ? " [shape=doublecircle];\n" : " [shape=circle];\n");
    for (int v = 0; v < core.vertex_count(); ++v)
        for (int i = 1; i <= core.rank(); ++i) {
            int w = core.next(v, i);
            if (w != CoreGraph::kNone && w >= v)
                os << "  v" << v << " -- v" << w << " [label=\"" << i << "\"];\n";
        }
    os << "}\n";
    return os.str();
}

FreeFactorClass FreeFactorClass::of(const CoreGraph& core) {
    FreeFactorClass c;
    c.rank = core.rank();
    c.code = canonical_code(core);
    c.signature = kurosh_signature(core);
    c.generators = core.generators_from_core();
    return c;
}

FreeFactorClass FreeFactorClass::of(int rank, const std::vector<Word>& generators) {
    return of(CoreGraph::from_generators(rank, generators));
}

FreeFactorClass FreeFactorClass::from_code(const std::string& code) { return of(decode_code(code)); }

FreeFactorClass act(const Automorphism& f, const FreeFactorClass& a) {
    return FreeFactorClass::of(a.rank, f.apply(a.generators));
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "yes";
        case Verdict::No: return "no";
        default: return "inconclusive";
    }
}

std::vector<GeneratorMove> all_partial_conjugations(int rank) {
    std::vector<GeneratorMove> out;
    for (int i = 1; i <= rank; ++i) {
        std::vector<int> others;
        for (int j = 1; j <= rank; ++j)
            if (j != i) others.push_back(j);
        for (unsigned mask = 1; mask < (1u << others.size()); ++mask) {
            PartialConj pc{{}, i};
            for (std::size_t b = 0; b < others.size(); ++b)
                if (mask & (1u << b)) pc.set.push_back(others[b]);
            out.push_back(pc);
        }
    }
    return out;
}

namespace {

struct Measured {
    long metric;
    std::string key;
};

struct Descent {
    bool reached = false;
    bool closed = false;  // plateau fully explored when not reached
    std::vector<GeneratorMove> path;  // applied in order
    std::vector<Word> state;
};

std::vector<Word> apply_all(const GeneratorMove& m, const std::vector<Word>& ws) {
    std::vector<Word> out;
    out.reserve(ws.size());
    for (auto& w : ws) out.push_back(apply_move(m, w));
    return out;
}

Descent descend(std::vector<Word> start, const std::function<Measured(const std::vector<Word>&)>& measure,
                long target, const std::vector<GeneratorMove>& moves, int max_depth, int max_states) {
    Descent d;
    d.state = std::move(start);
    long cur = measure(d.state).metric;
    while (cur > target) {
        int best = -1;
        long best_metric = cur;
        std::vector<Word> best_state;
        for (std::size_t k = 0; k < moves.size(); ++k) {
            auto s = apply_all(moves[k], d.state);
            long m = measure(s).metric;
            if (m < best_metric) {
                best_metric = m;
                best = static_cast<int>(k);
                best_state = std::move(s);
            }
        }
        if (best >= 0) {
            d.state = std::move(best_state);
            d.path.push_back(moves[best]);
            cur = best_metric;
            continue;
        }
        // Breadth-first search of the plateau for a strictly decreasing move.
        std::set<std::string> seen{measure(d.state).key};
        std::deque<std::pair<std::vector<Word>, std::vector<GeneratorMove>>> queue;
        queue.push_back({d.state, {}});
        bool found = false, truncated = false;
        while (!queue.empty() && !found) {
            auto [s, p] = std::move(queue.front());
            queue.pop_front();
            for (auto& mv : moves) {
                auto s2 = apply_all(mv, s);
                Measured m = measure(s2);
                if (m.metric < cur) {
                    d.state = std::move(s2);
                    d.path.insert(d.path.end(), p.begin(), p.end());
                    d.path.push_back(mv);
                    cur = m.metric;
                    found = true;
                    break;
                }
                if (m.metric != cur || !seen.insert(m.key).second) continue;
                if (static_cast<int>(p.size()) + 1 >= max_depth ||
                    static_cast<int>(seen.size()) > max_states) {
                    truncated = true;
                    continue;
                }
                auto p2 = p;
                p2.push_back(mv);
                queue.push_back({std::move(s2), std::move(p2)});
            }
        }
        if (!found) {
            d.closed = !truncated;
            return d;
        }
    }
    d.reached = true;
    return d;
}

}  // namespace

FreeFactorResult is_free_factor(const CoreGraph& core, const FreeFactorOptions& opts) {
    int n = core.rank();
    auto sig = kurosh_signature(core);
    if (sig.r > 0) throw std::invalid_argument("subgroup has a free part; not a free product of Z/2 factors");
    FreeFactorResult res;
    auto letters = core.loop_letters();
    std::sort(letters.begin(), letters.end());
    if (std::adjacent_find(letters.begin(), letters.end()) != letters.end()) {
        res.verdict = Verdict::No;
        return res;
    }
    auto measure = [n](const std::vector<Word>& gens) {
        CoreGraph g = CoreGraph::from_generators(n, gens);
        std::string key(reinterpret_cast<const char*>(g.table().data()), g.table().size() * sizeof(int));
        return Measured{g.vertex_count(), key};
    };
    Descent d = descend(core.generators_from_core(), measure, 1, all_partial_conjugations(n), opts.max_depth,
                        opts.max_plateau);
    if (!d.reached) {
        res.verdict = d.closed ? Verdict::No : Verdict::Inconclusive;
        return res;
    }
    std::vector<GeneratorMove> mv(d.path.rbegin(), d.path.rend());
    res.witness = Automorphism::from_moves(n, std::move(mv));
    res.moves_used = static_cast<int>(d.path.size());
    res.standard_letters = CoreGraph::from_generators(n, d.state).loop_letters();
    std::sort(res.standard_letters.begin(), res.standard_letters.end());
    res.verdict = Verdict::Yes;
    return res;
}

std::optional<Automorphism> reduce_basis(const std::vector<Word>& basis) {
    if (basis.empty()) throw std::invalid_argument("empty basis");
    int n = basis.front().rank();
    if (static_cast<int>(basis.size()) != n) return std::nullopt;
    for (auto& b : basis)
        if (!is_involution(b)) return std::nullopt;
    auto measure = [](const std::vector<Word>& ws) {
        long total = 0;
        std::string key;
        for (auto& w : ws) {
            total += static_cast<long>(w.size());
            key += w.str() + "|";
        }
        return Measured{total, key};
    };
    Descent d = descend(basis, measure, n, all_partial_conjugations(n), 4, 4000);
    if (!d.reached) return std::nullopt;
    // Sort the letters back into place with swaps.
    for (int i = 1; i <= n; ++i) {
        int j = d.state[i - 1][0];
        if (j == i) continue;
        GeneratorMove s = Swap{std::min(i, j), std::max(i, j)};
        d.state = apply_all(s, d.state);
        d.path.push_back(s);
    }
    Automorphism beta = Automorphism::from_moves(n, d.path);
    if (beta.images() != basis) return std::nullopt;
    return beta;
}

}  // namespace ucox
