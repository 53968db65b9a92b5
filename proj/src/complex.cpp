#include "ucox/complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ucox/io.hpp"
#include "ucox/parallel.hpp"

namespace ucox {

std::string to_string(ComplexKind kind) {
    switch (kind) {
        case ComplexKind::L: return "L";
        case ComplexKind::Y: return "Y";
        case ComplexKind::Xtilde: return "Xtilde";
        case ComplexKind::X: return "X";
        case ComplexKind::Xprime: return "Xprime";
    }
    return "?";
}

ComplexKind parse_kind(const std::string& text) {
    for (auto k : {ComplexKind::L, ComplexKind::Y, ComplexKind::Xtilde, ComplexKind::X, ComplexKind::Xprime})
        if (to_string(k) == text) return k;
    throw std::invalid_argument("unknown complex kind '" + text + "' (expected L, Y, Xtilde, X, Xprime)");
}

std::string to_string(TriangleType t) { return t == TriangleType::Wn3 ? "Wn3" : "Wn4"; }

bool admissible(ComplexKind kind, const StarClass& s) {
    int n = s.rank;
    switch (kind) {
        case ComplexKind::L: return s.k == 0 || s.k == 1;
        case ComplexKind::Y: return s.k == n - 1;
        case ComplexKind::Xtilde:
        case ComplexKind::X: return s.k == n - 2;
        case ComplexKind::Xprime: return s.k >= 0 && s.k <= n - 2;
    }
    return false;
}

namespace {

std::vector<FreeFactorClass> set_union(const std::vector<FreeFactorClass>& a, const std::vector<FreeFactorClass>& b) {
    std::vector<FreeFactorClass> u;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
    return u;
}

void require_admissible(ComplexKind kind, const StarClass& s) {
    if (!admissible(kind, s))
        throw std::invalid_argument("star with center rank " + std::to_string(s.k) + " is not a vertex of " +
                                    to_string(kind));
}

}  // namespace

bool adjacent(ComplexKind kind, const StarClass& s, const StarClass& t) {
    require_admissible(kind, s);
    require_admissible(kind, t);
    if (s.rank != t.rank) throw std::invalid_argument("rank mismatch");
    if (s == t) return false;
    switch (kind) {
        case ComplexKind::L:
        case ComplexKind::Xprime: return refines(s, t) || refines(t, s);
        case ComplexKind::Y:
        case ComplexKind::Xtilde: return is_compatible(s, t);
        case ComplexKind::X:
            if (set_union(s.corank1, t.corank1).size() != 3) return false;
            return is_compatible(s, t);
    }
    return false;
}

TriangleType triangle_type(const StarClass& s1, const StarClass& s2, const StarClass& s3) {
    if (!adjacent(ComplexKind::X, s1, s2) || !adjacent(ComplexKind::X, s2, s3) || !adjacent(ComplexKind::X, s1, s3))
        throw std::invalid_argument("triangle vertices are not pairwise adjacent in X");
    auto u = set_union(set_union(s1.corank1, s2.corank1), s3.corank1);
    if (u.size() == 3) return TriangleType::Wn3;
    if (u.size() == 4) return TriangleType::Wn4;
    throw std::logic_error("pairwise adjacent triangle with union of size " + std::to_string(u.size()));
}

namespace {

void words_avoiding(int rank, int avoid, int max_len, Word& cur, std::vector<Word>& out) {
    if (!cur.empty()) out.push_back(cur);
    if (static_cast<int>(cur.size()) == max_len) return;
    for (int x = 1; x <= rank; ++x) {
        if (x == avoid || (!cur.empty() && cur.back() == x)) continue;
        Word next = cur;
        next.push(x);
        words_avoiding(rank, avoid, max_len, next, out);
    }
}

std::vector<Automorphism> generation_moves(int n, int conj_len) {
    std::vector<Automorphism> moves;
    for (int i = 1; i <= n; ++i) {
        std::vector<Word> ws;
        Word empty(n);
        words_avoiding(n, i, conj_len, empty, ws);
        for (auto& w : ws) moves.push_back(conj_generator(i, w));
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) moves.push_back(swap_aut(n, i, j));
    return moves;
}

// Corank-1 classes reachable from the seeds within the complexity bound.
std::vector<FreeFactorClass> candidate_pool(const StarClass& s, const BallOptions& opts, bool& truncated) {
    int n = s.rank;
    std::map<std::string, FreeFactorClass> pool;
    std::vector<FreeFactorClass> frontier;
    auto add = [&](const FreeFactorClass& c) {
        if (pool.emplace(c.code, c).second) frontier.push_back(c);
    };
    for (auto& c : s.corank1) add(c);
    for (int j = 1; j <= n; ++j) {
        std::vector<Word> gens;
        for (int i = 1; i <= n; ++i)
            if (i != j) gens.push_back(Word::generator(n, i));
        add(FreeFactorClass::of(n, gens));
    }
    auto moves = generation_moves(n, opts.conj_len);
    for (int step = 0; step < opts.depth; ++step) {
        std::vector<std::vector<Word>> images;
        for (auto& c : frontier)
            for (auto& f : moves) images.push_back(f.apply(c.generators));
        frontier.clear();
        for (auto& c : batch_classes(n, images)) {
            if (c.complexity() > opts.complexity) {
                truncated = true;
                continue;
            }
            add(c);
        }
    }
    std::vector<FreeFactorClass> out;
    for (auto& [code, c] : pool)
        if (!std::binary_search(s.corank1.begin(), s.corank1.end(), c)) out.push_back(c);
    return out;
}

void finish_ball(BallReport& ball, const BallOptions& opts) {
    int m = static_cast<int>(ball.vertices.size());
    if (!opts.neighbor_edges) {
        for (int j = 1; j < m; ++j) ball.edges.push_back({0, j});
        return;
    }
    auto adj = adjacency_matrix(ball.kind, ball.vertices);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (adj[static_cast<std::size_t>(i) * m + j]) ball.edges.push_back({i, j});
}

}  // namespace

BallReport neighbors_bounded(ComplexKind kind, const StarClass& s, const BallOptions& opts) {
    require_admissible(kind, s);
    int n = s.rank;
    BallReport ball;
    ball.kind = kind;
    ball.center = s;
    ball.complexity_bound = opts.complexity;
    std::set<StarClass> found;
    auto base = s.corank1;

    bool need_pool = !(kind == ComplexKind::L && s.k == 0);
    std::vector<FreeFactorClass> pool;
    if (need_pool) pool = candidate_pool(s, opts, ball.truncated);
    ball.pool_size = static_cast<int>(pool.size());
    auto with = [&](std::vector<FreeFactorClass> classes) { return StarClass::of(n, std::move(classes)); };

    switch (kind) {
        case ComplexKind::Y: {
            auto ok = compatibility_filter(base, pool);
            for (std::size_t q = 0; q < pool.size(); ++q)
                if (ok[q]) found.insert(with({pool[q]}));
            break;
        }
        case ComplexKind::X:
        case ComplexKind::Xtilde: {
            auto ok = compatibility_filter(base, pool);
            std::vector<FreeFactorClass> c;
            for (std::size_t q = 0; q < pool.size(); ++q)
                if (ok[q]) c.push_back(pool[q]);
            for (auto& q : c)
                for (auto& a : base) found.insert(with({a, q}));
            if (kind == ComplexKind::Xtilde && n >= 4) {
                for (std::size_t p = 0; p < c.size(); ++p) {
                    std::vector<FreeFactorClass> ext = base;
                    ext.push_back(c[p]);
                    std::vector<FreeFactorClass> rest(c.begin() + p + 1, c.end());
                    auto ok2 = compatibility_filter(ext, rest);
                    for (std::size_t q = 0; q < rest.size(); ++q)
                        if (ok2[q]) found.insert(with({c[p], rest[q]}));
                }
            }
            break;
        }
        case ComplexKind::L: {
            if (s.k == 0) {
                for (std::size_t d = 0; d < base.size(); ++d) {
                    auto sub = base;
                    sub.erase(sub.begin() + d);
                    found.insert(with(sub));
                }
            } else {
                auto ok = compatibility_filter(base, pool);
                for (std::size_t q = 0; q < pool.size(); ++q) {
                    if (!ok[q]) continue;
                    auto ext = base;
                    ext.push_back(pool[q]);
                    found.insert(with(ext));
                }
            }
            break;
        }
        case ComplexKind::Xprime: {
            int m = static_cast<int>(base.size());
            for (unsigned mask = 1; mask + 1 < (1u << m); ++mask) {
                std::vector<FreeFactorClass> sub;
                for (int b = 0; b < m; ++b)
                    if (mask & (1u << b)) sub.push_back(base[b]);
                if (sub.size() >= 2) found.insert(with(sub));
            }
            // Refinements: extend level by level; a non-refinable set has no refinable superset.
            std::vector<std::vector<FreeFactorClass>> level{base};
            std::vector<std::vector<std::size_t>> last{{}};
            while (!level.empty() && static_cast<int>(level.front().size()) < n) {
                std::vector<std::vector<FreeFactorClass>> next_level;
                std::vector<std::vector<std::size_t>> next_last;
                for (std::size_t e = 0; e < level.size(); ++e) {
                    std::size_t from = last[e].empty() ? 0 : last[e].back() + 1;
                    std::vector<FreeFactorClass> rest(pool.begin() + std::min(from, pool.size()), pool.end());
                    auto ok = compatibility_filter(level[e], rest);
                    for (std::size_t q = 0; q < rest.size(); ++q) {
                        if (!ok[q]) continue;
                        auto ext = level[e];
                        ext.push_back(rest[q]);
                        found.insert(with(ext));
                        auto idx = last[e];
                        idx.push_back(from + q);
                        next_level.push_back(std::move(ext));
                        next_last.push_back(std::move(idx));
                    }
                }
                level = std::move(next_level);
                last = std::move(next_last);
            }
            break;
        }
    }
    found.erase(s);
    ball.vertices.push_back(s);
    ball.vertices.insert(ball.vertices.end(), found.begin(), found.end());
    finish_ball(ball, opts);
    return ball;
}

BallReport induced_ball(ComplexKind kind, std::vector<StarClass> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    BallReport ball;
    ball.kind = kind;
    ball.radius = 0;
    ball.vertices = std::move(vertices);
    for (auto& v : ball.vertices) require_admissible(kind, v);
    finish_ball(ball, BallOptions{});
    return ball;
}

TriangleReport fourth_vertex(const StarClass& s1, const StarClass& s2, const StarClass& s3, const BallOptions& opts) {
    TriangleReport rep;
    rep.type = triangle_type(s1, s2, s3);
    int n = s1.rank;
    auto u = set_union(set_union(s1.corank1, s2.corank1), s3.corank1);
    auto refined = refine_or_throw(u);
    rep.refinement = refined.cls;
    rep.bound = opts.complexity;
    if (rep.type == TriangleType::Wn4 && n >= 5) {
        // Standard basis of the refinement: center z_1..z_{n-4}, leaves l_1..l_4.
        // S4 = <l_c> * <everything else> * <z_1>, where c is the class shared by
        // all three stars.
        std::vector<FreeFactorClass> common;
        std::set_intersection(s1.corank1.begin(), s1.corank1.end(), s2.corank1.begin(), s2.corank1.end(),
                              std::back_inserter(common));
        std::vector<FreeFactorClass> common3;
        std::set_intersection(common.begin(), common.end(), s3.corank1.begin(), s3.corank1.end(),
                              std::back_inserter(common3));
        if (common3.size() != 1) throw std::logic_error("Wn4 triangle without a common collapse");
        int c = static_cast<int>(std::find(u.begin(), u.end(), common3[0]) - u.begin());
        const auto& w = refined.witness;
        const auto& center = w.vertex_groups[0];
        SplittingTree t;
        t.rank = n;
        t.vertex_groups.emplace_back(center.begin() + 1, center.end());
        for (int j = 0; j < static_cast<int>(u.size()); ++j)
            if (j != c) t.vertex_groups[0].push_back(w.vertex_groups[j + 1][0]);
        t.vertex_groups.push_back(w.vertex_groups[c + 1]);
        t.vertex_groups.push_back({center[0]});
        t.edges = {{0, 1}, {0, 2}};
        StarClass s4 = star_class(t);
        for (auto* s : {&s1, &s2, &s3})
            if (!adjacent(ComplexKind::X, s4, *s)) throw std::logic_error("fourth vertex recipe failed");
        rep.fourth = s4;
        return rep;
    }
    // Bounded search among the X-neighbors of s1.
    BallOptions o = opts;
    o.neighbor_edges = false;
    auto ball = neighbors_bounded(ComplexKind::X, s1, o);
    rep.bounded_search = true;
    for (std::size_t v = 1; v < ball.vertices.size(); ++v) {
        const auto& cand = ball.vertices[v];
        ++rep.candidates_checked;
        if (cand == s2 || cand == s3) continue;
        if (adjacent(ComplexKind::X, cand, s2) && adjacent(ComplexKind::X, cand, s3)) {
            rep.fourth = cand;
            break;
        }
    }
    return rep;
}

StarClass simplex_refinement(const std::vector<StarClass>& stars) {
    int k = static_cast<int>(stars.size());
    if (k < 4) throw std::invalid_argument("simplex refinement needs at least 4 stars");
    int n = stars.front().rank;
    if (n < 5) throw std::invalid_argument("simplex refinement needs rank >= 5");
    if (k > n - 1) throw std::invalid_argument("no family of " + std::to_string(k) + " pairwise adjacent stars in rank " +
                                               std::to_string(n));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (!adjacent(ComplexKind::X, stars[i], stars[j]))
                throw std::invalid_argument("stars " + std::to_string(i) + " and " + std::to_string(j) +
                                            " are not adjacent in X");
    std::vector<FreeFactorClass> u;
    for (auto& s : stars) u = set_union(u, s.corank1);
    auto r = refine_or_throw(u);
    if (r.cls.k != n - k - 1) throw std::logic_error("simplex refinement has unexpected center rank");
    return r.cls;
}

std::vector<StarClass> intermediate_stars(const StarClass& s, const FreeFactorClass& s0) {
    if (!std::binary_search(s.corank1.begin(), s.corank1.end(), s0))
        throw std::invalid_argument("s0 is not a corank-1 class of the star");
    std::vector<StarClass> out;
    for (auto& c : s.corank1)
        if (!(c == s0)) out.push_back(StarClass::of(s.rank, {s0, c}));
    return out;
}

StarClass induced_image_X_to_Xprime(const StarClass& s, const FreeFactorClass& s0,
                                    const std::vector<StarClass>& images) {
    auto inter = intermediate_stars(s, s0);
    if (images.size() != inter.size()) throw std::invalid_argument("expected one image per intermediate star");
    for (auto& im : images) require_admissible(ComplexKind::X, im);
    for (std::size_t i = 0; i < images.size(); ++i)
        for (std::size_t j = i + 1; j < images.size(); ++j)
            if (!adjacent(ComplexKind::X, images[i], images[j]))
                throw IncompatibleError("images " + std::to_string(i) + " and " + std::to_string(j) +
                                        " are not adjacent in X");
    std::vector<FreeFactorClass> u;
    for (auto& im : images) u = set_union(u, im.corank1);
    auto r = refine(u);
    if (!r) throw IncompatibleError("images are not jointly refinable");
    if (r->cls.k != s.k)
        throw IncompatibleError("images refine to a W_" + std::to_string(r->cls.k) + "-star, expected W_" +
                                std::to_string(s.k));
    return r->cls;
}

StarClass induced_image_Y_to_L(const std::vector<StarClass>& images) {
    if (images.empty()) throw std::invalid_argument("no images");
    int n = images.front().rank;
    if (static_cast<int>(images.size()) != n && static_cast<int>(images.size()) != n - 1)
        throw std::invalid_argument("expected n or n-1 images");
    std::vector<FreeFactorClass> u;
    for (auto& im : images) {
        require_admissible(ComplexKind::Y, im);
        u = set_union(u, im.corank1);
    }
    if (u.size() != images.size()) throw IncompatibleError("images are not distinct");
    auto r = refine(u);
    if (!r) throw IncompatibleError("images are not pairwise compatible");
    return r->cls;
}

std::string export_ball(const BallReport& ball, const std::string& format) {
    if (format == "json") return ball_to_json(ball).dump(2) + "\n";
    if (format != "dot") throw std::invalid_argument("unknown export format '" + format + "'");
    std::ostringstream os;
    os << "graph " << to_string(ball.kind) << " {\n";
    for (std::size_t v = 0; v < ball.vertices.size(); ++v) {
        const auto& s = ball.vertices[v];
        os << "  s" << v << " [label=\"W_" << s.k;
        for (auto& c : s.corank1) os << "\\n" << c.code;
        os << "\"];\n";
    }
    for (auto& [a, b] : ball.edges) os << "  s" << a << " -- s" << b << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace ucox
