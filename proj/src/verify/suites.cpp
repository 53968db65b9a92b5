#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include <omp.h>

#include "ucox/complex.hpp"
#include "ucox/oracles.hpp"
#include "ucox/twist.hpp"
#include "ucox/verify.hpp"

namespace ucox::verify {

namespace {

using oracle::Letters;
using rnd::Rng;
using rnd::uniform;

struct Fail {
    std::string check;
    json data;
};
using Outcome = std::optional<Fail>;
using CaseFn = std::function<Outcome(int n, int c, Rng& rng, const SuiteParams& p)>;

struct SuiteDef {
    SuiteInfo info;
    std::function<int(int n)> case_count;
    CaseFn run_case;
};

json words_json(const std::vector<Word>& ws) {
    json j = json::array();
    for (auto& w : ws) j.push_back(w.str());
    return j;
}

std::vector<int> range(int lo, int hi) {
    std::vector<int> r(hi - lo + 1);
    std::iota(r.begin(), r.end(), lo);
    return r;
}

std::vector<int> without(const std::vector<int>& all, const std::vector<int>& drop) {
    std::vector<int> r;
    for (int x : all)
        if (std::find(drop.begin(), drop.end(), x) == drop.end()) r.push_back(x);
    return r;
}

StarClass standard_class(int n, const std::vector<int>& center) { return star_class(standard_star(n, center)); }

// Two reference triangles sharing the edge S1-S2, in rank n >= 5:
// S1 has leaves {1,n}, S2 leaves {2,n}, left S3 leaves {1,2}, right S3 leaves {3,n}.
struct ReferenceTriangles {
    StarClass s1, s2, left, right;
};

ReferenceTriangles reference_triangles(int n) {
    auto leaves = [&](std::vector<int> l) { return standard_class(n, without(range(1, n), l)); };
    return {leaves({1, n}), leaves({2, n}), leaves({1, 2}), leaves({3, n})};
}

Automorphism random_gamma(Rng& rng, int n, int max_moves = 6) {
    return rnd::random_automorphism(rng, n, uniform(rng, 0, max_moves));
}

// Random product of sigma moves that only involve the given letters.
Automorphism random_moves_on(Rng& rng, int n, const std::vector<int>& letters, int count) {
    std::vector<GeneratorMove> mv;
    for (int k = 0; k < count; ++k) {
        int i = letters[uniform(rng, 0, static_cast<int>(letters.size()) - 1)];
        int j = i;
        while (j == i) j = letters[uniform(rng, 0, static_cast<int>(letters.size()) - 1)];
        mv.push_back(uniform(rng, 0, 3) == 0 ? GeneratorMove(Swap{std::min(i, j), std::max(i, j)}) : sigma_move(j, i));
    }
    return Automorphism::from_moves(n, std::move(mv));
}

bool outer_commute(const Automorphism& f, const Automorphism& g) {
    return equal_outer(compose(f, g), compose(g, f)).has_value();
}

// ---------------------------------------------------------------- word-algebra

Letters raw_sequence(Rng& rng, int n, int max_len) {
    Letters s(uniform(rng, 0, max_len));
    for (auto& x : s) x = uniform(rng, 1, n);
    return s;
}

Outcome word_algebra_case(int n, int c, Rng& rng, const SuiteParams&) {
    switch (c % 4) {
        case 0: {
            Letters a = raw_sequence(rng, n, 10), b = raw_sequence(rng, n, 10), d = raw_sequence(rng, n, 10);
            Word wa = Word::reduce(n, a), wb = Word::reduce(n, b), wd = Word::reduce(n, d);
            json data = {{"a", a}, {"b", b}, {"c", d}};
            if (wa.letters() != oracle::naive_reduce(a)) return Fail{"reduce", data};
            Word left = (wa * wb) * wd, right = wa * (wb * wd);
            if (left != right) return Fail{"associativity", data};
            if (left.letters() != oracle::naive_reduce(oracle::concat(oracle::concat(a, b), d)))
                return Fail{"product", data};
            return std::nullopt;
        }
        case 1: {
            Word w = rnd::random_word_upto(rng, n, 12);
            json data = {{"w", w.str()}};
            if (w.inverse().letters() != oracle::reversed(w.letters())) return Fail{"inverse-letters", data};
            if (!(w * w.inverse()).empty() || !(w.inverse() * w).empty()) return Fail{"inverse-product", data};
            if (!oracle::naive_reduce(oracle::concat(w.letters(), w.inverse().letters())).empty())
                return Fail{"inverse-oracle", data};
            if (w.inverse().inverse() != w) return Fail{"inverse-involutive", data};
            return std::nullopt;
        }
        case 2: {
            Word w = rnd::random_word(rng, n, uniform(rng, 1, 4));
            Word v(n);
            if (uniform(rng, 0, 1) == 0) {
                Word g = rnd::random_word_upto(rng, n, 2);
                v = g * w * g.inverse();
            } else {
                v = rnd::random_word(rng, n, uniform(rng, 1, 5));
            }
            json data = {{"w", w.str()}, {"v", v.str()}};
            auto impl = are_conjugate(w, v);
            auto ref = oracle::conjugacy_bfs(n, w.letters(), v.letters());
            if (impl.has_value() != ref.has_value()) return Fail{"conjugacy-decision", data};
            if (impl && *impl * w * impl->inverse() != v) return Fail{"conjugacy-witness", data};
            if ((canonical_conjugacy_rep(w) == canonical_conjugacy_rep(v)) != ref.has_value())
                return Fail{"conjugacy-canonical", data};
            auto cf = cyclic_reduce(w);
            if (cf.conjugator * cf.core * cf.conjugator.inverse() != w) return Fail{"cyclic-reduce", data};
            return std::nullopt;
        }
        default: {
            Word w = rnd::random_word_upto(rng, n, 7);
            json data = {{"w", w.str()}};
            auto inv = as_involution(w);
            if (inv.has_value() != oracle::is_involution_by_squaring(w.letters())) return Fail{"involution", data};
            if (inv && inv->word() != w) return Fail{"involution-form", data};
            return std::nullopt;
        }
    }
}

// -------------------------------------------------------------- generator-laws

Outcome generator_laws_case(int n, int c, Rng& rng, const SuiteParams&) {
    if (c == 0) {
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                auto s = sigma(n, j, i);
                if (!equal_exact(compose(s, s), Automorphism::identity(n)))
                    return Fail{"sigma-involution", {{"j", j}, {"i", i}}};
                auto p = class_permutation(s);
                if (p != range(1, n)) return Fail{"sigma-class-permutation", {{"j", j}, {"i", i}}};
                if (i < j) {
                    auto t = swap_aut(n, i, j);
                    if (!equal_exact(compose(t, t), Automorphism::identity(n)))
                        return Fail{"swap-involution", {{"i", i}, {"j", j}}};
                    auto q = range(1, n);
                    std::swap(q[i - 1], q[j - 1]);
                    if (class_permutation(t) != q) return Fail{"swap-class-permutation", {{"i", i}, {"j", j}}};
                }
            }
        return std::nullopt;
    }
    if (c == 1) {
        std::vector<std::vector<int>> gens;
        for (int i = 1; i < n; ++i) gens.push_back(class_permutation(swap_aut(n, i, i + 1)));
        std::size_t order = oracle::permutation_group_order(n, gens), fact = 1;
        for (int k = 2; k <= n; ++k) fact *= k;
        if (order != fact) return Fail{"image-is-symmetric-group", {{"order", order}}};
        return std::nullopt;
    }
    auto f = rnd::random_automorphism(rng, n, uniform(rng, 1, 12));
    auto g = rnd::random_automorphism(rng, n, uniform(rng, 1, 12));
    json data = {{"f", aut_to_json(f)}, {"g", aut_to_json(g)}};
    auto pf = class_permutation(f), pg = class_permutation(g), pfg = class_permutation(compose(f, g));
    for (int i = 0; i < n; ++i)
        if (pfg[i] != pf[pg[i] - 1]) return Fail{"class-permutation-homomorphism", data};
    auto id = Automorphism::identity(n);
    if (!equal_exact(compose(invert(f), f), id) || !equal_exact(compose(f, invert(f)), id))
        return Fail{"inverse", data};
    return std::nullopt;
}

// ----------------------------------------------------------------- commutation

constexpr int kFreeSamples = 200;

// Reduced words of length <= max_len in the free group on a = x1x2, b = x2x3,
// encoded with letters +-1 (a), +-2 (b), expanded into W_n.
std::vector<Word> free_sample_all(int n, int max_len) {
    const Word a = Word::reduce(n, {1, 2}), b = Word::reduce(n, {2, 3});
    const Word gens[4] = {a, a.inverse(), b, b.inverse()};  // codes 0..3; inverse of k is k^1
    std::vector<Word> out{Word(n)};
    std::vector<std::pair<Word, int>> layer{{Word(n), -1}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<std::pair<Word, int>> next;
        for (auto& [w, last] : layer)
            for (int k = 0; k < 4; ++k) {
                if (last >= 0 && k == (last ^ 1)) continue;
                next.push_back({w * gens[k], k});
                out.push_back(next.back().first);
            }
        layer = std::move(next);
    }
    return out;
}

Word random_free_word(Rng& rng, int n, int max_len) {
    const Word a = Word::reduce(n, {1, 2}), b = Word::reduce(n, {2, 3});
    const Word gens[4] = {a, a.inverse(), b, b.inverse()};
    Word w(n);
    int len = uniform(rng, 0, max_len), last = -1;
    for (int k = 0; k < len; ++k) {
        int x = uniform(rng, 0, 3);
        if (last >= 0 && x == (last ^ 1)) x = last;
        w = w * gens[x];
        last = x;
    }
    return w;
}

Outcome commutation_case(int n, int c, Rng& rng, const SuiteParams&) {
    if (c == 0) {
        for (int i = 3; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (!equal_exact(compose(F(n, i), F(n, j)), compose(F(n, j), F(n, i))))
                    return Fail{"F-commute", {{"i", i}, {"j", j}}};
        return std::nullopt;
    }
    if (c == 1) {
        // Every nonzero exponent vector with L1 norm <= 8 gives a non-inner product.
        int m = n - 2;
        std::vector<Automorphism> pos(m), neg(m);
        for (int k = 0; k < m; ++k) {
            pos[k] = F(n, k + 3);
            neg[k] = invert(pos[k]);
        }
        const auto id = Automorphism::identity(n);
        const auto id_key = outer_key(id);
        std::function<Outcome(int, int, std::vector<int>&)> rec = [&](int k, int budget, std::vector<int>& ex) -> Outcome {
            if (k == m) {
                if (std::all_of(ex.begin(), ex.end(), [](int x) { return x == 0; })) return std::nullopt;
                Automorphism f = id;
                for (int q = 0; q < m; ++q)
                    for (int t = 0; t < std::abs(ex[q]); ++t) f = compose(f, ex[q] > 0 ? pos[q] : neg[q]);
                if (equal_outer(f, id) || outer_key(f) == id_key) return Fail{"F-product-inner", {{"exponents", ex}}};
                return std::nullopt;
            }
            for (int x = -budget; x <= budget; ++x) {
                ex[k] = x;
                if (auto r = rec(k + 1, budget - std::abs(x), ex)) return r;
            }
            return std::nullopt;
        };
        std::vector<int> ex(m, 0);
        return rec(0, 8, ex);
    }
    if (c < 2 + kFreeSamples) {
        int i = uniform(rng, 4, n), j = i;
        while (j == i) j = uniform(rng, 4, n);
        Word g = random_free_word(rng, n, 8), h = random_free_word(rng, n, 8);
        auto fg = conj_generator(i, g), fh = conj_generator(j, h);
        if (!equal_exact(compose(fg, fh), compose(fh, fg)))
            return Fail{"F-iw-commute", {{"i", i}, {"g", g.str()}, {"j", j}, {"h", h.str()}}};
        return std::nullopt;
    }
    // Injectivity of w -> F_{n,w} in Out on the whole sample.
    std::set<std::vector<Word>> keys;
    for (const Word& w : free_sample_all(n, 8))
        if (!keys.insert(outer_key(conj_generator(n, w))).second) return Fail{"F-iw-injective", {{"w", w.str()}}};
    return std::nullopt;
}

// ------------------------------------------------------------------ membership

Outcome membership_case(int n, int, Rng& rng, const SuiteParams&) {
    int m = uniform(rng, 1, 3);
    std::vector<Word> gens;
    for (int k = 0; k < m; ++k) {
        if (uniform(rng, 0, 1) == 0) {
            Word u = rnd::random_word_upto(rng, n, 2);
            gens.push_back(u * Word::generator(n, uniform(rng, 1, n)) * u.inverse());
        } else {
            gens.push_back(rnd::random_word(rng, n, uniform(rng, 1, 4)));
        }
        if (gens.back().empty()) gens.back() = Word::generator(n, 1);
    }
    Word w(n);
    if (uniform(rng, 0, 1) == 0) {
        int len = uniform(rng, 1, 4);
        for (int k = 0; k < len; ++k) w = w * gens[uniform(rng, 0, m - 1)];
        if (w.size() > 10) w = rnd::random_word_upto(rng, n, 10);
    } else {
        w = rnd::random_word_upto(rng, n, 10);
    }
    CoreGraph core = CoreGraph::from_generators(n, gens);
    json data = {{"generators", words_json(gens)}, {"w", w.str()}};
    for (auto& g : gens)
        if (!member(core, g)) return Fail{"generator-membership", data};
    std::vector<Letters> gl;
    for (auto& g : gens) gl.push_back(g.letters());
    auto ref = oracle::coset_enumeration(n, gl, w.letters(), 12);
    if (ref == oracle::Membership::Unknown) return std::nullopt;
    if (member(core, w) != (ref == oracle::Membership::Member)) return Fail{"membership", data};
    return std::nullopt;
}

// ---------------------------------------------------------------- scott-swarup

Outcome scott_swarup_case(int n, int, Rng& rng, const SuiteParams&) {
    int k = uniform(rng, 0, n - 1);
    auto center = rnd::random_subset(rng, n, k);
    auto gamma = random_gamma(rng, n);
    json data = {{"center", center}, {"gamma", aut_to_json(gamma)}};
    SplittingTree t = act(gamma, standard_star(n, center));
    StarClass s = star_class(t);
    if (s.k != k) return Fail{"center-rank", data};
    if (s.leaves() != n - k) return Fail{"corank1-count", data};
    auto r = refine(s.corank1);
    if (!r) return Fail{"refine-exists", data};
    if (!(r->cls == s)) return Fail{"refine-roundtrip", data};
    if (r->witness.edge_count() != n - k) return Fail{"refine-edge-count", data};
    if (auto v = validate(r->witness); !v.ok) return Fail{"witness-valid", data};
    for (int j = 0; j < s.leaves(); ++j) {
        std::vector<int> others;
        for (int e = 0; e < r->witness.edge_count(); ++e) {
            auto [a, b] = r->witness.edges[e];
            if (a != j + 1 && b != j + 1) others.push_back(e);
        }
        StarClass one = star_class(others.empty() ? r->witness : collapse(r->witness, others));
        if (!(one == StarClass::of(n, {s.corank1[j]}))) return Fail{"collapse-onto-input", data};
    }
    return std::nullopt;
}

// ------------------------------------------------------------------ uniqueness

Outcome uniqueness_case(int n, int, Rng& rng, const SuiteParams&) {
    auto gamma = random_gamma(rng, n);
    const int leaf = uniform(rng, 1, n);
    auto center = without(range(1, n), {leaf});
    json data = {{"gamma", aut_to_json(gamma)}, {"leaf", leaf}};
    // 1. Image of the standard one-edge splitting.
    StarClass a = star_class(act(gamma, standard_star(n, center)));
    // 2. The complement construction applied to a conjugated representative.
    Word h = rnd::random_word_upto(rng, n, 4);
    std::vector<Word> rep;
    for (int i : center) rep.push_back(h * gamma.image(i) * h.inverse());
    StarClass b = star_class(one_edge_splitting(FreeFactorClass::of(n, rep)));
    // 3. gamma composed with an element of the standard stabilizer.
    auto phi = compose(random_moves_on(rng, n, center, uniform(rng, 0, 4)),
                       sigma(n, leaf, center[uniform(rng, 0, static_cast<int>(center.size()) - 1)]));
    StarClass c = star_class(act(compose(gamma, phi), standard_star(n, center)));
    // 4. The class of the corank-1 factor itself.
    StarClass d = StarClass::of(n, {FreeFactorClass::of(n, rep)});
    if (!(a == b)) return Fail{"complement-construction", data};
    if (!(a == c)) return Fail{"stabilizer-construction", data};
    if (!(a == d)) return Fail{"class-construction", data};
    return std::nullopt;
}

// -------------------------------------------------------------------- triangle

constexpr int kTriangleImages = 50;

Outcome triangle_case(int n, int c, Rng& rng, const SuiteParams& p) {
    auto fig = reference_triangles(n);
    BallOptions opts;
    opts.complexity = p.bound;
    if (c == 0) {
        if (triangle_type(fig.s1, fig.s2, fig.left) != TriangleType::Wn3) return Fail{"left-type", {}};
        if (triangle_type(fig.s1, fig.s2, fig.right) != TriangleType::Wn4) return Fail{"right-type", {}};
        return std::nullopt;
    }
    if (c == 1) {
        auto r = fourth_vertex(fig.s1, fig.s2, fig.right, opts);
        if (!r.fourth) return Fail{"right-fourth-exists", {}};
        for (auto* s : {&fig.s1, &fig.s2, &fig.right})
            if (*r.fourth == *s || !adjacent(ComplexKind::X, *r.fourth, *s))
                return Fail{"right-fourth-adjacent", {{"fourth", star_to_json(*r.fourth)}}};
        return std::nullopt;
    }
    if (c == 2) {
        auto r = fourth_vertex(fig.s1, fig.s2, fig.left, opts);
        if (r.fourth) return Fail{"left-fourth-absent", {{"fourth", star_to_json(*r.fourth)}}};
        if (!r.bounded_search || r.bound != p.bound) return Fail{"left-search-bound", {{"bound", r.bound}}};
        return std::nullopt;
    }
    auto gamma = random_gamma(rng, n);
    json data = {{"gamma", aut_to_json(gamma)}};
    auto s1 = act(gamma, fig.s1), s2 = act(gamma, fig.s2), left = act(gamma, fig.left), right = act(gamma, fig.right);
    if (triangle_type(s1, s2, left) != TriangleType::Wn3) return Fail{"left-type-invariant", data};
    if (triangle_type(s1, s2, right) != TriangleType::Wn4) return Fail{"right-type-invariant", data};
    return std::nullopt;
}

// ---------------------------------------------------------------- induced-maps

Outcome induced_maps_case(int n, int, Rng& rng, const SuiteParams&) {
    auto gamma = random_gamma(rng, n);
    auto base_gamma = random_gamma(rng, n, 4);
    json data = {{"gamma", aut_to_json(gamma)}, {"base", aut_to_json(base_gamma)}};
    // X -> X': a W_k-star with at least three leaves and one of its classes.
    int k = uniform(rng, 0, n - 3);
    data["k"] = k;
    StarClass s = act(base_gamma, standard_class(n, rnd::random_subset(rng, n, k)));
    const auto& s0 = s.corank1[uniform(rng, 0, s.leaves() - 1)];
    std::vector<StarClass> images;
    for (auto& t : intermediate_stars(s, s0)) images.push_back(act(gamma, t));
    if (!(induced_image_X_to_Xprime(s, s0, images) == act(gamma, s))) return Fail{"X-to-Xprime", data};
    // Y -> L: a {0}-star or an F-star, images of its one-class collapses in shuffled order.
    int kl = uniform(rng, 0, 1);
    data["kl"] = kl;
    StarClass b = act(base_gamma, standard_class(n, rnd::random_subset(rng, n, kl)));
    std::vector<StarClass> ys;
    for (auto& cl : b.corank1) ys.push_back(act(gamma, StarClass::of(n, {cl})));
    std::shuffle(ys.begin(), ys.end(), rng);
    if (!(induced_image_Y_to_L(ys) == act(gamma, b))) return Fail{"Y-to-L", data};
    return std::nullopt;
}

// ---------------------------------------------------------------------- twists

constexpr int kTwistBlock = 100;

Outcome twists_case(int n, int c, Rng& rng, const SuiteParams&) {
    const auto all_but_n = range(1, n - 1);
    const auto inner_letters = range(2, n - 1);
    if (c < kTwistBlock) {
        // With compose(f, g) = f o g (g applied first): D_{e, z1 z2} = D_{e, z2} o D_{e, z1}.
        int k = uniform(rng, 2, n - 1);
        auto center = rnd::random_subset(rng, n, k);
        auto gamma = random_gamma(rng, n);
        SplittingTree t = act(gamma, standard_star(n, center));
        int e = uniform(rng, 0, t.edge_count() - 1);
        Word z1 = gamma.apply(rnd::random_word_in(rng, n, center, uniform(rng, 0, 4)));
        Word z2 = gamma.apply(rnd::random_word_in(rng, n, center, uniform(rng, 0, 4)));
        json data = {{"center", center}, {"gamma", aut_to_json(gamma)}, {"edge", e}, {"z1", z1.str()}, {"z2", z2.str()}};
        if (!equal_exact(twist(t, e, z1 * z2), compose(twist(t, e, z2), twist(t, e, z1))))
            return Fail{"homomorphism", data};
        return std::nullopt;
    }
    if (c < 3 * kTwistBlock) {
        // One-edge splitting A * <x_n>, A = <x_1..x_{n-1}>; g~ fixes A and x_n.
        const bool commuting = c < 2 * kTwistBlock;
        SplittingTree t = standard_star(n, all_but_n);
        auto zl = rnd::random_subset(rng, n - 1, 2);
        Word z = rnd::random_word_in(rng, n, zl, uniform(rng, 1, 5));
        auto free_letters = without(all_but_n, zl);
        Automorphism gt = Automorphism::identity(n);
        if (commuting) {
            int parts = uniform(rng, 1, 4);
            for (int q = 0; q < parts; ++q) {
                if (uniform(rng, 0, 2) == 0) {
                    gt = compose(gt, compose(inner(z), conj_generator(n, z.inverse())));
                } else {
                    int j = free_letters[uniform(rng, 0, static_cast<int>(free_letters.size()) - 1)];
                    int i = j;
                    while (i == j) i = uniform(rng, 1, n - 1);
                    gt = compose(gt, sigma(n, j, i));
                }
            }
        } else {
            do gt = random_moves_on(rng, n, all_but_n, uniform(rng, 1, 6));
            while (gt.apply(z) == z);
        }
        Word h = rnd::random_word_upto(rng, n, 4);
        Automorphism g = compose(inner(h), gt);
        Automorphism d = twist(t, 0, z);
        json data = {{"z", z.str()}, {"g_tilde", aut_to_json(gt)}, {"h", h.str()}, {"commuting", commuting}};
        std::vector<Word> a_gens;
        for (int i : all_but_n) a_gens.push_back(Word::generator(n, i));
        Automorphism norm = normalize_stabilizer_rep(g, a_gens, Word::generator(n, n));
        if (!equal_exact(norm, gt)) return Fail{"normalize", data};
        if ((gt.apply(z) == z) != commuting) return Fail{"sample-construction", data};
        if (outer_commute(g, d) != commuting) return Fail{"twistor-criterion", data};
        return std::nullopt;
    }
    if (c < 4 * kTwistBlock) {
        // Twists about the two edges of a W_{n-2}-star commute.
        auto gamma = random_gamma(rng, n);
        SplittingTree t = act(gamma, standard_star(n, inner_letters));
        Word z1 = gamma.apply(rnd::random_word_in(rng, n, inner_letters, uniform(rng, 1, 6)));
        Word z2 = gamma.apply(rnd::random_word_in(rng, n, inner_letters, uniform(rng, 1, 6)));
        auto d1 = twist(t, 0, z1), d2 = twist(t, 1, z2);
        json data = {{"gamma", aut_to_json(gamma)}, {"z1", z1.str()}, {"z2", z2.str()}};
        if (!equal_exact(compose(d1, d2), compose(d2, d1))) return Fail{"edge-twists-commute", data};
        return std::nullopt;
    }
    // z -> D_{e,z} is injective in Out on all center words of length <= 8.
    SplittingTree t = standard_star(n, inner_letters);
    std::set<std::vector<Word>> keys;
    std::vector<Word> layer{Word(n)};
    for (int len = 0; len <= 8; ++len) {
        std::vector<Word> next;
        for (auto& z : layer) {
            if (!keys.insert(outer_key(twist(t, 0, z))).second) return Fail{"twist-injective", {{"z", z.str()}}};
            if (len == 8) continue;
            for (int x : inner_letters) {
                if (!z.empty() && z.back() == x) continue;
                Word y = z;
                y.push(x);
                next.push_back(y);
            }
        }
        layer = std::move(next);
    }
    return std::nullopt;
}

// --------------------------------------------------------------- compatibility

constexpr int kCompatImages = 10;
constexpr int kTwistSamples = 50;

Outcome compatibility_case(int n, int c, Rng& rng, const SuiteParams&) {
    // <x_2..x_n> versus <x_2, x_1 x_3 x_1, x_4..x_n>.
    std::vector<Word> pa, pb;
    for (int i = 2; i <= n; ++i) {
        pa.push_back(Word::generator(n, i));
        pb.push_back(i == 3 ? Word::reduce(n, {1, 3, 1}) : Word::generator(n, i));
    }
    const auto ca = FreeFactorClass::of(n, pa), cb = FreeFactorClass::of(n, pb);
    auto fig = reference_triangles(n);
    const std::vector<std::pair<StarClass, StarClass>> pairs = {
        {fig.s1, fig.s2}, {fig.s1, fig.left}, {fig.s2, fig.left}, {fig.s1, fig.right}, {fig.s2, fig.right}};
    if (c <= kCompatImages) {
        Automorphism gamma = c == 0 ? Automorphism::identity(n) : random_gamma(rng, n);
        json data = {{"gamma", aut_to_json(gamma)}};
        auto ga = act(gamma, ca), gb = act(gamma, cb);
        if (compatible_one_edge(ga, gb)) return Fail{"incompatible-pair-one-edge", data};
        if (is_compatible(StarClass::of(n, {ga}), StarClass::of(n, {gb}))) return Fail{"incompatible-pair", data};
        for (std::size_t q = 0; q < pairs.size(); ++q)
            if (!is_compatible(act(gamma, pairs[q].first), act(gamma, pairs[q].second)))
                return Fail{"reference-pair-compatible", {{"gamma", data["gamma"]}, {"pair", q}}};
        return std::nullopt;
    }
    // Commuting twists about two distinct one-edge splittings imply compatibility.
    auto gamma = random_gamma(rng, n);
    const auto inner_letters = range(2, n - 1);
    SplittingTree ta = act(gamma, standard_star(n, range(1, n - 1)));  // leaf x_n
    SplittingTree tb = act(gamma, standard_star(n, range(2, n)));      // leaf x_1
    Word za = gamma.apply(rnd::random_word_in(rng, n, inner_letters, uniform(rng, 1, 5)));
    Word zb = gamma.apply(rnd::random_word_in(rng, n, inner_letters, uniform(rng, 1, 5)));
    if (uniform(rng, 0, 1) == 0) za = za * gamma.apply(Word::generator(n, 1));  // may or may not commute
    auto da = twist(ta, 0, za), db = twist(tb, 0, zb);
    json data = {{"gamma", aut_to_json(gamma)}, {"za", za.str()}, {"zb", zb.str()}};
    StarClass sa = star_class(ta), sb = star_class(tb);
    if (sa == sb) return Fail{"distinct-classes", data};
    if (outer_commute(da, db) && !is_compatible(sa, sb)) return Fail{"commuting-twists-compatible", data};
    return std::nullopt;
}

// ---------------------------------------------------------------------- table

const std::vector<SuiteDef>& definitions() {
    static const std::vector<SuiteDef> defs = {
        {{"word-algebra", "associativity, inverses, conjugacy and involutions against brute-force oracles",
          {3, 4, 5, 6}, 2},
         [](int) { return 10000; }, word_algebra_case},
        {{"generator-laws", "generators are involutions; class permutation is a homomorphism onto S_n", {3, 4, 5, 6}, 2},
         [](int) { return 202; }, generator_laws_case},
        {{"commutation", "F_i and F_{i,w} commutation, non-innerness and injectivity", {5, 6}, 4},
         [](int) { return 3 + kFreeSamples; }, commutation_case},
        {{"membership", "core-graph membership against truncated coset enumeration", {3, 4, 5, 6}, 2},
         [](int) { return 2000; }, membership_case},
        {{"scott-swarup", "refinement of random stars roundtrips and collapses onto its inputs", {5}, 3},
         [](int) { return 200; }, scott_swarup_case},
        {{"uniqueness", "independent constructions of a one-edge splitting agree", {5}, 3},
         [](int) { return 100; }, uniqueness_case},
        {{"triangle", "triangle classification, fourth vertices and invariance", {5}, 5},
         [](int) { return 3 + kTriangleImages; }, triangle_case},
        {{"induced-maps", "induced maps X -> X' and Y -> L are equivariant", {5}, 4},
         [](int) { return 50; }, induced_maps_case},
        {{"twists", "twist homomorphism, twistor criterion, commuting edge twists, injectivity", {5}, 4},
         [](int) { return 4 * kTwistBlock + 1; }, twists_case},
        {{"compatibility", "incompatible pair rejected, reference pairs accepted, commuting twists compatible", {5}, 4},
         [](int) { return 1 + kCompatImages + kTwistSamples; }, compatibility_case},
    };
    return defs;
}

const SuiteDef& definition(const std::string& name) {
    for (auto& d : definitions())
        if (d.info.name == name) return d;
    std::string valid;
    for (auto& d : definitions()) valid += (valid.empty() ? "" : ", ") + d.info.name;
    throw std::invalid_argument("unknown suite '" + name + "' (valid: " + valid + ")");
}

}  // namespace

const std::vector<SuiteInfo>& suites() {
    static const std::vector<SuiteInfo> infos = [] {
        std::vector<SuiteInfo> r;
        for (auto& d : definitions()) r.push_back(d.info);
        return r;
    }();
    return infos;
}

const SuiteInfo& suite_info(const std::string& name) { return definition(name).info; }

SuiteResult run_suite(const std::string& name, const SuiteParams& params) {
    const SuiteDef& def = definition(name);
    SuiteResult result;
    result.suite = name;
    result.params = params;
    if (params.rank != 0) {
        if (params.rank < def.info.min_rank || params.rank > 12)
            throw std::invalid_argument("suite '" + name + "' needs rank in " + std::to_string(def.info.min_rank) +
                                        "..12");
        result.ranks = {params.rank};
    } else {
        result.ranks = def.info.default_ranks;
    }
    if (params.bound < 1) throw std::invalid_argument("bound must be positive");
    auto start = std::chrono::steady_clock::now();
    for (int n : result.ranks) {
        int count = def.case_count(n);
        std::vector<int> cases;
        if (params.only_case) {
            if (*params.only_case < 0 || *params.only_case >= count)
                throw std::invalid_argument("case index out of range");
            cases = {*params.only_case};
        } else {
            cases = range(0, count - 1);
        }
        std::vector<std::optional<Failure>> out(cases.size());
        const int m = static_cast<int>(cases.size());
#pragma omp parallel for schedule(dynamic)
        for (int q = 0; q < m; ++q) {
            int c = cases[q];
            Rng rng = rnd::case_rng(params.seed, name, n, c);
            Outcome o;
            try {
                o = def.run_case(n, c, rng, params);
            } catch (const std::exception& e) {
                o = Fail{"exception", {{"what", e.what()}}};
            }
            if (o) out[q] = Failure{n, c, o->check, o->data};
        }
        for (auto& f : out)
            if (f) result.failures.push_back(std::move(*f));
        result.cases_run += m;
    }
    result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

json failure_payload(const SuiteResult& r, const Failure& f) {
    return {{"suite", r.suite},     {"rank", f.rank},   {"seed", r.params.seed}, {"bound", r.params.bound},
            {"case", f.case_index}, {"check", f.check}, {"data", f.data}};
}

json result_to_json(const SuiteResult& r, bool with_timing) {
    json j;
    j["suite"] = r.suite;
    j["ranks"] = r.ranks;
    j["seed"] = r.params.seed;
    j["bound"] = r.params.bound;
    if (r.params.only_case) j["case"] = *r.params.only_case;
    j["cases_run"] = r.cases_run;
    j["passed"] = r.ok();
    json fs = json::array();
    for (auto& f : r.failures) fs.push_back(failure_payload(r, f));
    j["failures"] = fs;
    if (with_timing) j["wall_seconds"] = r.wall_seconds;
    return j;
}

SuiteResult replay(const json& payload) {
    SuiteParams p;
    p.rank = payload.at("rank").get<int>();
    p.seed = payload.at("seed").get<std::uint64_t>();
    p.bound = payload.value("bound", 16);
    p.only_case = payload.at("case").get<int>();
    return run_suite(payload.at("suite").get<std::string>(), p);
}

}  // namespace ucox::verify
