#include "ucox/oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace ucox::oracle {

Letters naive_reduce(Letters seq) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
            if (seq[k] == seq[k + 1]) {
                seq.erase(seq.begin() + k, seq.begin() + k + 2);
                changed = true;
                break;
            }
        }
    }
    return seq;
}

Letters concat(const Letters& a, const Letters& b) {
    Letters r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

Letters reversed(const Letters& a) { return Letters(a.rbegin(), a.rend()); }

bool is_involution_by_squaring(const Letters& w) {
    return !naive_reduce(w).empty() && naive_reduce(concat(w, w)).empty();
}

std::optional<Letters> conjugacy_bfs(int rank, const Letters& w0, const Letters& v0) {
    Letters w = naive_reduce(w0), v = naive_reduce(v0);
    std::size_t limit = std::max(w.size(), v.size());
    std::map<Letters, Letters> conj{{w, {}}};  // word -> conjugator reaching it
    std::deque<Letters> queue{w};
    while (!queue.empty()) {
        Letters u = queue.front();
        queue.pop_front();
        if (u == v) return conj[u];
        for (int x = 1; x <= rank; ++x) {
            Letters next = naive_reduce(concat(concat({x}, u), {x}));
            if (next.size() > limit || conj.count(next)) continue;
            conj[next] = naive_reduce(concat({x}, conj[u]));
            queue.push_back(next);
        }
    }
    return std::nullopt;
}

std::optional<Letters> conjugacy_brute_force(int rank, const Letters& w0, const Letters& v0, int max_len) {
    Letters w = naive_reduce(w0), v = naive_reduce(v0);
    std::optional<Letters> found;
    std::function<void(Letters&)> rec = [&](Letters& g) {
        if (found) return;
        if (naive_reduce(concat(concat(g, w), reversed(g))) == v) {
            found = g;
            return;
        }
        if (static_cast<int>(g.size()) == max_len) return;
        for (int x = 1; x <= rank; ++x) {
            if (!g.empty() && g.back() == x) continue;
            g.push_back(x);
            rec(g);
            g.pop_back();
        }
    };
    Letters g;
    rec(g);
    return found;
}

Membership coset_enumeration(int rank, const std::vector<Letters>& gens0, const Letters& w0, int depth) {
    (void)rank;
    std::vector<Letters> gens;
    for (auto& g : gens0) gens.push_back(naive_reduce(g));
    Letters w = naive_reduce(w0);
    if (w.size() > static_cast<std::size_t>(depth)) return Membership::Unknown;
    for (auto& g : gens)
        if (g.size() > static_cast<std::size_t>(depth)) return Membership::Unknown;
    // Universe: all prefixes of generators and of w.
    std::map<Letters, int> id;
    auto add_prefixes = [&](const Letters& s) {
        for (std::size_t k = 0; k <= s.size(); ++k) id.emplace(Letters(s.begin(), s.begin() + k), 0);
    };
    for (auto& g : gens) add_prefixes(g);
    add_prefixes(w);
    std::vector<Letters> words;
    for (auto& [s, i] : id) {
        i = static_cast<int>(words.size());
        words.push_back(s);
    }
    std::vector<int> parent(words.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    int empty = id.at({});
    for (auto& g : gens) parent[find(id.at(g))] = find(empty);
    // Edges u -> u.x between words of the universe (u.x freely reduced).
    std::vector<std::tuple<int, int, int>> edges;
    for (std::size_t a = 0; a < words.size(); ++a)
        for (int x = 1; x <= rank; ++x) {
            Letters ux = naive_reduce(concat(words[a], {x}));
            auto it = id.find(ux);
            if (it != id.end()) edges.emplace_back(static_cast<int>(a), x, it->second);
        }
    // Close under right multiplication: u ~ u' implies u.x ~ u'.x.
    for (bool changed = true; changed;) {
        changed = false;
        std::map<std::pair<int, int>, int> target;
        for (auto& [a, x, b] : edges) {
            auto key = std::make_pair(find(a), x);
            auto [it, fresh] = target.emplace(key, b);
            if (!fresh && find(it->second) != find(b)) {
                parent[find(b)] = find(it->second);
                changed = true;
            }
        }
    }
    return find(id.at(w)) == find(empty) ? Membership::Member : Membership::NonMember;
}

std::size_t permutation_group_order(int n, const std::vector<std::vector<int>>& gens) {
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 1);
    std::set<std::vector<int>> seen{id};
    std::deque<std::vector<int>> queue{id};
    while (!queue.empty()) {
        auto p = queue.front();
        queue.pop_front();
        for (auto& g : gens) {
            std::vector<int> q(n);
            for (int i = 0; i < n; ++i) q[i] = g[p[i] - 1];
            if (seen.insert(q).second) queue.push_back(q);
        }
    }
    return seen.size();
}

}  // namespace ucox::oracle

namespace ucox::rnd {

namespace {

// FNV-1a, so case seeds do not depend on the standard library's std::hash.
std::uint32_t fnv1a(const std::string& s) {
    std::uint32_t h = 2166136261u;
    for (unsigned char c : s) {
        h ^= c;
        h *= 16777619u;
    }
    return h;
}

}  // namespace

Rng case_rng(std::uint64_t seed, const std::string& suite, int rank, int case_index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), fnv1a(suite),
                      static_cast<std::uint32_t>(rank),
                      static_cast<std::uint32_t>(case_index)};
    return Rng(seq);
}

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Word random_word(Rng& rng, int rank, int length) {
    Word w(rank);
    while (static_cast<int>(w.size()) < length) {
        int x = uniform(rng, 1, rank);
        if (!w.empty() && w.back() == x) continue;
        w.push(x);
    }
    return w;
}

Word random_word_upto(Rng& rng, int rank, int max_length) { return random_word(rng, rank, uniform(rng, 0, max_length)); }

Word random_word_in(Rng& rng, int rank, const std::vector<int>& letters, int length) {
    Word w(rank);
    if (letters.size() < 2 && length > 1) length = 1;
    while (static_cast<int>(w.size()) < length) {
        int x = letters[uniform(rng, 0, static_cast<int>(letters.size()) - 1)];
        if (!w.empty() && w.back() == x) continue;
        w.push(x);
    }
    return w;
}

GeneratorMove random_muhlherr_move(Rng& rng, int rank) {
    int i = uniform(rng, 1, rank), j = uniform(rng, 1, rank - 1);
    if (j >= i) ++j;
    if (uniform(rng, 0, 3) == 0) return Swap{std::min(i, j), std::max(i, j)};
    return sigma_move(j, i);
}

Automorphism random_automorphism(Rng& rng, int rank, int moves) {
    std::vector<GeneratorMove> mv;
    for (int k = 0; k < moves; ++k) mv.push_back(random_muhlherr_move(rng, rank));
    return Automorphism::from_moves(rank, std::move(mv));
}

std::vector<int> random_subset(Rng& rng, int n, int size) {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 1);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(size);
    std::sort(all.begin(), all.end());
    return all;
}

}  // namespace ucox::rnd
