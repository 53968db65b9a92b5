#include "ucox/parallel.hpp"

#include <exception>

#include <omp.h>

namespace ucox {

namespace {

// Runs body(i) for i in [0, count); rethrows the lowest-index exception.
template <class Body>
void for_each_index(int count, Exec exec, Body&& body) {
    std::vector<std::exception_ptr> errors(count);
    if (exec == Exec::Serial) {
        for (int i = 0; i < count; ++i) {
            try {
                body(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    } else {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < count; ++i) {
            try {
                body(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace

int worker_count() { return omp_get_max_threads(); }

std::vector<FreeFactorClass> batch_classes(int rank, const std::vector<std::vector<Word>>& subgroups, Exec exec) {
    std::vector<FreeFactorClass> out(subgroups.size());
    for_each_index(static_cast<int>(subgroups.size()), exec,
                   [&](int i) { out[i] = FreeFactorClass::of(rank, subgroups[i]); });
    return out;
}

std::vector<char> compatibility_filter(const std::vector<FreeFactorClass>& base,
                                       const std::vector<FreeFactorClass>& pool, Exec exec) {
    std::vector<char> ok(pool.size(), 0);
    for_each_index(static_cast<int>(pool.size()), exec, [&](int q) {
        for (auto& b : base)
            if (b == pool[q]) return;
        auto set = base;
        set.push_back(pool[q]);
        if (static_cast<int>(set.size()) > pool[q].rank) return;
        ok[q] = refine(set).has_value();
    });
    return ok;
}

std::vector<char> adjacency_matrix(ComplexKind kind, const std::vector<StarClass>& vertices, Exec exec) {
    int m = static_cast<int>(vertices.size());
    std::vector<char> adj(static_cast<std::size_t>(m) * m, 0);
    for_each_index(m, exec, [&](int i) {
        for (int j = i + 1; j < m; ++j) adj[static_cast<std::size_t>(i) * m + j] = adjacent(kind, vertices[i], vertices[j]);
    });
    return adj;
}

}  // namespace ucox
