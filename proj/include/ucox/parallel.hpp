#pragma once

#include <string>
#include <vector>

#include "ucox/complex.hpp"
#include "ucox/splitting.hpp"
#include "ucox/subgroup.hpp"

namespace ucox {

// Batch kernels. Each has a serial reference and an OpenMP version that must
// produce identical output; results are stored by index, so ordering never
// depends on scheduling.
enum class Exec { Serial, Parallel };

std::vector<FreeFactorClass> batch_classes(int rank, const std::vector<std::vector<Word>>& subgroups,
                                           Exec exec = Exec::Parallel);

// ok[q] = 1 iff base ∪ {pool[q]} is a jointly refinable set of corank-1 classes.
std::vector<char> compatibility_filter(const std::vector<FreeFactorClass>& base,
                                       const std::vector<FreeFactorClass>& pool, Exec exec = Exec::Parallel);

// Row-major upper-triangular adjacency matrix of the given vertices.
std::vector<char> adjacency_matrix(ComplexKind kind, const std::vector<StarClass>& vertices,
                                   Exec exec = Exec::Parallel);

int worker_count();

}  // namespace ucox
