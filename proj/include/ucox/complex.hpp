#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ucox/splitting.hpp"

namespace ucox {

enum class ComplexKind { L, Y, Xtilde, X, Xprime };
std::string to_string(ComplexKind kind);
ComplexKind parse_kind(const std::string& text);

bool admissible(ComplexKind kind, const StarClass& s);
// Throws std::invalid_argument for inadmissible stars; false for s == t.
bool adjacent(ComplexKind kind, const StarClass& s, const StarClass& t);

enum class TriangleType { Wn3, Wn4 };
std::string to_string(TriangleType t);
TriangleType triangle_type(const StarClass& s1, const StarClass& s2, const StarClass& s3);

struct BallOptions {
    int complexity = 16;  // max cyclic-core size of candidate corank-1 classes
    int depth = 1;        // generation steps applied to the seed pool
    int conj_len = 3;     // max length of conjugators in F_{i,w} moves
    bool neighbor_edges = true;  // also list edges between neighbors
};

struct BallReport {
    ComplexKind kind = ComplexKind::X;
    std::optional<StarClass> center;
    int radius = 1;
    int complexity_bound = 0;
    std::vector<StarClass> vertices;  // center first (if any), then sorted neighbors
    std::vector<std::pair<int, int>> edges;
    bool truncated = false;
    int pool_size = 0;
};

BallReport neighbors_bounded(ComplexKind kind, const StarClass& s, const BallOptions& opts = {});
// Subgraph spanned by the given vertices (sorted), all adjacent pairs as edges.
BallReport induced_ball(ComplexKind kind, std::vector<StarClass> vertices);

struct TriangleReport {
    TriangleType type = TriangleType::Wn3;
    StarClass refinement;
    std::optional<StarClass> fourth;
    bool bounded_search = false;  // true when nonexistence was checked by search
    int bound = 0;
    int candidates_checked = 0;
};
TriangleReport fourth_vertex(const StarClass& s1, const StarClass& s2, const StarClass& s3,
                             const BallOptions& opts = {});

StarClass simplex_refinement(const std::vector<StarClass>& stars);

// The W_{n-2}-stars {s0, c} for c in corank1(s), c != s0, in sorted order.
std::vector<StarClass> intermediate_stars(const StarClass& s, const FreeFactorClass& s0);
// images[j] is the image of intermediate_stars(s, s0)[j].
StarClass induced_image_X_to_Xprime(const StarClass& s, const FreeFactorClass& s0,
                                    const std::vector<StarClass>& images);
// Images of the W_{n-1}-star collapses of a {0}-star (n of them) or an F-star (n-1).
StarClass induced_image_Y_to_L(const std::vector<StarClass>& images);

std::string export_ball(const BallReport& ball, const std::string& format);

}  // namespace ucox
