#pragma once

#include <string>

#include <json.hpp>

#include "ucox/aut.hpp"
#include "ucox/complex.hpp"
#include "ucox/splitting.hpp"
#include "ucox/subgroup.hpp"

namespace ucox {

using json = nlohmann::ordered_json;

json aut_to_json(const Automorphism& f);
// Recomputes images from the moves; a mismatch with given images throws.
Automorphism aut_from_json(const json& j);

json core_to_json(const CoreGraph& g);

json star_to_json(const StarClass& s);
StarClass star_from_json(const json& j);

json tree_to_json(const SplittingTree& t);
SplittingTree tree_from_json(const json& j);
std::string tree_to_dot(const SplittingTree& t);

json ball_to_json(const BallReport& b);
BallReport ball_from_json(const json& j);

json triangle_to_json(const TriangleReport& r);

}  // namespace ucox
