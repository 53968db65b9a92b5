#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "ucox/aut.hpp"
#include "ucox/splitting.hpp"

namespace ucox::cli {

// Exit codes.
constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

// Runs the command line; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Automorphism from an expression such as "sigma:2,1*F:3", a JSON object, or @file.
// Terms: id, sigma:j,i, swap:i,j, pc:S:i (S dot separated), F:i, Fw:i:w, ad:w.
Automorphism parse_aut(int rank, const std::string& text);
// Star from JSON, @file, or corank-1 classes as generator lists joined by '|'.
StarClass parse_star(int rank, const std::string& text);

}  // namespace ucox::cli
