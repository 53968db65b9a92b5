#pragma once

#include <algorithm>
#include <vector>

#include "ucox/splitting.hpp"
#include "ucox/word.hpp"

namespace testing {

inline ucox::Word W(int n, const char* text) { return ucox::Word::parse(n, text); }

inline std::vector<ucox::Word> gens(int n, const char* text) { return ucox::parse_word_list(n, text); }

inline ucox::FreeFactorClass cls(int n, const char* text) { return ucox::FreeFactorClass::of(n, gens(n, text)); }

// Standard star with leaves at the given letters.
inline ucox::StarClass leaves_star(int n, const std::vector<int>& leaves) {
    std::vector<int> center;
    for (int i = 1; i <= n; ++i)
        if (std::find(leaves.begin(), leaves.end(), i) == leaves.end()) center.push_back(i);
    return ucox::star_class(ucox::standard_star(n, center));
}

}  // namespace testing
