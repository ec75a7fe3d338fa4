#pragma once
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace charq {

// Lines "p d c0 c1 ... cd" (Conway polynomials, low degree first).
std::string_view conway_table_text();

// Permutation models by name: first line degree, then one generator per line in cycle notation.
const std::vector<std::pair<std::string, std::string_view>>& group_models();

}  // namespace charq
