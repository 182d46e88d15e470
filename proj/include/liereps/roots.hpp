#pragma once

#include <memory>
#include <vector>

#include "liereps/weyl.hpp"

namespace liereps {

// Full root system: union of the simple-root orbits plus the rank-fold
// degenerate zero roots, sorted by height descending (ties broken by
// descending lexicographic omega label). The positive roots come first.
struct RootSystem {
    AlgebraId algebra;
    std::vector<Label> roots;  // includes rank copies of the zero root
    int n_positive = 0;
};

std::shared_ptr<const RootSystem> root_system(AlgebraId algebra);

Rat height(const Vec& root);
Label highest_root(AlgebraId algebra);
const std::vector<Label>& positive_roots(AlgebraId algebra);
int num_positive_roots(AlgebraId algebra);
bool is_positive_root(const Vec& v);

// Plain-text spindle rendering: one line per height, roots space-separated.
std::string spindle_text(const RootSystem& rs);

}  // namespace liereps
