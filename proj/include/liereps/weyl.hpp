#pragma once

#include <memory>
#include <vector>

#include "liereps/algebra_core.hpp"

namespace liereps {

struct Orbit {
    Label dominant;
    // Distinct orbit elements in descending lexicographic omega order.
    std::vector<Label> elements;
    std::size_t size() const { return elements.size(); }
};

// Reflection at the hyperplane orthogonal to simple root i (1-based), acting
// on omega labels: r_i x = x - x_i * (row i of the Cartan matrix).
Label reflect_label(const DefiningData& dd, const Label& x, int i);
Vec reflect(const Vec& v, int simple_root_index);

// One matrix per simple root, acting on orthogonal coordinates.
std::vector<RatMat> reflection_matrices(AlgebraId algebra);

bool is_dominant_label(const Label& x);
bool is_dominant(const Vec& v);

Label to_dominant_label(const DefiningData& dd, Label x);
Vec to_dominant(const Vec& v);

// Full Weyl orbit, cached by the dominant representative. A_n orbits are
// generated as distinct permutations of the orthogonal coordinates.
std::shared_ptr<const Orbit> orbit_of(AlgebraId algebra, const Label& omega_label);
Orbit orbit(const Vec& v);
Int orbit_size(AlgebraId algebra, const Label& omega_label);

Int weyl_order(AlgebraId algebra);

}  // namespace liereps
