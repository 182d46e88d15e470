#pragma once

#include <vector>

#include "liereps/algebra.hpp"
#include "liereps/rational.hpp"

namespace liereps {

enum class Basis { Orthogonal, Omega, Alpha };
enum class Kind { Root, Weight };

// A coordinate vector in root/weight space, tagged with its basis.
// Omega/alpha coordinates have length = rank; orthogonal coordinates have
// length m, which equals the rank except for A_n (m = n+1), E6 and E7 (m = 8)
// and G2 (m = 3).
struct Vec {
    AlgebraId algebra;
    Basis basis = Basis::Omega;
    Kind kind = Kind::Weight;
    std::vector<Rat> coords;

    bool operator==(const Vec& o) const {
        return algebra == o.algebra && basis == o.basis && kind == o.kind && coords == o.coords;
    }
};

inline Vec omega_vec(AlgebraId algebra, const Label& label, Kind kind = Kind::Weight) {
    Vec v{algebra, Basis::Omega, kind, {}};
    v.coords.reserve(label.size());
    for (long x : label) v.coords.emplace_back(x);
    return v;
}

// Omega-basis coordinates of roots and weights are integers; this asserts it.
Label to_label(const Vec& omega_basis_vec);

}  // namespace liereps
