#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace liereps {

enum class AlgebraClass { A, B, C, D, E6, E7, E8, F4, G2, U1 };

struct AlgebraId {
    AlgebraClass cls = AlgebraClass::A;
    int rank = 1;

    auto operator<=>(const AlgebraId&) const = default;

    bool is_u1() const { return cls == AlgebraClass::U1; }

    // Cartan-style name: A4, B3, E6, U1.
    std::string name() const;
    // Traditional name: SU5, SO7, Sp8, E6, U1.
    std::string traditional_name() const;
};

struct ProductAlgebra {
    std::vector<AlgebraId> factors;  // order is significant

    auto operator<=>(const ProductAlgebra&) const = default;

    int simple_count() const {
        int n = 0;
        for (const auto& f : factors) n += f.is_u1() ? 0 : 1;
        return n;
    }
    int u1_count() const { return int(factors.size()) - simple_count(); }
    std::string name(char sep = '*') const;
};

class parse_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Accepts Cartan names (A4, B3), traditional names (SU5, SO10, Sp8), the
// exceptionals and U1, with product factors joined by '*'.
// Low-rank aliases B1, C1, D2, D3 are rejected with the isomorphic canonical
// algebra named in the message.
AlgebraId parse_simple_algebra(const std::string& name);
ProductAlgebra parse_algebra(const std::string& name);

AlgebraId make_algebra(AlgebraClass cls, int rank);

}  // namespace liereps
