#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liereps/weights.hpp"

namespace liereps {

// Dimensional name: dimension with primes, an overbar for the higher
// congruency class of a conjugate pair, and v/s/c subscripts for SO(8).
struct DimName {
    Int dim;
    int n_primes = 0;
    bool barred = false;
    std::string subscript;  // non-empty only for D4

    auto operator<=>(const DimName&) const = default;
};

struct CongruencyClass {
    std::vector<long> values;   // one entry, or two for D_n
    std::vector<long> moduli;   // n+1 | 2 | 2 | (2,4) | 3 | 2 | 1

    auto operator<=>(const CongruencyClass&) const = default;
    std::string str() const;
};

Int dim(const Irrep& r);
Int algebra_order(AlgebraId algebra);  // number of roots = dim of the adjoint

// Raw index l = dim/ord * <L, L+2delta>. The appendix tables divide by a
// per-algebra factor; index_table_factor supplies it (1, 2, 6, 12 or 60).
Rat index_raw(const Irrep& r);
long index_table_factor(AlgebraId algebra);
Rat index_normalized(const Irrep& r);

CongruencyClass congruency_class(const Irrep& r);

// Conjugate irrep (label reversal for A_n, spinor swap for odd D_n, diagram
// flip for E6; identity for the rest).
Irrep conjugate(const Irrep& r);

// All irreps of the given dimension with Dynkin digits <= max_digit.
std::vector<Irrep> irreps_by_dim(AlgebraId algebra, const Int& dim, int max_digit);

// Number added to the max Dynkin digit when scanning for same-dimension
// irreps during naming (accuracy/efficiency balance).
int name_digit_offset(AlgebraId algebra);

DimName dim_name(const Irrep& r);

class name_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Inverse lookup; throws name_error when nothing within max_digit matches.
Irrep irrep_by_name(AlgebraId algebra, const DimName& name, int max_digit = 3);

// Row lengths of the Young tableau of an SU(N) irrep.
std::vector<long> young_shape(const Irrep& r);
std::vector<Irrep> basic_irreps(AlgebraId algebra);

}  // namespace liereps
