#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace liereps {

// All core arithmetic is exact: arbitrary-precision integers for dimensions,
// indices and multiplicities, rationals for coordinates and metric data.
using Int = mpz_class;
using Rat = mpq_class;

// Dynkin labels and omega-basis coordinates of roots/weights are always
// integral, so the hot paths work on plain machine-integer vectors.
using Label = std::vector<long>;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline std::string to_string(const Int& v) { return v.get_str(); }

inline std::string to_string(const Rat& r) {
    return is_integer(r) ? r.get_num().get_str() : r.get_str();
}

// Smallest positive integer N such that N*r is integral for every r.
inline Int denominator_lcm(const std::vector<Rat>& values) {
    Int l = 1;
    for (const Rat& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    return l;
}

inline Rat parse_rational(const std::string& text) {
    Rat r(text);
    r.canonicalize();
    return r;
}

}  // namespace liereps
