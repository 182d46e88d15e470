#pragma once

#include <memory>
#include <vector>

#include "liereps/matrix.hpp"
#include "liereps/vec.hpp"

namespace liereps {

// Defining data of a simple algebra, derived once from the hard-coded simple
// roots in orthogonal coordinates and cached.
//
// The orthogonal realizations are normalized so long roots have squared
// length 2, with one exception: C_n keeps the standard integral realization
// (e_i - e_{i+1}, 2 e_n), whose raw dot products carry an overall factor of 2
// relative to that convention. scalar_factor compensates, so scalar products
// agree with the omega-basis metric for every algebra.
struct DefiningData {
    AlgebraId algebra;
    int m = 0;                 // dimension of the orthogonal coordinate space
    RatMat simple_roots_orth;  // rank x m, rows = simple roots
    RatMat coroots_orth;       // rank x m, rows = simple coroots (w.r.t. raw dot)
    Mat<long> cartan;          // rank x rank integer matrix
    RatMat cartan_inv;
    std::vector<Rat> d_diag;   // D matrix diagonal, <a_i,a_i>/2
    RatMat omega_orth;         // rank x m, rows = fundamental weights
    RatMat omega_orth_inv;     // m x rank right-inverse-style map back to omega
    RatMat metric;             // G = A^-1 * diag(d)
    Rat scalar_factor;         // raw orthogonal dot -> normalized scalar product

    // Integer form of the metric: metric == metric_num / metric_den entrywise.
    Mat<long> metric_num;
    long metric_den = 1;
    // Column sums of A^-1 as num/den: height of an omega-label via dot product.
    std::vector<long> height_num;
    long height_den = 1;
};

const DefiningData& defining_data(AlgebraId algebra);

Vec convert_basis(const Vec& v, Basis target);
Rat scalar_product(const Vec& a, const Vec& b);

// ----- integer-label fast paths (omega basis) -----

// <x,y> * metric_den, an exact integer for integral omega labels.
long scalar_num(const DefiningData& dd, const Label& x, const Label& y);
inline Rat scalar_omega(const DefiningData& dd, const Label& x, const Label& y) {
    return rat(scalar_num(dd, x, y), dd.metric_den);
}

// Height (sum of alpha-basis coordinates) * height_den.
long height_num_of(const DefiningData& dd, const Label& x);
Rat height_of(const DefiningData& dd, const Label& x);

std::vector<Rat> alpha_coords(const DefiningData& dd, const Label& x);

}  // namespace liereps
