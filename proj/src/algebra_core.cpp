#include "liereps/algebra_core.hpp"

#include <cassert>
#include <stdexcept>

#include "liereps/cache.hpp"

namespace liereps {

namespace {

// Hard-coded simple roots in orthogonal coordinates, one row per simple root.
// Realizations follow the conventional embeddings; any consistent choice is
// acceptable since all outputs are basis-converted, and the Cartan-matrix
// invariant is checked in the test suite.
RatMat simple_roots_for(AlgebraId a, int& m_out, Rat& scalar_factor) {
    const int n = a.rank;
    scalar_factor = Rat(1);
    auto e = [&](RatMat& m, int row, int col, long num, long den = 1) {
        m(row, col) = rat(num, den);
    };
    switch (a.cls) {
        case AlgebraClass::A: {
            m_out = n + 1;
            RatMat r(n, n + 1);
            for (int i = 0; i < n; ++i) {
                e(r, i, i, 1);
                e(r, i, i + 1, -1);
            }
            return r;
        }
        case AlgebraClass::B: {
            m_out = n;
            RatMat r(n, n);
            for (int i = 0; i + 1 < n; ++i) {
                e(r, i, i, 1);
                e(r, i, i + 1, -1);
            }
            e(r, n - 1, n - 1, 1);
            return r;
        }
        case AlgebraClass::C: {
            // Standard integral realization; raw dot products are twice the
            // normalized scalar product (no rational realization with long
            // roots of squared length 2 exists in n dimensions).
            m_out = n;
            scalar_factor = rat(1, 2);
            RatMat r(n, n);
            for (int i = 0; i + 1 < n; ++i) {
                e(r, i, i, 1);
                e(r, i, i + 1, -1);
            }
            e(r, n - 1, n - 1, 2);
            return r;
        }
        case AlgebraClass::D: {
            m_out = n;
            RatMat r(n, n);
            for (int i = 0; i + 1 < n; ++i) {
                e(r, i, i, 1);
                e(r, i, i + 1, -1);
            }
            e(r, n - 1, n - 2, 1);
            e(r, n - 1, n - 1, 1);
            return r;
        }
        case AlgebraClass::G2: {
            // Dual of the standard A2-plane realization: the short root first
            // (d = diag(1/3, 1)), all coordinates rational, coordinates sum to 0.
            m_out = 3;
            RatMat r(2, 3);
            e(r, 0, 0, 1, 3);
            e(r, 0, 1, 1, 3);
            e(r, 0, 2, -2, 3);
            e(r, 1, 1, -1);
            e(r, 1, 2, 1);
            return r;
        }
        case AlgebraClass::F4: {
            m_out = 4;
            RatMat r(4, 4);
            e(r, 0, 1, 1);
            e(r, 0, 2, -1);
            e(r, 1, 2, 1);
            e(r, 1, 3, -1);
            e(r, 2, 3, 1);
            e(r, 3, 0, 1, 2);
            e(r, 3, 1, -1, 2);
            e(r, 3, 2, -1, 2);
            e(r, 3, 3, -1, 2);
            return r;
        }
        case AlgebraClass::E6:
        case AlgebraClass::E7:
        case AlgebraClass::E8: {
            // All three live in R^8 via the chain-with-spur numbering in which
            // the E6 spur is node 6, the E7 spur node 7 and the E8 spur node 8.
            m_out = 8;
            auto chain = [&](RatMat& r, int row, int col) {
                e(r, row, col, -1);
                e(r, row, col + 1, 1);
            };
            auto half_root = [&](RatMat& r, int row) {
                e(r, row, 0, 1, 2);
                e(r, row, 7, 1, 2);
                for (int j = 1; j <= 6; ++j) e(r, row, j, -1, 2);
            };
            auto plus_root = [&](RatMat& r, int row) {
                e(r, row, 0, 1);
                e(r, row, 1, 1);
            };
            if (a.cls == AlgebraClass::E8) {
                RatMat r(8, 8);
                half_root(r, 0);
                for (int i = 1; i <= 6; ++i) chain(r, i, i - 1);
                plus_root(r, 7);
                return r;
            }
            if (a.cls == AlgebraClass::E7) {
                RatMat r(7, 8);
                half_root(r, 0);
                for (int i = 1; i <= 5; ++i) chain(r, i, i - 1);
                plus_root(r, 6);
                return r;
            }
            RatMat r(6, 8);
            half_root(r, 0);
            for (int i = 1; i <= 4; ++i) chain(r, i, i - 1);
            plus_root(r, 5);
            return r;
        }
        case AlgebraClass::U1:
            throw std::invalid_argument("U1 has no defining data");
    }
    throw std::logic_error("unreachable");
}

Rat raw_dot(const RatMat& m, int i, int j) {
    Rat s(0);
    for (std::size_t k = 0; k < m.cols(); ++k) s += m(i, k) * m(j, k);
    return s;
}

DefiningData build(AlgebraId a) {
    DefiningData dd;
    dd.algebra = a;
    dd.simple_roots_orth = simple_roots_for(a, dd.m, dd.scalar_factor);
    const int n = a.rank;

    dd.cartan = Mat<long>(n, n);
    dd.d_diag.resize(n);
    for (int j = 0; j < n; ++j) {
        Rat len = raw_dot(dd.simple_roots_orth, j, j);
        dd.d_diag[j] = len * dd.scalar_factor / 2;
        for (int i = 0; i < n; ++i) {
            Rat aij = 2 * raw_dot(dd.simple_roots_orth, i, j) / len;
            assert(is_integer(aij));
            dd.cartan(i, j) = aij.get_num().get_si();
        }
    }

    // Simple coroots (for the raw dot product) and the fundamental-weight
    // matrix as the right-inverse of the coroot matrix.
    dd.coroots_orth = RatMat(n, dd.m);
    for (int i = 0; i < n; ++i) {
        Rat len = raw_dot(dd.simple_roots_orth, i, i);
        for (int k = 0; k < dd.m; ++k)
            dd.coroots_orth(i, k) = 2 * dd.simple_roots_orth(i, k) / len;
    }
    dd.omega_orth = dd.coroots_orth.right_inverse().transposed();
    dd.omega_orth_inv = dd.coroots_orth.transposed();

    RatMat cartan_rat(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cartan_rat(i, j) = Rat(dd.cartan(i, j));
    dd.cartan_inv = cartan_rat.inverse();

    dd.metric = RatMat(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) dd.metric(i, j) = dd.cartan_inv(i, j) * dd.d_diag[j];

    std::vector<Rat> entries;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) entries.push_back(dd.metric(i, j));
    dd.metric_den = denominator_lcm(entries).get_si();
    dd.metric_num = Mat<long>(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rat v = dd.metric(i, j) * dd.metric_den;
            assert(is_integer(v));
            dd.metric_num(i, j) = v.get_num().get_si();
        }

    std::vector<Rat> colsum(n, Rat(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) colsum[i] += dd.cartan_inv(i, j);
    dd.height_den = denominator_lcm(colsum).get_si();
    dd.height_num.resize(n);
    for (int i = 0; i < n; ++i) {
        Rat v = colsum[i] * dd.height_den;
        dd.height_num[i] = v.get_num().get_si();
    }
    return dd;
}

Memo<AlgebraId, DefiningData> g_defining_data;

}  // namespace

const DefiningData& defining_data(AlgebraId algebra) {
    if (algebra.is_u1()) throw std::invalid_argument("U1 has no defining data");
    static thread_local std::shared_ptr<const DefiningData> last;
    if (last && last->algebra == algebra) return *last;
    last = g_defining_data.get_or_compute(algebra, [&] { return build(algebra); });
    return *last;
}

Label to_label(const Vec& v) {
    assert(v.basis == Basis::Omega);
    Label out;
    out.reserve(v.coords.size());
    for (const Rat& c : v.coords) {
        if (!is_integer(c)) throw std::invalid_argument("omega coordinates are not integral");
        out.push_back(c.get_num().get_si());
    }
    return out;
}

Vec convert_basis(const Vec& v, Basis target) {
    if (v.basis == target) return v;
    const DefiningData& dd = defining_data(v.algebra);
    auto with = [&](std::vector<Rat> coords, Basis b) {
        return Vec{v.algebra, b, v.kind, std::move(coords)};
    };
    // Normalize through the omega basis.
    std::vector<Rat> omega;
    switch (v.basis) {
        case Basis::Omega:
            omega = v.coords;
            break;
        case Basis::Alpha: {
            // a = c * A (alpha coefficients c, Dynkin coordinates a)
            RatMat cartan_rat(dd.cartan.rows(), dd.cartan.cols());
            for (std::size_t i = 0; i < dd.cartan.rows(); ++i)
                for (std::size_t j = 0; j < dd.cartan.cols(); ++j)
                    cartan_rat(i, j) = Rat(dd.cartan(i, j));
            omega = cartan_rat.apply_left(v.coords);
            break;
        }
        case Basis::Orthogonal:
            omega = dd.omega_orth_inv.apply_left(v.coords);
            break;
    }
    switch (target) {
        case Basis::Omega:
            return with(std::move(omega), Basis::Omega);
        case Basis::Alpha:
            return with(dd.cartan_inv.apply_left(omega), Basis::Alpha);
        case Basis::Orthogonal:
            return with(dd.omega_orth.apply_left(omega), Basis::Orthogonal);
    }
    throw std::logic_error("unreachable");
}

Rat scalar_product(const Vec& a, const Vec& b) {
    if (a.algebra != b.algebra) throw std::invalid_argument("scalar product across algebras");
    const DefiningData& dd = defining_data(a.algebra);
    Vec x = convert_basis(a, Basis::Omega);
    Vec y = convert_basis(b, Basis::Omega);
    Rat s(0);
    for (std::size_t i = 0; i < x.coords.size(); ++i)
        for (std::size_t j = 0; j < y.coords.size(); ++j)
            s += x.coords[i] * dd.metric(i, j) * y.coords[j];
    return s;
}

long scalar_num(const DefiningData& dd, const Label& x, const Label& y) {
    const int n = dd.algebra.rank;
    long s = 0;
    for (int i = 0; i < n; ++i) {
        if (!x[i]) continue;
        long row = 0;
        for (int j = 0; j < n; ++j) row += dd.metric_num(i, j) * y[j];
        s += x[i] * row;
    }
    return s;
}

long height_num_of(const DefiningData& dd, const Label& x) {
    long s = 0;
    for (int i = 0; i < dd.algebra.rank; ++i) s += dd.height_num[i] * x[i];
    return s;
}

Rat height_of(const DefiningData& dd, const Label& x) {
    return rat(height_num_of(dd, x), dd.height_den);
}

std::vector<Rat> alpha_coords(const DefiningData& dd, const Label& x) {
    std::vector<Rat> xr(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) xr[i] = Rat(x[i]);
    return dd.cartan_inv.apply_left(xr);
}

}  // namespace liereps
