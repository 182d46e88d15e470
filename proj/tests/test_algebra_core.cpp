#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "liereps/algebra_core.hpp"
#include "liereps/roots.hpp"

using namespace liereps;

namespace {

AlgebraId alg(const std::string& name) { return parse_simple_algebra(name); }

Rat raw_dot_rows(const RatMat& m, int i, int j) {
    Rat s(0);
    for (std::size_t k = 0; k < m.cols(); ++k) s += m(i, k) * m(j, k);
    return s;
}

const std::vector<AlgebraId>& all_test_algebras() {
    static std::vector<AlgebraId> algebras = [] {
        std::vector<AlgebraId> out;
        for (int n = 1; n <= 8; ++n) out.push_back(alg("A" + std::to_string(n)));
        for (int n = 2; n <= 8; ++n) out.push_back(alg("B" + std::to_string(n)));
        for (int n = 2; n <= 8; ++n) out.push_back(alg("C" + std::to_string(n)));
        for (int n = 4; n <= 8; ++n) out.push_back(alg("D" + std::to_string(n)));
        for (const char* e : {"E6", "E7", "E8", "F4", "G2"}) out.push_back(alg(e));
        return out;
    }();
    return algebras;
}

}  // namespace

TEST_CASE("algebra name parsing") {
    CHECK(alg("SU5") == AlgebraId{AlgebraClass::A, 4});
    CHECK(alg("A4") == AlgebraId{AlgebraClass::A, 4});
    CHECK(alg("SO10") == AlgebraId{AlgebraClass::D, 5});
    CHECK(alg("SO7") == AlgebraId{AlgebraClass::B, 3});
    CHECK(alg("Sp8") == AlgebraId{AlgebraClass::C, 4});
    CHECK(alg("E6").rank == 6);
    CHECK(alg("U1").is_u1());

    CHECK_THROWS_AS(alg("B1"), parse_error);
    CHECK_THROWS_AS(alg("C1"), parse_error);
    CHECK_THROWS_AS(alg("D2"), parse_error);
    CHECK_THROWS_AS(alg("D3"), parse_error);
    CHECK_THROWS_AS(alg("SO3"), parse_error);
    CHECK_THROWS_AS(alg("SO6"), parse_error);
    CHECK_THROWS_AS(alg("Sp7"), parse_error);
    CHECK_THROWS_AS(alg("Sp2"), parse_error);
    CHECK_THROWS_AS(alg("X9"), parse_error);

    ProductAlgebra p = parse_algebra("SU3*SU2*U1");
    CHECK(p.factors.size() == 3);
    CHECK(p.factors[0] == AlgebraId{AlgebraClass::A, 2});
    CHECK(p.factors[2].is_u1());
}

TEST_CASE("A4 defining data matches the reference matrices") {
    const DefiningData& dd = defining_data(alg("A4"));
    // simple roots e_i - e_{i+1}
    CHECK(dd.m == 5);
    CHECK(dd.simple_roots_orth(0, 0) == 1);
    CHECK(dd.simple_roots_orth(0, 1) == -1);
    CHECK(dd.simple_roots_orth(3, 3) == 1);
    CHECK(dd.simple_roots_orth(3, 4) == -1);

    long cartan_expected[4][4] = {{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(dd.cartan(i, j) == cartan_expected[i][j]);

    // first row of the fundamental-weight matrix
    CHECK(dd.omega_orth(0, 0) == rat(4, 5));
    for (int k = 1; k < 5; ++k) CHECK(dd.omega_orth(0, k) == rat(-1, 5));

    long metric_num[4][4] = {{4, 3, 2, 1}, {3, 6, 4, 2}, {2, 4, 6, 3}, {1, 2, 3, 4}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(dd.metric(i, j) == rat(metric_num[i][j], 5));
}

TEST_CASE("D matrix diagonals") {
    const DefiningData& f4 = defining_data(alg("F4"));
    CHECK(f4.d_diag == std::vector<Rat>{Rat(1), Rat(1), rat(1, 2), rat(1, 2)});
    const DefiningData& g2 = defining_data(alg("G2"));
    CHECK(g2.d_diag == std::vector<Rat>{rat(1, 3), Rat(1)});
    const DefiningData& c4 = defining_data(alg("C4"));
    CHECK(c4.d_diag == std::vector<Rat>{rat(1, 2), rat(1, 2), rat(1, 2), Rat(1)});
}

TEST_CASE("basis conversions on A4") {
    AlgebraId a4 = alg("A4");
    Vec first_root{a4, Basis::Orthogonal, Kind::Root,
                   {Rat(1), Rat(-1), Rat(0), Rat(0), Rat(0)}};
    Vec omega = convert_basis(first_root, Basis::Omega);
    CHECK(omega.coords == std::vector<Rat>{Rat(2), Rat(-1), Rat(0), Rat(0)});
    Vec alpha = convert_basis(first_root, Basis::Alpha);
    CHECK(alpha.coords == std::vector<Rat>{Rat(1), Rat(0), Rat(0), Rat(0)});

    // first fundamental weight in the alpha basis
    Vec w1 = omega_vec(a4, {1, 0, 0, 0});
    Vec w1_alpha = convert_basis(w1, Basis::Alpha);
    CHECK(w1_alpha.coords == std::vector<Rat>{rat(4, 5), rat(3, 5), rat(2, 5), rat(1, 5)});
}

TEST_CASE("scalar products") {
    AlgebraId a4 = alg("A4");
    const DefiningData& dd = defining_data(a4);
    Vec a1 = omega_vec(a4, {2, -1, 0, 0}, Kind::Root);
    CHECK(scalar_product(a1, a1) == 2);

    const DefiningData& g2 = defining_data(alg("G2"));
    Vec short_root = omega_vec(alg("G2"), {2, -1}, Kind::Root);
    CHECK(scalar_product(short_root, short_root) == rat(2, 3));

    // <omega_i, alpha_j^vee> = delta_ij
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Label omega_i(4, 0), alpha_j(4);
            omega_i[i] = 1;
            for (int k = 0; k < 4; ++k) alpha_j[k] = dd.cartan(j, k);
            Rat ip = 2 * scalar_omega(dd, omega_i, alpha_j) / scalar_omega(dd, alpha_j, alpha_j);
            CHECK(ip == (i == j ? 1 : 0));
        }
}

TEST_CASE("Cartan matrix recomputed from simple roots for every algebra") {
    for (AlgebraId a : all_test_algebras()) {
        const DefiningData& dd = defining_data(a);
        for (int i = 0; i < a.rank; ++i)
            for (int j = 0; j < a.rank; ++j) {
                Rat aij = 2 * raw_dot_rows(dd.simple_roots_orth, i, j) /
                          raw_dot_rows(dd.simple_roots_orth, j, j);
                CHECK(aij == dd.cartan(i, j));
            }
    }
}

TEST_CASE("right-inverse property of the fundamental-weight matrix") {
    for (AlgebraId a : all_test_algebras()) {
        const DefiningData& dd = defining_data(a);
        RatMat prod = dd.coroots_orth * dd.omega_orth.transposed();
        CHECK(prod == RatMat::identity(a.rank));
    }
}

TEST_CASE("metric = cartan^-1 * diag(d), symmetric") {
    for (AlgebraId a : all_test_algebras()) {
        const DefiningData& dd = defining_data(a);
        for (int i = 0; i < a.rank; ++i)
            for (int j = 0; j < a.rank; ++j) {
                CHECK(dd.metric(i, j) == dd.cartan_inv(i, j) * dd.d_diag[j]);
                CHECK(dd.metric(i, j) == dd.metric(j, i));
            }
    }
}

TEST_CASE("basis round trips are exact on random integer omega vectors") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<long> digit(-9, 9);
    for (AlgebraId a : all_test_algebras()) {
        for (int trial = 0; trial < 100; ++trial) {
            Label lab(a.rank);
            for (long& v : lab) v = digit(rng);
            Vec w = omega_vec(a, lab);
            CHECK(convert_basis(convert_basis(w, Basis::Alpha), Basis::Omega) == w);
            CHECK(convert_basis(convert_basis(w, Basis::Orthogonal), Basis::Omega) == w);
        }
    }
}

TEST_CASE("scalar product agrees between omega metric and orthogonal dot") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> digit(-4, 4);
    for (AlgebraId a : all_test_algebras()) {
        const DefiningData& dd = defining_data(a);
        for (int trial = 0; trial < 20; ++trial) {
            Label x(a.rank), y(a.rank);
            for (long& v : x) v = digit(rng);
            for (long& v : y) v = digit(rng);
            Vec vx = omega_vec(a, x), vy = omega_vec(a, y);
            Vec ox = convert_basis(vx, Basis::Orthogonal);
            Vec oy = convert_basis(vy, Basis::Orthogonal);
            Rat dot(0);
            for (int k = 0; k < dd.m; ++k) dot += ox.coords[k] * oy.coords[k];
            CHECK(scalar_product(vx, vy) == dot * dd.scalar_factor);
            CHECK(scalar_product(vx, vy) == scalar_omega(dd, x, y));
        }
    }
}
