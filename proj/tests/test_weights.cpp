#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "liereps/irrep_props.hpp"
#include "liereps/weights.hpp"

using namespace liereps;

namespace {

AlgebraId alg(const std::string& name) { return parse_simple_algebra(name); }

Irrep irrep(const std::string& a, Label lab) { return make_irrep(alg(a), std::move(lab)); }

// Independent oracle: the plain Freudenthal recursion over all positive
// roots, with no stabilizer machinery.
std::map<Label, Int> plain_freudenthal(const Irrep& r) {
    const DefiningData& dd = defining_data(r.algebra);
    const auto& pos = positive_roots(r.algebra);
    std::vector<Label> dws = single_dominant_weights(r);
    std::sort(dws.begin(), dws.end(), [&](const Label& a, const Label& b) {
        return height_num_of(dd, a) > height_num_of(dd, b);
    });
    const int n = r.algebra.rank;
    Label delta(n, 1), top(n);
    for (int i = 0; i < n; ++i) top[i] = r.label[i] + 1;
    const long norm_top = scalar_num(dd, top, top);

    std::map<Label, Int> mult;
    for (const Label& w : dws) {
        if (w == r.label) {
            mult[w] = 1;
            continue;
        }
        Int numerator = 0;
        for (const Label& a : pos) {
            for (long k = 1;; ++k) {
                Label higher(n);
                for (int i = 0; i < n; ++i) higher[i] = w[i] + k * a[i];
                auto it = mult.find(to_dominant_label(dd, higher));
                if (it == mult.end()) break;
                numerator += it->second * (2 * scalar_num(dd, higher, a));
            }
        }
        Label wd(n);
        for (int i = 0; i < n; ++i) wd[i] = w[i] + 1;
        long den = norm_top - scalar_num(dd, wd, wd);
        REQUIRE(den > 0);
        REQUIRE(numerator % den == 0);
        mult[w] = numerator / den;
    }
    return mult;
}

}  // namespace

TEST_CASE("weight levels and irrep height") {
    Irrep r = irrep("A4", {0, 0, 1, 1});
    CHECK(weight_level(omega_vec(alg("A4"), {0, 0, 1, 1}), r) == 0);
    CHECK(irrep_height(r) == 10);
    CHECK(weight_level(omega_vec(alg("A4"), {-1, -1, 0, 0}), r) == 10);
    CHECK_THROWS(weight_level(omega_vec(alg("A4"), {1, 0, 0, 0}), r));
}

TEST_CASE("single dominant weights") {
    auto dws = single_dominant_weights(irrep("A4", {0, 0, 1, 1}));
    std::set<Label> got(dws.begin(), dws.end());
    CHECK(got == std::set<Label>{{0, 0, 1, 1}, {0, 1, 0, 0}});

    auto fund = single_dominant_weights(irrep("A4", {1, 0, 0, 0}));
    CHECK(fund.size() == 1);

    auto g2 = single_dominant_weights(irrep("G2", {1, 0}));
    std::set<Label> g2got(g2.begin(), g2.end());
    CHECK(g2got == std::set<Label>{{1, 0}, {0, 0}});
}

TEST_CASE("stabilizer data for the printed A4 example") {
    StabilizerData sd = stabilizer_data(alg("A4"), {0, 1, 0, 0});
    CHECK(sd.t_set == std::vector<int>{1, 3, 4});
    REQUIRE(sd.xis.size() == 3);
    CHECK(sd.xis[0] == std::pair<Label, long>{{1, 0, 0, 1}, 12});
    CHECK(sd.xis[1] == std::pair<Label, long>{{0, -1, 1, 1}, 6});
    CHECK(sd.xis[2] == std::pair<Label, long>{{2, -1, 0, 0}, 2});
}

TEST_CASE("stabilizer data for a strictly dominant weight") {
    StabilizerData sd = stabilizer_data(alg("A3"), {1, 2, 1});
    CHECK(sd.t_set.empty());
    long total = 0;
    for (const auto& [xi, o] : sd.xis) {
        CHECK(o == 2);
        total += o;
    }
    CHECK(total == 2 * num_positive_roots(alg("A3")));
}

TEST_CASE("weight multiplicities") {
    CHECK(weight_multiplicity(omega_vec(alg("A4"), {0, 1, 0, 0}), irrep("A4", {0, 0, 1, 1})) == 2);
    CHECK(weight_multiplicity(omega_vec(alg("A4"), {0, 0, 1, 1}), irrep("A4", {0, 0, 1, 1})) == 1);
    CHECK(weight_multiplicity(omega_vec(alg("G2"), {0, 0}), irrep("G2", {0, 1})) == 2);
    // non-member
    CHECK(weight_multiplicity(omega_vec(alg("A4"), {1, 0, 0, 0}), irrep("A4", {0, 0, 1, 1})) == 0);
}

TEST_CASE("dominant weight systems") {
    auto t = dominant_weight_system(irrep("A4", {0, 0, 1, 1}));
    REQUIRE(t->size() == 2);
    CHECK((*t)[0] == std::pair<Label, Int>{{0, 0, 1, 1}, 1});
    CHECK((*t)[1] == std::pair<Label, Int>{{0, 1, 0, 0}, 2});

    auto trivial = dominant_weight_system(irrep("A2", {0, 0}));
    REQUIRE(trivial->size() == 1);
    CHECK((*trivial)[0].second == 1);

    auto adjoint = dominant_weight_system(irrep("A2", {1, 1}));
    REQUIRE(adjoint->size() == 2);
    CHECK((*adjoint)[0] == std::pair<Label, Int>{{1, 1}, 1});
    CHECK((*adjoint)[1] == std::pair<Label, Int>{{0, 0}, 2});
}

TEST_CASE("full weight system of the 40 of A4") {
    Irrep r = irrep("A4", {0, 0, 1, 1});
    auto ws = weight_system(r);
    CHECK(ws.size() == 40);
    std::map<long, int> rows;
    for (const auto& [w, level] : ws) rows[level] += 1;
    std::vector<int> sizes;
    for (const auto& [level, c] : rows) sizes.push_back(c);
    CHECK(sizes == std::vector<int>{1, 2, 3, 5, 6, 6, 6, 5, 3, 2, 1});
    // vector sum over the full system vanishes
    Label sum(4, 0);
    for (const auto& [w, level] : ws)
        for (int i = 0; i < 4; ++i) sum[i] += w[i];
    CHECK(sum == Label{0, 0, 0, 0});
}

TEST_CASE("small weight systems") {
    CHECK(weight_system(irrep("A1", {1})).size() == 2);
    CHECK(weight_system(irrep("A2", {1, 0})).size() == 3);
}

TEST_CASE("delta") {
    CHECK(delta_label(alg("A4")) == Label{1, 1, 1, 1});
    CHECK(delta_label(alg("A1")) == Label{1});
}

TEST_CASE("modified Freudenthal agrees with the plain recursion") {
    std::vector<Irrep> suite = {
        irrep("A1", {6}),          irrep("A2", {1, 1}),       irrep("A2", {2, 2}),
        irrep("A3", {1, 1, 1}),    irrep("A3", {0, 2, 0}),    irrep("A4", {0, 0, 1, 1}),
        irrep("A4", {1, 1, 0, 0}), irrep("B3", {0, 1, 0}),    irrep("B3", {1, 0, 1}),
        irrep("C3", {1, 1, 0}),    irrep("C3", {0, 0, 2}),    irrep("D4", {1, 0, 1, 1}),
        irrep("D4", {0, 2, 0, 0}), irrep("G2", {1, 1}),       irrep("G2", {0, 2}),
        irrep("F4", {1, 0, 0, 1}),
    };
    for (const Irrep& r : suite) {
        auto oracle = plain_freudenthal(r);
        auto table = dominant_weight_system(r);
        REQUIRE(oracle.size() == table->size());
        for (const auto& [w, m] : *table) {
            INFO(r.algebra.name());
            CHECK(oracle.at(w) == m);
        }
    }
}

TEST_CASE("weight table sums reproduce the dimension") {
    std::vector<Irrep> suite = {
        irrep("A2", {3, 3}), irrep("A4", {1, 0, 0, 1}), irrep("B3", {0, 0, 3}),
        irrep("C3", {2, 0, 1}), irrep("D4", {1, 1, 0, 0}), irrep("G2", {2, 1}),
        irrep("F4", {0, 0, 0, 2}),
    };
    for (const Irrep& r : suite) {
        Int total = 0;
        for (const auto& [w, m] : *dominant_weight_system(r))
            total += m * orbit_size(r.algebra, w);
        CHECK(total == dim(r));
    }
}

TEST_CASE("weight system is Weyl invariant") {
    Irrep r = irrep("B3", {1, 0, 1});
    const DefiningData& dd = defining_data(r.algebra);
    std::map<Label, Int> mult;
    for (const auto& [w, m] : weight_system_with_mul(r)) mult[w] += m;
    for (int i = 1; i <= 3; ++i) {
        std::map<Label, Int> reflected;
        for (const auto& [w, m] : mult) reflected[reflect_label(dd, w, i)] += m;
        CHECK(reflected == mult);
    }
}
