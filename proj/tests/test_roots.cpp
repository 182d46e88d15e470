#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "liereps/irrep_props.hpp"
#include "liereps/roots.hpp"

using namespace liereps;

namespace {
AlgebraId alg(const std::string& name) { return parse_simple_algebra(name); }
}

TEST_CASE("G2 root system") {
    auto rs = root_system(alg("G2"));
    CHECK(rs->roots.size() == 14);
    CHECK(rs->n_positive == 6);
    CHECK(highest_root(alg("G2")) == Label{0, 1});

    std::set<Label> pos(positive_roots(alg("G2")).begin(), positive_roots(alg("G2")).end());
    std::set<Label> expected{{0, 1}, {3, -1}, {1, 0}, {-1, 1}, {-3, 2}, {2, -1}};
    CHECK(pos == expected);

    // spindle partition: row sizes by height 5..-5
    const DefiningData& dd = defining_data(alg("G2"));
    std::map<long, int, std::greater<long>> rows;
    for (const Label& r : rs->roots) rows[height_num_of(dd, r)] += 1;
    std::vector<int> sizes;
    for (const auto& [h, c] : rows) sizes.push_back(c);
    CHECK(sizes == std::vector<int>{1, 1, 1, 1, 2, 2, 2, 1, 1, 1, 1});
}

TEST_CASE("small root systems") {
    auto a1 = root_system(alg("A1"));
    CHECK(a1->roots.size() == 3);
    CHECK(a1->roots == std::vector<Label>{{2}, {0}, {-2}});

    auto a4 = root_system(alg("A4"));
    CHECK(a4->roots.size() == 24);
    CHECK(a4->n_positive == 10);
    CHECK(highest_root(alg("A4")) == Label{1, 0, 0, 1});

    CHECK(highest_root(alg("C4")) == Label{2, 0, 0, 0});
    CHECK(highest_root(alg("B4")) == Label{0, 1, 0, 0});
    CHECK(highest_root(alg("D4")) == Label{0, 1, 0, 0});
    CHECK(highest_root(alg("F4")) == Label{1, 0, 0, 0});
    CHECK(highest_root(alg("E6")) == Label{0, 0, 0, 0, 0, 1});
    CHECK(highest_root(alg("E7")) == Label{1, 0, 0, 0, 0, 0, 0});
    CHECK(highest_root(alg("E8")) == Label{0, 0, 0, 0, 0, 0, 1, 0});
}

TEST_CASE("heights") {
    AlgebraId g2 = alg("G2");
    CHECK(height(omega_vec(g2, {0, 1}, Kind::Root)) == 5);
    CHECK(height(omega_vec(g2, {2, -1}, Kind::Root)) == 1);
    CHECK(height(omega_vec(g2, {0, 0}, Kind::Root)) == 0);
}

TEST_CASE("positive root predicate") {
    AlgebraId g2 = alg("G2");
    CHECK(is_positive_root(omega_vec(g2, {3, -1}, Kind::Root)));
    CHECK_FALSE(is_positive_root(omega_vec(g2, {0, 0}, Kind::Root)));
    CHECK_FALSE(is_positive_root(omega_vec(g2, {-3, 1}, Kind::Root)));
    // a dominant weight that is not a root
    CHECK_FALSE(is_positive_root(omega_vec(g2, {2, 0}, Kind::Root)));
}

TEST_CASE("root system invariants across algebras") {
    for (const char* name : {"A2", "A4", "B3", "B4", "C3", "C4", "D4", "D5", "G2", "F4", "E6"}) {
        AlgebraId a = alg(name);
        auto rs = root_system(a);
        // adjoint dimension via the Weyl formula
        Irrep adjoint{a, highest_root(a)};
        CHECK(Int(static_cast<unsigned long>(rs->roots.size())) == dim(adjoint));
        CHECK(2 * rs->n_positive + a.rank == int(rs->roots.size()));
        // negation closure
        std::set<Label> all(rs->roots.begin(), rs->roots.end());
        for (const Label& r : rs->roots) {
            Label neg(r.size());
            for (std::size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
            CHECK(all.count(neg) == 1);
        }
        // delta is half the positive-root sum
        Label sum(a.rank, 0);
        for (const Label& r : positive_roots(a))
            for (int i = 0; i < a.rank; ++i) sum[i] += r[i];
        for (int i = 0; i < a.rank; ++i) CHECK(sum[i] == 2);
    }
}

TEST_CASE("spindle text for G2") {
    auto rs = root_system(alg("G2"));
    std::string text = spindle_text(*rs);
    CHECK(text.substr(0, text.find('\n')) == "<0,1>");
    CHECK(std::count(text.begin(), text.end(), '\n') == 10);
}
