#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "liereps/format.hpp"
#include "liereps/irrep_props.hpp"

using namespace liereps;

namespace {
AlgebraId alg(const std::string& name) { return parse_simple_algebra(name); }
Irrep irrep(const std::string& a, Label lab) { return make_irrep(alg(a), std::move(lab)); }
}

TEST_CASE("dimensions") {
    CHECK(dim(irrep("A4", {0, 0, 1, 1})) == 40);
    CHECK(dim(irrep("A4", {0, 0, 0, 0})) == 1);
    CHECK(dim(irrep("E8", {0, 0, 0, 0, 0, 0, 1, 0})) == 248);
    CHECK(dim(irrep("E7", {0, 0, 0, 0, 0, 1, 0})) == 56);
    CHECK(dim(irrep("E6", {1, 0, 0, 0, 0, 0})) == 27);
    CHECK(dim(irrep("F4", {0, 0, 0, 1})) == 26);
    CHECK(dim(irrep("G2", {1, 0})) == 7);
    CHECK(dim(irrep("B4", {0, 0, 0, 1})) == 16);
}

TEST_CASE("indices") {
    CHECK(index_raw(irrep("A4", {0, 0, 1, 1})) == 22);
    CHECK(index_raw(irrep("A1", {2})) == 4);
    CHECK(index_raw(irrep("A1", {0})) == 0);
    CHECK(index_normalized(irrep("G2", {3, 0})) == 44);
    CHECK(index_normalized(irrep("G2", {0, 2})) == 55);
}

TEST_CASE("congruency classes") {
    CHECK(congruency_class(irrep("A4", {0, 1, 0, 0})).values == std::vector<long>{2});
    CHECK(congruency_class(irrep("D4", {1, 0, 0, 0})).values == std::vector<long>{0, 2});
    CHECK(congruency_class(irrep("D4", {0, 0, 1, 0})).values == std::vector<long>{1, 2});
    CHECK(congruency_class(irrep("D4", {0, 0, 0, 1})).values == std::vector<long>{1, 0});
    CHECK(congruency_class(irrep("E8", {1, 0, 0, 0, 0, 0, 0, 0})).values == std::vector<long>{0});
    CHECK(congruency_class(irrep("E6", {1, 0, 0, 0, 0, 0})).values == std::vector<long>{1});
    CHECK(congruency_class(irrep("D5", {0, 0, 0, 0, 1})).values == std::vector<long>{1, 1});
    CHECK(congruency_class(irrep("D5", {0, 0, 0, 1, 0})).values == std::vector<long>{1, 3});
}

TEST_CASE("irreps by dimension") {
    auto found = irreps_by_dim(alg("A4"), 70, 4);
    std::set<Label> labels;
    for (const Irrep& r : found) labels.insert(r.label);
    CHECK(labels ==
          std::set<Label>{{2, 0, 0, 1}, {1, 0, 0, 2}, {0, 0, 0, 4}, {4, 0, 0, 0}});

    auto threes = irreps_by_dim(alg("A2"), 3, 3);
    CHECK(threes.size() == 2);

    auto g2 = irreps_by_dim(alg("G2"), 77, 3);
    std::set<Label> g2l;
    for (const Irrep& r : g2) g2l.insert(r.label);
    CHECK(g2l == std::set<Label>{{3, 0}, {0, 2}});
}

TEST_CASE("dimensional names") {
    DimName n = dim_name(irrep("A4", {0, 0, 2, 1}));
    CHECK(n.dim == 175);
    CHECK(n.n_primes == 1);
    CHECK(n.barred);

    n = dim_name(irrep("A4", {0, 1, 0, 2}));
    CHECK(n.dim == 126);
    CHECK(n.n_primes == 0);
    CHECK(n.barred);

    n = dim_name(irrep("D4", {2, 0, 1, 0}));
    CHECK(n.dim == 224);
    CHECK(n.subscript == "vc");
    CHECK_FALSE(n.barred);

    n = dim_name(irrep("G2", {0, 2}));
    CHECK(n.dim == 77);
    CHECK(n.n_primes == 1);

    n = dim_name(irrep("A4", {0, 1, 0, 0}));
    CHECK(n.dim == 10);
    CHECK_FALSE(n.barred);
    n = dim_name(irrep("A4", {0, 0, 1, 0}));
    CHECK(n.barred);

    // SO(8) examples across the subscript rules
    CHECK(dim_name(irrep("D4", {1, 0, 0, 0})).subscript == "v");
    CHECK(dim_name(irrep("D4", {0, 0, 0, 1})).subscript == "s");
    CHECK(dim_name(irrep("D4", {0, 0, 1, 0})).subscript == "c");
    CHECK(dim_name(irrep("D4", {2, 0, 0, 0})).subscript == "v");
    CHECK(dim_name(irrep("D4", {0, 0, 0, 2})).subscript == "s");
    CHECK(dim_name(irrep("D4", {0, 1, 0, 0})).subscript.empty());
    CHECK(dim_name(irrep("D4", {1, 0, 0, 2})).subscript == "sv");
    CHECK(dim_name(irrep("D4", {2, 0, 2, 0})).subscript == "s");
    CHECK(dim_name(irrep("D4", {2, 0, 2, 0})).n_primes == 1);
}

TEST_CASE("irrep by name") {
    DimName seventy_prime{Int(70), 1, false, ""};
    CHECK(irrep_by_name(alg("A4"), seventy_prime, 4).label == Label{0, 0, 0, 4});
    CHECK_THROWS_AS(irrep_by_name(alg("A4"), seventy_prime, 3), name_error);

    DimName eight{Int(8), 0, false, ""};
    CHECK(irrep_by_name(alg("A2"), eight).label == Label{1, 1});
}

TEST_CASE("name round trip on small tables") {
    for (const char* name : {"A2", "A3", "B3", "C3", "G2"}) {
        AlgebraId a = alg(name);
        for (const Irrep& r : table_irreps(a, 200)) {
            DimName n = dim_name(r);
            CHECK(irrep_by_name(a, n, 9) == r);
        }
    }
}

TEST_CASE("conjugation preserves dimension and index") {
    std::vector<Irrep> suite = {irrep("A4", {0, 0, 1, 1}), irrep("A4", {2, 0, 0, 1}),
                                irrep("A2", {3, 1}), irrep("D5", {0, 0, 0, 0, 1}),
                                irrep("E6", {1, 0, 0, 0, 0, 0})};
    for (const Irrep& r : suite) {
        Irrep c = conjugate(r);
        CHECK(dim(c) == dim(r));
        CHECK(index_raw(c) == index_raw(r));
        CHECK(conjugate(c) == r);
    }
    CHECK(dim(conjugate(irrep("E6", {1, 0, 0, 0, 0, 0}))) == 27);
    CHECK(congruency_class(conjugate(irrep("E6", {1, 0, 0, 0, 0, 0}))).values ==
          std::vector<long>{2});
}

TEST_CASE("Young shapes and basic irreps") {
    CHECK(young_shape(irrep("A4", {1, 2, 0, 1})) == std::vector<long>{4, 3, 1, 1});
    CHECK(young_shape(irrep("A4", {1, 0, 0, 0})) == std::vector<long>{1});
    CHECK(young_shape(irrep("A4", {0, 0, 0, 0})).empty());
    CHECK_THROWS(young_shape(irrep("B3", {1, 0, 0})));

    auto basics = basic_irreps(alg("A5"));
    REQUIRE(basics.size() == 5);
    std::vector<Int> dims;
    for (const Irrep& r : basics) dims.push_back(dim(r));
    CHECK(dims == std::vector<Int>{6, 15, 20, 15, 6});
}

TEST_CASE("dim equals weight system size") {
    for (const Irrep& r : {irrep("A3", {1, 1, 1}), irrep("B3", {0, 1, 0}),
                           irrep("G2", {1, 1}), irrep("C3", {1, 0, 1})}) {
        CHECK(dim(r) == Int(static_cast<unsigned long>(weight_system(r).size())));
    }
}
