#pragma once

#include <map>
#include <vector>

#include "liereps/irrep_props.hpp"

namespace liereps {

// An irrep of a product algebra: one Dynkin label per simple factor (in
// factor order) and one exact rational charge per U1 factor (in factor
// order). A simple irrep is the single-factor special case.
struct ProductIrrep {
    ProductAlgebra algebra;
    std::vector<Label> labels;
    std::vector<Rat> charges;

    auto operator<=>(const ProductIrrep&) const = default;
};

ProductIrrep product_irrep(const ProductAlgebra& algebra, std::vector<Label> labels,
                           std::vector<Rat> charges = {});
ProductIrrep as_product(const Irrep& r);

Int dim(const ProductIrrep& r);

struct IrrepSum {
    ProductAlgebra algebra;
    std::vector<std::pair<ProductIrrep, Int>> terms;

    Int total_dim() const;
    bool operator==(const IrrepSum&) const = default;
};

// Sorts terms for display: ascending factor dimensions, then ascending index,
// unbarred before barred, then descending charges and labels.
void sort_for_display(IrrepSum& sum);

// Dominant weights of the given weight list with their tallies, sorted by
// decreasing height viewed as a highest weight.
WeightTable dominant_weights_and_mul(AlgebraId algebra, const std::vector<Label>& weights);

// Removes the irrep of largest height from the collection of dominant
// weights; returns the extracted highest weight.
Label sort_out_irrep(AlgebraId algebra, WeightTable& table);

IrrepSum decompose_product(const std::vector<Irrep>& irreps);
IrrepSum decompose_product(const Irrep& a, const Irrep& b);

// Both decomposition routes, exposed for cross-checking: the generic
// dominant-weight sieve and the SU(N) Young-tableau algorithm.
std::map<Label, Int> decompose_product_generic(const Irrep& a, const Irrep& b);
std::map<Label, Int> decompose_product_young(const Irrep& a, const Irrep& b);

IrrepSum decompose_product_of_product_irreps(const ProductIrrep& a, const ProductIrrep& b);

}  // namespace liereps
