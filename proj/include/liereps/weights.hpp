#pragma once

#include <map>
#include <memory>
#include <vector>

#include "liereps/roots.hpp"

namespace liereps {

struct Irrep {
    AlgebraId algebra;
    Label label;  // Dynkin label of the highest weight, entries >= 0

    auto operator<=>(const Irrep&) const = default;
};

Irrep make_irrep(AlgebraId algebra, Label label);

// Dominant weights with multiplicities, sorted by decreasing height.
using WeightTable = std::vector<std::pair<Label, Int>>;

// xi representatives of the W_T-hat orbit decomposition of the root system,
// paired with the orbit sizes |o_i|; cached per (algebra, T).
struct StabilizerData {
    std::vector<int> t_set;  // 1-based indices i with lambda_i = 0
    std::vector<std::pair<Label, long>> xis;
};

// Level of a weight inside an irrep: number of simple-root subtractions from
// the highest weight. Throws if the weight is not in the root-lattice coset.
long weight_level(const Vec& w, const Irrep& r);
long weight_level_label(const DefiningData& dd, const Label& w, const Irrep& r);
long irrep_height(const Irrep& r);

std::vector<Label> single_dominant_weights(const Irrep& r);

StabilizerData stabilizer_data(AlgebraId algebra, const Label& dominant_weight);

Int weight_multiplicity(const Vec& w, const Irrep& r);
Int weight_multiplicity_label(const Label& dominant_w, const Irrep& r);

std::shared_ptr<const WeightTable> dominant_weight_system(const Irrep& r);

// Full weight system: every weight repeated according to its multiplicity,
// paired with its level, sorted by level then descending label.
std::vector<std::pair<Label, long>> weight_system(const Irrep& r);

// Full weight system as (weight, multiplicity) pairs; cheaper to consume.
std::vector<std::pair<Label, Int>> weight_system_with_mul(const Irrep& r);

Label delta_label(AlgebraId algebra);
Vec delta(AlgebraId algebra);

}  // namespace liereps
