#pragma once

#include <string>
#include <vector>

#include "liereps/branching.hpp"

namespace liereps {

enum class OutputFormat { Plain, Dynkin, Latex, Csv };

// ----- dimensional names -----

// Plain ASCII form: 175', bar(175)', 8_v. Accepted back by parse_irrep_spec.
std::string render_name(const DimName& name, OutputFormat format = OutputFormat::Plain);

// ----- Dynkin labels, weights and roots -----

// Dynkin form <a1a2...>; commas appear when any digit needs them.
std::string render_label(const Label& label, OutputFormat format = OutputFormat::Dynkin);
std::string render_vec(const Vec& v, OutputFormat format);

// ----- irreps and sums -----

std::string render_irrep(const Irrep& r, OutputFormat format);
std::string render_product_irrep(const ProductIrrep& r, OutputFormat format);
std::string render_sum(const IrrepSum& sum, OutputFormat format);

// ----- parsing -----

// Accepts an explicit Dynkin label "(a1,a2,...)" or a dimensional name with
// the ASCII conventions above: "8", "175'", "bar(175)'", "8_s". Bar and
// primes may be nested in any order: bar(175') == bar(175)'.
Irrep parse_irrep_spec(AlgebraId algebra, const std::string& text, int max_digit = 3);

// ----- table generation -----

// All irreps of dimension <= max_dim whose dimensional name is unbarred
// (the display representatives), sorted by dimension then index.
std::vector<Irrep> table_irreps(AlgebraId algebra, const Int& max_dim);

enum class TableKind { Irreps, Products, Branchings };

std::string generate_table(TableKind kind, AlgebraId algebra, const Int& max_dim,
                           OutputFormat format = OutputFormat::Plain);

}  // namespace liereps
