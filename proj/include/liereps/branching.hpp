#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "liereps/tensor.hpp"

namespace liereps {

// Exact-rational matrix sending origin omega coordinates (as a column) to the
// concatenated target coordinates: one row block per target factor in factor
// order, a single charge row per U1 factor.
struct ProjectionMatrix {
    AlgebraId origin;
    ProductAlgebra target;
    RatMat matrix;
};

struct NonSemiSimpleRule {
    int drop = 0;  // 1-based simple root index; negative counts from the end
};
struct SemiSimpleRule {
    int drop = 0;  // 1-based index into the extended Dynkin diagram
};
struct SpecialRule {
    std::vector<ProductIrrep> targets;  // branching of the generating irrep
};

struct EmbeddingRule {
    AlgebraId origin;
    ProductAlgebra target;
    std::variant<NonSemiSimpleRule, SemiSimpleRule, SpecialRule> kind;
};

class branching_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Smallest non-trivial orbit of the generating irrep defines the projection
// matrices; the spinor for B_n/D_n, the fundamental for A_n/C_n.
Irrep generating_irrep(AlgebraId algebra);

ProjectionMatrix non_semisimple_projection(AlgebraId origin, int drop);
ProjectionMatrix semisimple_projection(AlgebraId origin, int drop);
ProjectionMatrix special_projection(AlgebraId origin, const std::vector<ProductIrrep>& targets);

// Branching-rule registry. The built-in registry covers the embeddings used
// by the bundled tables; extra rules can be loaded from a text file with one
// rule per line:
//   ORIGIN -> TARGET : nonsemisimple(drop=K)
//   ORIGIN -> TARGET : semisimple(drop=K)
//   ORIGIN -> TARGET : special((a,b,..)(c,..) ; (a,b,..)(c,..) ; ...)
// where TARGET is a '*'-joined product algebra and each special target lists
// one parenthesized Dynkin label per simple target factor.
class BranchingRegistry {
  public:
    static BranchingRegistry& instance();

    void load_text(const std::string& text);
    void load_file(const std::string& path);

    // Resolves a rule for the pair; falls back to a parametric search over
    // single-node drops of the plain and extended Dynkin diagrams.
    ProjectionMatrix lookup(AlgebraId origin, const ProductAlgebra& target);

    std::vector<ProductAlgebra> known_targets(AlgebraId origin) const;

  private:
    BranchingRegistry();
    std::vector<EmbeddingRule> rules_;
};

ProjectionMatrix registry_lookup(AlgebraId origin, const ProductAlgebra& target);

IrrepSum decompose_irrep(const Irrep& r, const ProductAlgebra& target);
IrrepSum decompose_irrep(const Irrep& r, const ProjectionMatrix& projection);
// Decomposes the simple factor at 1-based position pos of a product irrep,
// splicing the branched factors (and their U1 charges) in place.
IrrepSum decompose_irrep_at(const ProductIrrep& p, const ProductAlgebra& target, int pos);

EmbeddingRule parse_rule_line(const std::string& line);

}  // namespace liereps
