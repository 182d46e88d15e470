#include "liereps/branching.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <mutex>
#include <sstream>

#include "liereps/cache.hpp"

namespace liereps {

namespace {

// ----- diagram components and their canonical node orders -----

struct Component {
    AlgebraId id;
    std::vector<int> nodes;  // canonical order; node 0 stands for the extended root
};

// Pairwise Cartan integers over an arbitrary node set, given omega labels of
// the attached roots.
struct NodeSystem {
    AlgebraId origin;
    std::vector<int> nodes;
    std::vector<Label> roots;  // omega labels, parallel to nodes

    long cartan_entry(std::size_t i, std::size_t j) const {
        const DefiningData& dd = defining_data(origin);
        long num = 2 * scalar_num(dd, roots[i], roots[j]);
        long den = scalar_num(dd, roots[j], roots[j]);
        assert(num % den == 0);
        return num / den;
    }
};

std::vector<AlgebraClass> candidate_classes(int rank) {
    std::vector<AlgebraClass> out{AlgebraClass::A};
    if (rank >= 2) {
        out.push_back(AlgebraClass::B);
        out.push_back(AlgebraClass::C);
    }
    if (rank >= 4) out.push_back(AlgebraClass::D);
    if (rank == 2) out.push_back(AlgebraClass::G2);
    if (rank == 4) out.push_back(AlgebraClass::F4);
    if (rank == 6) out.push_back(AlgebraClass::E6);
    if (rank == 7) out.push_back(AlgebraClass::E7);
    if (rank == 8) out.push_back(AlgebraClass::E8);
    return out;
}

// Finds node orders of `member_idx` under which the sub-Cartan matrix equals
// the canonical Cartan matrix of (cls, rank); returns all valid orders.
std::vector<std::vector<int>> match_orders(const NodeSystem& sys,
                                           const std::vector<int>& member_idx,
                                           const Mat<long>& canonical) {
    const std::size_t s = member_idx.size();
    std::vector<std::vector<int>> found;
    std::vector<int> perm;
    std::vector<bool> used(s, false);
    std::function<void()> rec = [&] {
        std::size_t pos = perm.size();
        if (pos == s) {
            found.push_back(perm);
            return;
        }
        for (std::size_t c = 0; c < s; ++c) {
            if (used[c]) continue;
            bool ok = true;
            for (std::size_t p = 0; p < pos && ok; ++p) {
                if (sys.cartan_entry(member_idx[perm[p]], member_idx[c]) != canonical(p, pos))
                    ok = false;
                if (ok && sys.cartan_entry(member_idx[c], member_idx[perm[p]]) != canonical(pos, p))
                    ok = false;
            }
            if (!ok) continue;
            used[c] = true;
            perm.push_back(int(c));
            rec();
            perm.pop_back();
            used[c] = false;
        }
    };
    rec();
    std::vector<std::vector<int>> orders;
    for (const auto& p : found) {
        std::vector<int> nodes;
        for (int c : p) nodes.push_back(sys.nodes[member_idx[c]]);
        orders.push_back(std::move(nodes));
    }
    return orders;
}

// Position of a node in the final (replaced) label: the extended root sits at
// the dropped slot.
int node_position(int node, int drop) { return node == 0 ? drop : node; }

std::vector<Component> identify_components(const NodeSystem& sys, int drop_slot) {
    const std::size_t total = sys.nodes.size();
    // connected components via nonzero Cartan couplings
    std::vector<int> comp(total, -1);
    int ncomp = 0;
    for (std::size_t i = 0; i < total; ++i) {
        if (comp[i] >= 0) continue;
        std::vector<std::size_t> stack{i};
        comp[i] = ncomp;
        while (!stack.empty()) {
            std::size_t x = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < total; ++j)
                if (comp[j] < 0 && sys.cartan_entry(x, j) != 0) {
                    comp[j] = ncomp;
                    stack.push_back(j);
                }
        }
        ++ncomp;
    }
    std::vector<Component> out;
    for (int c = 0; c < ncomp; ++c) {
        std::vector<int> members;
        for (std::size_t i = 0; i < total; ++i)
            if (comp[i] == c) members.push_back(int(i));
        const int rank = int(members.size());
        Component best;
        bool matched = false;
        for (AlgebraClass cls : candidate_classes(rank)) {
            AlgebraId id;
            try {
                id = make_algebra(cls, rank);
            } catch (const parse_error&) {
                continue;
            }
            auto orders = match_orders(sys, members, defining_data(id).cartan);
            if (orders.empty()) continue;
            std::sort(orders.begin(), orders.end(),
                      [&](const std::vector<int>& a, const std::vector<int>& b) {
                          std::vector<int> pa, pb;
                          for (int n : a) pa.push_back(node_position(n, drop_slot));
                          for (int n : b) pb.push_back(node_position(n, drop_slot));
                          return pa < pb;
                      });
            best = Component{id, orders.front()};
            matched = true;
            break;
        }
        if (!matched) throw branching_error("dropped node leaves an unrecognizable diagram");
        out.push_back(std::move(best));
    }
    std::sort(out.begin(), out.end(), [&](const Component& a, const Component& b) {
        auto min_pos = [&](const Component& c) {
            int m = 1 << 20;
            for (int n : c.nodes) m = std::min(m, node_position(n, drop_slot));
            return m;
        };
        return min_pos(a) < min_pos(b);
    });
    return out;
}

// B2 and C2 share a diagram; flip the node order when a rule asks for the
// other orientation.
bool relabel_to(Component& c, AlgebraId want) {
    if (c.id == want) return true;
    bool b2c2 = (c.id.rank == 2 && want.rank == 2) &&
                ((c.id.cls == AlgebraClass::B && want.cls == AlgebraClass::C) ||
                 (c.id.cls == AlgebraClass::C && want.cls == AlgebraClass::B));
    if (!b2c2) return false;
    std::reverse(c.nodes.begin(), c.nodes.end());
    c.id = want;
    return true;
}

// ----- projection construction -----

// Columns of W: the lowest non-trivial orbit of the generating irrep.
std::vector<Label> generating_orbit(AlgebraId origin) {
    Irrep gen = generating_irrep(origin);
    return orbit_of(origin, gen.label)->elements;
}

RatMat columns_matrix(const std::vector<Label>& cols) {
    if (cols.empty()) throw branching_error("empty weight list");
    RatMat m(cols.front().size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < cols[j].size(); ++i) m(i, j) = Rat(cols[j][i]);
    return m;
}

RatMat columns_matrix_rat(const std::vector<std::vector<Rat>>& cols) {
    RatMat m(cols.front().size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < cols[j].size(); ++i) m(i, j) = cols[j][i];
    return m;
}

ProjectionMatrix solve_projection(AlgebraId origin, ProductAlgebra target, const RatMat& w,
                                  const RatMat& w_prime) {
    RatMat p = w_prime * w.right_inverse();
    if (!(p * w == w_prime))
        throw branching_error("projection solve is inconsistent with the weight pairing");
    return ProjectionMatrix{origin, std::move(target), std::move(p)};
}

int resolve_drop(AlgebraId origin, int drop) {
    int k = drop < 0 ? origin.rank + 1 + drop : drop;
    if (k < 1 || k > origin.rank) throw branching_error("drop index out of range");
    return k;
}

// ----- registry -----

struct PairKey {
    AlgebraId origin;
    ProductAlgebra target;
    auto operator<=>(const PairKey&) const = default;
};

Memo<PairKey, ProjectionMatrix> g_projections;

const char* builtin_rules();

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

Label parse_label_group(const std::string& text) {
    Label lab;
    std::string token;
    std::stringstream ss(text);
    while (std::getline(ss, token, ',')) lab.push_back(std::stol(trim(token)));
    return lab;
}

}  // namespace

Irrep generating_irrep(AlgebraId algebra) {
    const int n = algebra.rank;
    Label lab(n, 0);
    switch (algebra.cls) {
        case AlgebraClass::A:
        case AlgebraClass::C: lab[0] = 1; break;
        case AlgebraClass::B:
        case AlgebraClass::D: lab[n - 1] = 1; break;
        case AlgebraClass::E6: lab[0] = 1; break;
        case AlgebraClass::E7: lab[5] = 1; break;
        case AlgebraClass::E8: lab[6] = 1; break;
        case AlgebraClass::F4: lab[3] = 1; break;
        case AlgebraClass::G2: lab[0] = 1; break;
        case AlgebraClass::U1: throw branching_error("U1 has no generating irrep");
    }
    return Irrep{algebra, std::move(lab)};
}

ProjectionMatrix non_semisimple_projection(AlgebraId origin, int drop) {
    const DefiningData& dd = defining_data(origin);
    const int n = origin.rank;
    const int k = resolve_drop(origin, drop);

    NodeSystem sys;
    sys.origin = origin;
    for (int i = 1; i <= n; ++i) {
        if (i == k) continue;
        Label alpha(n);
        for (int j = 0; j < n; ++j) alpha[j] = dd.cartan(i - 1, j);
        sys.nodes.push_back(i);
        sys.roots.push_back(std::move(alpha));
    }
    std::vector<Component> comps = identify_components(sys, k);

    std::vector<Label> w_cols = generating_orbit(origin);
    // retained digits in component order, then the U1 charge: the coefficient
    // of the dropped simple root, scaled to the smallest integer convention
    std::vector<Rat> charges;
    charges.reserve(w_cols.size());
    for (const Label& w : w_cols) {
        Rat c(0);
        for (int j = 0; j < n; ++j) c += Rat(w[j]) * dd.cartan_inv(j, k - 1);
        charges.push_back(c);
    }
    Int norm = denominator_lcm(charges);
    std::vector<std::vector<Rat>> wp_cols;
    for (std::size_t idx = 0; idx < w_cols.size(); ++idx) {
        std::vector<Rat> col;
        for (const Component& c : comps)
            for (int node : c.nodes) col.emplace_back(w_cols[idx][node - 1]);
        col.push_back(charges[idx] * Rat(norm));
        wp_cols.push_back(std::move(col));
    }

    ProductAlgebra target;
    for (const Component& c : comps) target.factors.push_back(c.id);
    target.factors.push_back(AlgebraId{AlgebraClass::U1, 1});
    return solve_projection(origin, std::move(target), columns_matrix(w_cols),
                            columns_matrix_rat(wp_cols));
}

ProjectionMatrix semisimple_projection(AlgebraId origin, int drop) {
    const DefiningData& dd = defining_data(origin);
    const int n = origin.rank;
    const int k = resolve_drop(origin, drop);

    Label gamma = highest_root(origin);
    Label neg_gamma(n);
    for (int j = 0; j < n; ++j) neg_gamma[j] = -gamma[j];

    NodeSystem sys;
    sys.origin = origin;
    sys.nodes.push_back(0);
    sys.roots.push_back(neg_gamma);
    for (int i = 1; i <= n; ++i) {
        if (i == k) continue;
        Label alpha(n);
        for (int j = 0; j < n; ++j) alpha[j] = dd.cartan(i - 1, j);
        sys.nodes.push_back(i);
        sys.roots.push_back(std::move(alpha));
    }
    std::vector<Component> comps = identify_components(sys, k);
    int comp_rank = 0;
    for (const Component& c : comps) comp_rank += c.id.rank;
    if (comps.size() == 1 && comps.front().id == origin)
        throw branching_error(origin.name() +
                              " has no regular maximal semisimple subalgebra at this node");
    assert(comp_rank == n);

    // Extended weight scheme: the dropped digit is replaced by the Dynkin
    // coordinate with respect to the extended root -gamma.
    const long gamma_norm = scalar_num(dd, gamma, gamma);
    std::vector<Label> w_cols = generating_orbit(origin);
    std::vector<Label> extended;
    extended.reserve(w_cols.size());
    for (const Label& w : w_cols) {
        long num = -2 * scalar_num(dd, w, gamma);
        assert(num % gamma_norm == 0);
        Label e = w;
        e[k - 1] = num / gamma_norm;
        extended.push_back(std::move(e));
    }
    std::vector<std::vector<Rat>> wp_cols;
    for (const Label& e : extended) {
        std::vector<Rat> col;
        for (const Component& c : comps)
            for (int node : c.nodes) col.emplace_back(e[node_position(node, k) - 1]);
        wp_cols.push_back(std::move(col));
    }

    ProductAlgebra target;
    for (const Component& c : comps) target.factors.push_back(c.id);
    return solve_projection(origin, std::move(target), columns_matrix(w_cols),
                            columns_matrix_rat(wp_cols));
}

ProjectionMatrix special_projection(AlgebraId origin, const std::vector<ProductIrrep>& targets) {
    if (targets.empty()) throw branching_error("special embedding needs target irreps");
    const ProductAlgebra target = targets.front().algebra;
    if (target.u1_count() != 0)
        throw branching_error("special embeddings carry no U1 factors");
    for (const ProductIrrep& t : targets)
        if (!(t.algebra == target))
            throw branching_error("special targets must share one product algebra");

    Irrep gen = generating_irrep(origin);
    Int lhs_dim = dim(gen);
    Int rhs_dim = 0;
    for (const ProductIrrep& t : targets) rhs_dim += dim(t);
    if (lhs_dim != rhs_dim)
        throw branching_error("special target dimensions do not sum to the generating irrep");

    // All weights on both sides, in descending lexicographic order, paired
    // positionally.
    std::vector<Label> lhs;
    for (const auto& [w, m] : weight_system_with_mul(gen)) {
        unsigned long copies = m.get_ui();
        for (unsigned long c = 0; c < copies; ++c) lhs.push_back(w);
    }
    std::sort(lhs.begin(), lhs.end(), std::greater<>());

    std::vector<Label> rhs;
    for (const ProductIrrep& t : targets) {
        std::vector<std::vector<std::pair<Label, Int>>> factor_weights;
        std::size_t li = 0;
        for (const AlgebraId& f : target.factors)
            factor_weights.push_back(weight_system_with_mul(Irrep{f, t.labels[li++]}));
        std::vector<Label> tuple(factor_weights.size());
        std::function<void(std::size_t, Int)> expand = [&](std::size_t pos, Int mult) {
            if (pos == factor_weights.size()) {
                Label concat;
                for (const Label& part : tuple)
                    concat.insert(concat.end(), part.begin(), part.end());
                unsigned long copies = mult.get_ui();
                for (unsigned long c = 0; c < copies; ++c) rhs.push_back(concat);
                return;
            }
            for (const auto& [w, m] : factor_weights[pos]) {
                tuple[pos] = w;
                expand(pos + 1, mult * m);
            }
        };
        expand(0, Int(1));
    }
    std::sort(rhs.begin(), rhs.end(), std::greater<>());
    assert(lhs.size() == rhs.size());

    return solve_projection(origin, target, columns_matrix(lhs), columns_matrix(rhs));
}

// ----- registry -----

EmbeddingRule parse_rule_line(const std::string& line) {
    std::size_t arrow = line.find("->");
    std::size_t colon = line.find(':', arrow == std::string::npos ? 0 : arrow);
    if (arrow == std::string::npos || colon == std::string::npos)
        throw branching_error("malformed rule line: " + line);
    EmbeddingRule rule;
    rule.origin = parse_simple_algebra(trim(line.substr(0, arrow)));
    rule.target = parse_algebra(trim(line.substr(arrow + 2, colon - arrow - 2)));
    std::string body = trim(line.substr(colon + 1));
    auto drop_of = [&](const std::string& s) {
        std::size_t eq = s.find("drop=");
        std::size_t close = s.find(')', eq);
        if (eq == std::string::npos || close == std::string::npos)
            throw branching_error("malformed drop in rule: " + line);
        return std::stoi(s.substr(eq + 5, close - eq - 5));
    };
    if (body.rfind("nonsemisimple", 0) == 0) {
        rule.kind = NonSemiSimpleRule{drop_of(body)};
    } else if (body.rfind("semisimple", 0) == 0) {
        rule.kind = SemiSimpleRule{drop_of(body)};
    } else if (body.rfind("special", 0) == 0) {
        std::size_t open = body.find('(');
        std::size_t close = body.rfind(')');
        if (open == std::string::npos || close == std::string::npos || close <= open)
            throw branching_error("malformed special rule: " + line);
        std::string inner = body.substr(open + 1, close - open - 1);
        SpecialRule sr;
        std::string item;
        std::stringstream ss(inner);
        while (std::getline(ss, item, ';')) {
            item = trim(item);
            std::vector<Label> labels;
            std::size_t pos = 0;
            while (pos < item.size()) {
                std::size_t lp = item.find('(', pos);
                if (lp == std::string::npos) break;
                std::size_t rp = item.find(')', lp);
                labels.push_back(parse_label_group(item.substr(lp + 1, rp - lp - 1)));
                pos = rp + 1;
            }
            sr.targets.push_back(product_irrep(rule.target, std::move(labels)));
        }
        rule.kind = std::move(sr);
    } else {
        throw branching_error("unknown rule kind in: " + line);
    }
    return rule;
}

BranchingRegistry::BranchingRegistry() {
    load_text(builtin_rules());
}

BranchingRegistry& BranchingRegistry::instance() {
    static BranchingRegistry reg;
    return reg;
}

void BranchingRegistry::load_text(const std::string& text) {
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        EmbeddingRule rule = parse_rule_line(line);
        // newest rule wins
        std::erase_if(rules_, [&](const EmbeddingRule& r) {
            return r.origin == rule.origin && r.target == rule.target;
        });
        rules_.push_back(std::move(rule));
    }
}

void BranchingRegistry::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw branching_error("cannot open registry file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    load_text(ss.str());
}

std::vector<ProductAlgebra> BranchingRegistry::known_targets(AlgebraId origin) const {
    std::vector<ProductAlgebra> out;
    for (const EmbeddingRule& r : rules_)
        if (r.origin == origin) out.push_back(r.target);
    return out;
}

ProjectionMatrix BranchingRegistry::lookup(AlgebraId origin, const ProductAlgebra& target) {
    auto cached = g_projections.get_or_compute(PairKey{origin, target}, [&] {
        for (const EmbeddingRule& r : rules_) {
            if (!(r.origin == origin && r.target == target)) continue;
            if (auto* ns = std::get_if<NonSemiSimpleRule>(&r.kind))
                return non_semisimple_projection(origin, ns->drop);
            if (auto* s = std::get_if<SemiSimpleRule>(&r.kind))
                return semisimple_projection(origin, s->drop);
            return special_projection(origin, std::get<SpecialRule>(r.kind).targets);
        }
        // parametric fallback: search single-node drops
        std::vector<AlgebraId> simple;
        for (const AlgebraId& f : target.factors)
            if (!f.is_u1()) simple.push_back(f);
        bool u1_last = target.u1_count() == 1 && target.factors.back().is_u1() &&
                       int(simple.size()) + 1 == int(target.factors.size());
        if (u1_last) {
            for (int k = 1; k <= origin.rank; ++k) {
                try {
                    ProjectionMatrix p = non_semisimple_projection(origin, k);
                    if (p.target == target) return p;
                } catch (const branching_error&) {
                }
            }
        } else if (target.u1_count() == 0) {
            for (int k = 1; k <= origin.rank; ++k) {
                try {
                    ProjectionMatrix p = semisimple_projection(origin, k);
                    if (p.target == target) return p;
                } catch (const branching_error&) {
                }
            }
        }
        throw branching_error("no known embedding " + origin.traditional_name() + " -> " +
                              target.name());
    });
    return *cached;
}

ProjectionMatrix registry_lookup(AlgebraId origin, const ProductAlgebra& target) {
    return BranchingRegistry::instance().lookup(origin, target);
}

// ----- decomposition through a projection -----

namespace {

struct ProductWeight {
    std::vector<Label> parts;
    std::vector<Rat> charges;
    auto operator<=>(const ProductWeight&) const = default;
};

Rat product_height(const ProductAlgebra& target, const ProductWeight& w) {
    Rat h(0);
    std::size_t li = 0;
    for (const AlgebraId& f : target.factors)
        if (!f.is_u1()) h += height_of(defining_data(f), w.parts[li++]);
    return h;
}

}  // namespace

IrrepSum decompose_irrep(const Irrep& r, const ProjectionMatrix& projection) {
    if (!(projection.origin == r.algebra))
        throw branching_error("projection matrix does not match the irrep's algebra");
    const ProductAlgebra& target = projection.target;

    std::map<ProductWeight, Int> tally;
    for (const auto& [w, m] : weight_system_with_mul(r)) {
        std::vector<Rat> col(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) col[i] = Rat(w[i]);
        std::vector<Rat> proj = projection.matrix.apply(col);
        ProductWeight pw;
        std::size_t row = 0;
        bool dominant = true;
        for (const AlgebraId& f : target.factors) {
            if (f.is_u1()) {
                pw.charges.push_back(proj[row++]);
                continue;
            }
            Label part(f.rank);
            for (int j = 0; j < f.rank; ++j) {
                const Rat& v = proj[row++];
                if (!is_integer(v))
                    throw branching_error("projected weight is not integral");
                part[j] = v.get_num().get_si();
                if (part[j] < 0) dominant = false;
            }
            pw.parts.push_back(std::move(part));
        }
        if (dominant) tally[pw] += m;
    }

    // product-algebra analog of the dominant-weight sieve
    IrrepSum sum;
    sum.algebra = target;
    while (!tally.empty()) {
        auto head = tally.begin();
        Rat best = product_height(target, head->first);
        for (auto it = std::next(tally.begin()); it != tally.end(); ++it) {
            Rat h = product_height(target, it->first);
            if (h > best || (h == best && it->first > head->first)) {
                best = h;
                head = it;
            }
        }
        ProductWeight top = head->first;
        Int mult = head->second;
        if (mult <= 0) throw branching_error("branching sieve: negative residue");
        sum.terms.emplace_back(product_irrep(target, top.parts, top.charges), mult);

        // subtract the product dominant weight system (charges ride along)
        std::vector<std::shared_ptr<const WeightTable>> tables;
        std::size_t li = 0;
        for (const AlgebraId& f : target.factors)
            if (!f.is_u1()) tables.push_back(dominant_weight_system(Irrep{f, top.parts[li++]}));
        std::vector<std::pair<Label, Int>> current(tables.size());
        std::function<void(std::size_t, Int)> subtract = [&](std::size_t pos, Int m) {
            if (pos == tables.size()) {
                ProductWeight pw;
                for (const auto& [lab, unused] : current) pw.parts.push_back(lab);
                pw.charges = top.charges;
                auto it = tally.find(pw);
                if (it == tally.end())
                    throw branching_error("branching sieve: inconsistent table");
                it->second -= mult * m;
                if (it->second == 0)
                    tally.erase(it);
                else if (it->second < 0)
                    throw branching_error("branching sieve: negative residue");
                return;
            }
            for (const auto& entry : *tables[pos]) {
                current[pos] = entry;
                subtract(pos + 1, m * entry.second);
            }
        };
        subtract(0, Int(1));
    }
    sort_for_display(sum);
    return sum;
}

IrrepSum decompose_irrep(const Irrep& r, const ProductAlgebra& target) {
    return decompose_irrep(r, registry_lookup(r.algebra, target));
}

IrrepSum decompose_irrep_at(const ProductIrrep& p, const ProductAlgebra& target, int pos) {
    if (pos < 1 || pos > int(p.algebra.factors.size()))
        throw branching_error("position out of range");
    const AlgebraId factor = p.algebra.factors[pos - 1];
    if (factor.is_u1()) throw branching_error("cannot branch a U1 factor");

    // index of the simple factor within labels
    int simple_idx = 0;
    for (int i = 0; i + 1 < pos; ++i)
        if (!p.algebra.factors[i].is_u1()) ++simple_idx;

    IrrepSum inner = decompose_irrep(Irrep{factor, p.labels[simple_idx]}, target);

    ProductAlgebra combined;
    for (int i = 0; i + 1 < pos; ++i) combined.factors.push_back(p.algebra.factors[i]);
    for (const AlgebraId& f : target.factors) combined.factors.push_back(f);
    for (std::size_t i = pos; i < p.algebra.factors.size(); ++i)
        combined.factors.push_back(p.algebra.factors[i]);

    // charge indices before/after the spliced factor
    int charges_before = 0;
    for (int i = 0; i + 1 < pos; ++i)
        if (p.algebra.factors[i].is_u1()) ++charges_before;

    IrrepSum out;
    out.algebra = combined;
    for (const auto& [term, mult] : inner.terms) {
        std::vector<Label> labels;
        std::vector<Rat> charges;
        labels.insert(labels.end(), p.labels.begin(), p.labels.begin() + simple_idx);
        charges.insert(charges.end(), p.charges.begin(), p.charges.begin() + charges_before);
        labels.insert(labels.end(), term.labels.begin(), term.labels.end());
        charges.insert(charges.end(), term.charges.begin(), term.charges.end());
        labels.insert(labels.end(), p.labels.begin() + simple_idx + 1, p.labels.end());
        charges.insert(charges.end(), p.charges.begin() + charges_before, p.charges.end());
        out.terms.emplace_back(product_irrep(combined, std::move(labels), std::move(charges)),
                               mult);
    }
    sort_for_display(out);
    return out;
}

namespace {

const char* builtin_rules() {
    return R"RULES(
# Regular non-semisimple embeddings: one dot dropped from the Dynkin diagram,
# which becomes the U1 charge. SU(n) -> SU(n-k) x SU(k) x U1 and the other
# single-U1 chains are resolved parametrically; entries here pin conventions.
D5 -> A4*U1 : nonsemisimple(drop=4)

# Regular semisimple embeddings: one dot dropped from the extended diagram.
B3 -> A3 : semisimple(drop=3)
B3 -> A1*A1*A1 : semisimple(drop=2)
E6 -> A2*A2*A2 : semisimple(drop=3)
E7 -> A7 : semisimple(drop=7)
E7 -> D6*A1 : semisimple(drop=5)
E7 -> A5*A2 : semisimple(drop=4)
E8 -> D8 : semisimple(drop=1)
E8 -> A8 : semisimple(drop=8)
E8 -> E7*A1 : semisimple(drop=7)
E8 -> E6*A2 : semisimple(drop=6)
E8 -> A4*A4 : semisimple(drop=4)
D7 -> A1*A1*D5 : semisimple(drop=2)
D9 -> D4*D5 : semisimple(drop=4)
D11 -> D6*D5 : semisimple(drop=6)
D13 -> D8*D5 : semisimple(drop=8)

# Special embeddings: declared branching of the generating irrep.
B3 -> G2 : special((0,0) ; (1,0))
D4 -> B3 : special((0,0,0) ; (1,0,0))
)RULES";
}

}  // namespace

}  // namespace liereps
