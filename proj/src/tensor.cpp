#include "liereps/tensor.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <stdexcept>
#include <tuple>

namespace liereps {

namespace {

void check_same_algebra(const Irrep& a, const Irrep& b) {
    if (!(a.algebra == b.algebra))
        throw std::invalid_argument("tensor product factors must share the algebra");
}

// ----- generic dominant-weight sieve -----

std::map<Label, Int> sieve(AlgebraId algebra, std::map<Label, Int> tally) {
    const DefiningData& dd = defining_data(algebra);
    std::map<Label, Int> result;
    while (!tally.empty()) {
        auto head = tally.begin();
        long best = height_num_of(dd, head->first);
        for (auto it = std::next(tally.begin()); it != tally.end(); ++it) {
            long h = height_num_of(dd, it->first);
            if (h > best || (h == best && it->first > head->first)) {
                best = h;
                head = it;
            }
        }
        Label top = head->first;
        Int mult = head->second;
        if (mult <= 0) throw std::runtime_error("tensor sieve: negative residue");
        result[top] += mult;
        auto dws = dominant_weight_system(Irrep{algebra, top});
        for (const auto& [w, m] : *dws) {
            auto it = tally.find(w);
            if (it == tally.end()) throw std::runtime_error("tensor sieve: inconsistent table");
            it->second -= mult * m;
            if (it->second == 0)
                tally.erase(it);
            else if (it->second < 0)
                throw std::runtime_error("tensor sieve: negative residue");
        }
    }
    return result;
}

// ----- SU(N) tensor products via Young tableau bumping -----

std::vector<long> shape_of(const Label& label, int nrows) {
    std::vector<long> rows(nrows, 0);
    long acc = 0;
    for (int i = int(label.size()) - 1; i >= 0; --i) {
        acc += label[i];
        rows[i] = acc;
    }
    return rows;
}

long box_count(const std::vector<long>& shape) {
    long n = 0;
    for (long r : shape) n += r;
    return n;
}

// Bumps the boxes of the right tableau row by row into the left one.
// Each letter (= right-tableau row) is placed as a horizontal strip; the
// running letter sequence must stay admissible: the number of letters l in
// rows 1..r may never exceed the number of letters l-1 in rows 1..r-1.
class Bumper {
  public:
    Bumper(std::vector<long> left, std::vector<long> right, int rank)
        : shape_(std::move(left)), right_(std::move(right)), rank_(rank), nrows_(rank + 1) {
        while (!right_.empty() && right_.back() == 0) right_.pop_back();
        prev_cum_.assign(nrows_, 0);
        cur_cum_.assign(nrows_, 0);
    }

    std::map<Label, Int> run() {
        place_letter(0);
        return std::move(out_);
    }

  private:
    void emit() {
        Label lab(rank_);
        for (int i = 0; i < rank_; ++i) lab[i] = shape_[i] - shape_[i + 1];
        out_[lab] += 1;
    }

    void place_letter(std::size_t letter) {
        if (letter == right_.size()) {
            emit();
            return;
        }
        std::vector<long> saved_before = std::move(before_);
        before_ = shape_;
        place_rows(letter, 0, right_[letter]);
        before_ = std::move(saved_before);
    }

    void place_rows(std::size_t letter, int row, long remaining) {
        if (row == nrows_) {
            if (remaining == 0) {
                std::vector<long> saved = prev_cum_;
                prev_cum_ = cur_cum_;
                place_letter(letter + 1);
                prev_cum_ = std::move(saved);
            }
            return;
        }
        long cap = remaining;
        if (row > 0) cap = std::min(cap, before_[row - 1] - shape_[row]);
        if (cap < 0) cap = 0;
        long above = row > 0 ? cur_cum_[row - 1] : 0;
        for (long k = 0; k <= cap; ++k) {
            if (k > 0 && letter > 0) {
                long ballot_bound = row > 0 ? prev_cum_[row - 1] : 0;
                if (above + k > ballot_bound) break;
            }
            shape_[row] += k;
            cur_cum_[row] = above + k;
            place_rows(letter, row + 1, remaining - k);
            shape_[row] -= k;
        }
        cur_cum_[row] = above;
    }

    std::vector<long> shape_, right_, before_;
    std::vector<long> prev_cum_, cur_cum_;
    int rank_, nrows_;
    std::map<Label, Int> out_;
};

// Display key for a product irrep: ascending factor dimensions and indices,
// unbarred before barred, fewer primes first, then descending charges and
// descending Dynkin labels.
using DisplayKey = std::tuple<std::vector<Int>, std::vector<Rat>, std::vector<int>,
                              std::vector<int>, std::vector<std::string>, std::vector<Rat>,
                              std::vector<Label>>;

DisplayKey display_key(const ProductIrrep& p) {
    std::vector<Int> dims;
    std::vector<Rat> indices;
    std::vector<int> barred, primes;
    std::vector<std::string> subs;
    std::vector<Rat> neg_charges;
    std::vector<Label> neg_labels;
    std::size_t li = 0;
    for (const AlgebraId& f : p.algebra.factors) {
        if (f.is_u1()) continue;
        Irrep r{f, p.labels[li++]};
        dims.push_back(dim(r));
        indices.push_back(index_raw(r));
        DimName n = dim_name(r);
        barred.push_back(n.barred ? 1 : 0);
        primes.push_back(n.n_primes);
        subs.push_back(n.subscript);
        Label neg;
        for (long c : r.label) neg.push_back(-c);
        neg_labels.push_back(std::move(neg));
    }
    for (const Rat& q : p.charges) neg_charges.push_back(-q);
    return {std::move(dims),   std::move(indices),     std::move(barred), std::move(primes),
            std::move(subs),   std::move(neg_charges), std::move(neg_labels)};
}

}  // namespace

std::map<Label, Int> decompose_product_young(const Irrep& a, const Irrep& b) {
    check_same_algebra(a, b);
    if (a.algebra.cls != AlgebraClass::A)
        throw std::invalid_argument("Young tableau decomposition applies to SU(N)");
    const int n = a.algebra.rank;
    std::vector<long> sa = shape_of(a.label, n + 1);
    std::vector<long> sb = shape_of(b.label, n + 1);
    if (box_count(sa) < box_count(sb)) std::swap(sa, sb);
    while (!sa.empty() && sa.back() == 0) sa.pop_back();
    sa.resize(n + 1, 0);
    return Bumper(std::move(sa), std::move(sb), n).run();
}

std::map<Label, Int> decompose_product_generic(const Irrep& a, const Irrep& b) {
    check_same_algebra(a, b);
    auto wa = weight_system_with_mul(a);
    auto wb = weight_system_with_mul(b);
    std::map<Label, Int> tally;
    const std::size_t rank = a.label.size();
    Label sum(rank);
    for (const auto& [x, mx] : wa)
        for (const auto& [y, my] : wb) {
            bool dominant = true;
            for (std::size_t i = 0; i < rank; ++i) {
                sum[i] = x[i] + y[i];
                if (sum[i] < 0) dominant = false;
            }
            if (dominant) tally[sum] += mx * my;
        }
    return sieve(a.algebra, std::move(tally));
}

WeightTable dominant_weights_and_mul(AlgebraId algebra, const std::vector<Label>& weights) {
    const DefiningData& dd = defining_data(algebra);
    std::map<Label, Int> tally;
    for (const Label& w : weights)
        if (is_dominant_label(w)) tally[w] += 1;
    WeightTable out(tally.begin(), tally.end());
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
        long ha = height_num_of(dd, a.first), hb = height_num_of(dd, b.first);
        if (ha != hb) return ha > hb;
        return a.first > b.first;
    });
    return out;
}

Label sort_out_irrep(AlgebraId algebra, WeightTable& table) {
    if (table.empty()) throw std::invalid_argument("sort_out_irrep: empty table");
    Label top = table.front().first;
    Int mult = table.front().second;
    if (mult <= 0) throw std::invalid_argument("sort_out_irrep: head multiplicity not positive");
    auto dws = dominant_weight_system(Irrep{algebra, top});
    for (const auto& [w, m] : *dws) {
        auto it = std::find_if(table.begin(), table.end(),
                               [&](const auto& e) { return e.first == w; });
        if (it == table.end() || it->second < m)
            throw std::runtime_error("sort_out_irrep: negative residue");
        it->second -= m;
    }
    std::erase_if(table, [](const auto& e) { return e.second == 0; });
    return top;
}

ProductIrrep product_irrep(const ProductAlgebra& algebra, std::vector<Label> labels,
                           std::vector<Rat> charges) {
    ProductIrrep p;
    p.algebra = algebra;
    p.labels = std::move(labels);
    p.charges = std::move(charges);
    if (int(p.labels.size()) != algebra.simple_count() ||
        int(p.charges.size()) != algebra.u1_count())
        throw std::invalid_argument("product irrep does not match its algebra");
    std::size_t li = 0;
    for (const AlgebraId& f : algebra.factors)
        if (!f.is_u1() && int(p.labels[li++].size()) != f.rank)
            throw std::invalid_argument("label length mismatch in product irrep");
    return p;
}

ProductIrrep as_product(const Irrep& r) {
    return product_irrep(ProductAlgebra{{r.algebra}}, {r.label});
}

Int dim(const ProductIrrep& r) {
    Int d = 1;
    std::size_t li = 0;
    for (const AlgebraId& f : r.algebra.factors)
        if (!f.is_u1()) d *= dim(Irrep{f, r.labels[li++]});
    return d;
}

Int IrrepSum::total_dim() const {
    Int d = 0;
    for (const auto& [rep, m] : terms) d += m * dim(rep);
    return d;
}

void sort_for_display(IrrepSum& sum) {
    std::vector<std::pair<DisplayKey, std::pair<ProductIrrep, Int>>> keyed;
    keyed.reserve(sum.terms.size());
    for (auto& term : sum.terms) keyed.emplace_back(display_key(term.first), std::move(term));
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    sum.terms.clear();
    for (auto& [k, term] : keyed) sum.terms.push_back(std::move(term));
}

IrrepSum decompose_product(const Irrep& a, const Irrep& b) {
    return decompose_product(std::vector<Irrep>{a, b});
}

IrrepSum decompose_product(const std::vector<Irrep>& irreps) {
    if (irreps.size() < 2)
        throw std::invalid_argument("tensor product needs at least two factors");
    for (const Irrep& r : irreps) check_same_algebra(irreps.front(), r);
    AlgebraId algebra = irreps[0].algebra;
    std::map<Label, Int> acc{{irreps[0].label, Int(1)}};
    for (std::size_t i = 1; i < irreps.size(); ++i) {
        std::map<Label, Int> next;
        for (const auto& [lab, mult] : acc) {
            Irrep left{algebra, lab};
            std::map<Label, Int> parts = (algebra.cls == AlgebraClass::A)
                                             ? decompose_product_young(left, irreps[i])
                                             : decompose_product_generic(left, irreps[i]);
            for (auto& [plab, pm] : parts) next[plab] += mult * pm;
        }
        acc = std::move(next);
    }
    IrrepSum sum;
    sum.algebra = ProductAlgebra{{algebra}};
    for (auto& [lab, m] : acc) sum.terms.emplace_back(product_irrep(sum.algebra, {lab}), m);
    sort_for_display(sum);
    return sum;
}

IrrepSum decompose_product_of_product_irreps(const ProductIrrep& a, const ProductIrrep& b) {
    if (!(a.algebra == b.algebra))
        throw std::invalid_argument("product irreps must share the product algebra");
    std::vector<std::vector<std::pair<Label, Int>>> factor_sums;
    std::size_t li = 0;
    for (const AlgebraId& f : a.algebra.factors) {
        if (f.is_u1()) continue;
        Irrep fa{f, a.labels[li]}, fb{f, b.labels[li]};
        ++li;
        std::map<Label, Int> parts = (f.cls == AlgebraClass::A)
                                         ? decompose_product_young(fa, fb)
                                         : decompose_product_generic(fa, fb);
        factor_sums.emplace_back(parts.begin(), parts.end());
    }
    std::vector<Rat> charges;
    for (std::size_t i = 0; i < a.charges.size(); ++i) {
        Rat q = a.charges[i] + b.charges[i];
        q.canonicalize();
        charges.push_back(q);
    }
    IrrepSum sum;
    sum.algebra = a.algebra;
    std::vector<Label> current(factor_sums.size());
    std::function<void(std::size_t, Int)> expand = [&](std::size_t pos, Int mult) {
        if (pos == factor_sums.size()) {
            sum.terms.emplace_back(product_irrep(a.algebra, current, charges), mult);
            return;
        }
        for (const auto& [lab, m] : factor_sums[pos]) {
            current[pos] = lab;
            expand(pos + 1, mult * m);
        }
    };
    expand(0, Int(1));
    sort_for_display(sum);
    return sum;
}

}  // namespace liereps
