#include "liereps/irrep_props.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>

#include "liereps/cache.hpp"

namespace liereps {

namespace {

Memo<Irrep, DimName> g_names;

// dim as a product over positive roots of <a, L+d>/<a, d>; the metric
// denominator cancels between numerator and denominator factors.
Int dim_label(AlgebraId algebra, const Label& label) {
    const DefiningData& dd = defining_data(algebra);
    const auto& pos = positive_roots(algebra);
    const Label delta = delta_label(algebra);
    Label top(label.size());
    for (std::size_t i = 0; i < label.size(); ++i) top[i] = label[i] + delta[i];
    Int num = 1, den = 1;
    for (const Label& a : pos) {
        num *= scalar_num(dd, a, top);
        den *= scalar_num(dd, a, delta);
    }
    Int q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

long mod_reduce(long v, long m) {
    long r = v % m;
    return r < 0 ? r + m : r;
}

// Letter for a D4 congruency vector: (0,2) -> v, (1,2) -> c, (1,0) -> s.
std::optional<char> so8_letter(const CongruencyClass& c) {
    if (c.values[0] == 0 && c.values[1] == 2) return 'v';
    if (c.values[0] == 1 && c.values[1] == 2) return 'c';
    if (c.values[0] == 1 && c.values[1] == 0) return 's';
    return std::nullopt;
}

bool is_zero_vector(const CongruencyClass& c) {
    return c.values[0] == 0 && c.values[1] == 0;
}

// Subtract the same integer from every Dynkin digit (clamped at zero) until
// the congruency vector becomes non-zero; relates e.g. the 35's to the 8's.
Irrep reduced_label(const Irrep& r) {
    Irrep cur = r;
    while (true) {
        bool all_zero = true;
        for (long v : cur.label)
            if (v) all_zero = false;
        if (all_zero) return cur;
        if (!is_zero_vector(congruency_class(cur))) return cur;
        for (long& v : cur.label)
            if (v > 0) --v;
    }
}

std::string so8_subscript(const Irrep& r, const std::vector<Irrep>& group) {
    if (group.size() <= 1) return {};
    CongruencyClass mine = congruency_class(r);
    if (is_zero_vector(mine)) {
        Irrep red = reduced_label(r);
        if (auto l = so8_letter(congruency_class(red))) return std::string(1, *l);
        return {};
    }
    int same = 0;
    for (const Irrep& o : group)
        if (congruency_class(o) == mine) ++same;
    if (same == 1) {
        if (auto l = so8_letter(mine)) return std::string(1, *l);
        return {};
    }
    // Mixed subscript from the nodes with non-zero digits (1 = v, 3 = c,
    // 4 = s), ordered by the Dynkin digit beginning with the largest.
    std::vector<std::pair<long, char>> parts;
    if (r.label[0]) parts.emplace_back(r.label[0], 'v');
    if (r.label[2]) parts.emplace_back(r.label[2], 'c');
    if (r.label[3]) parts.emplace_back(r.label[3], 's');
    std::stable_sort(parts.begin(), parts.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    std::string out;
    for (const auto& [digit, ch] : parts) out += ch;
    return out;
}

}  // namespace

Int dim(const Irrep& r) {
    return dim_label(r.algebra, r.label);
}

Int algebra_order(AlgebraId algebra) {
    auto rs = root_system(algebra);
    return Int(static_cast<unsigned long>(rs->roots.size()));
}

Rat index_raw(const Irrep& r) {
    const DefiningData& dd = defining_data(r.algebra);
    const int n = r.algebra.rank;
    Label two_delta_plus(n);
    for (int i = 0; i < n; ++i) two_delta_plus[i] = r.label[i] + 2;
    Rat casimir = rat(scalar_num(dd, r.label, two_delta_plus), dd.metric_den);
    Rat l = Rat(dim(r)) * casimir / Rat(algebra_order(r.algebra));
    l.canonicalize();
    return l;
}

long index_table_factor(AlgebraId algebra) {
    switch (algebra.cls) {
        case AlgebraClass::A:
        case AlgebraClass::C: return 1;
        case AlgebraClass::B:
        case AlgebraClass::D:
        case AlgebraClass::G2: return 2;
        case AlgebraClass::E6:
        case AlgebraClass::F4: return 6;
        case AlgebraClass::E7: return 12;
        case AlgebraClass::E8: return 60;
        case AlgebraClass::U1: return 1;
    }
    return 1;
}

Rat index_normalized(const Irrep& r) {
    Rat v = index_raw(r) / index_table_factor(r.algebra);
    v.canonicalize();
    return v;
}

CongruencyClass congruency_class(const Irrep& r) {
    const int n = r.algebra.rank;
    const Label& a = r.label;
    CongruencyClass c;
    switch (r.algebra.cls) {
        case AlgebraClass::A: {
            long s = 0;
            for (int k = 1; k <= n; ++k) s += k * a[k - 1];
            c.values = {mod_reduce(s, n + 1)};
            c.moduli = {n + 1};
            break;
        }
        case AlgebraClass::B:
            c.values = {mod_reduce(a[n - 1], 2)};
            c.moduli = {2};
            break;
        case AlgebraClass::C: {
            long s = 0;
            for (int k = 1; k <= n; k += 2) s += a[k - 1];
            c.values = {mod_reduce(s, 2)};
            c.moduli = {2};
            break;
        }
        case AlgebraClass::D: {
            long c1 = mod_reduce(a[n - 2] + a[n - 1], 2);
            long c2 = 0;
            // 2(a1 + a3 + ...) over the chain nodes, up to n-2 for odd n and
            // n-3 for even n, plus (n-2) a_{n-1} + n a_n.
            int last_chain = (n % 2) ? n - 2 : n - 3;
            for (int k = 1; k <= last_chain; k += 2) c2 += 2 * a[k - 1];
            c2 += (n - 2) * a[n - 2] + long(n) * a[n - 1];
            c.values = {c1, mod_reduce(c2, 4)};
            c.moduli = {2, 4};
            break;
        }
        case AlgebraClass::E6:
            c.values = {mod_reduce(a[0] - a[1] + a[3] - a[4], 3)};
            c.moduli = {3};
            break;
        case AlgebraClass::E7:
            c.values = {mod_reduce(a[3] + a[5] + a[6], 2)};
            c.moduli = {2};
            break;
        default:
            c.values = {0};
            c.moduli = {1};
            break;
    }
    return c;
}

std::string CongruencyClass::str() const {
    if (values.size() == 1) return std::to_string(values[0]);
    std::string out = "(";
    for (long v : values) out += std::to_string(v);
    return out + ")";
}

Irrep conjugate(const Irrep& r) {
    Label lab = r.label;
    const int n = r.algebra.rank;
    switch (r.algebra.cls) {
        case AlgebraClass::A:
            std::reverse(lab.begin(), lab.end());
            break;
        case AlgebraClass::D:
            if (n % 2) std::swap(lab[n - 2], lab[n - 1]);
            break;
        case AlgebraClass::E6:
            std::swap(lab[0], lab[4]);
            std::swap(lab[1], lab[3]);
            break;
        default:
            break;
    }
    return Irrep{r.algebra, std::move(lab)};
}

std::vector<Irrep> irreps_by_dim(AlgebraId algebra, const Int& target, int max_digit) {
    // The dimension is strictly increasing in every Dynkin digit, so a label
    // whose zero-completion already exceeds the target cannot be extended.
    std::vector<Irrep> out;
    const int n = algebra.rank;
    Label label(n, 0);
    std::function<void(int)> scan = [&](int pos) {
        Int d = dim_label(algebra, label);
        if (d > target) return;
        if (pos == n) {
            if (d == target) out.push_back(Irrep{algebra, label});
            return;
        }
        for (long v = 0; v <= max_digit; ++v) {
            label[pos] = v;
            if (v > 0 && dim_label(algebra, label) > target) break;
            scan(pos + 1);
        }
        label[pos] = 0;
    };
    scan(0);
    return out;
}

int name_digit_offset(AlgebraId algebra) {
    switch (algebra.cls) {
        case AlgebraClass::A:
        case AlgebraClass::B:
        case AlgebraClass::C:
        case AlgebraClass::D: return algebra.rank <= 4 ? 1 : 0;
        case AlgebraClass::E6:
        case AlgebraClass::F4: return 1;
        case AlgebraClass::E7:
        case AlgebraClass::E8: return 0;
        case AlgebraClass::G2: return 3;
        case AlgebraClass::U1: return 0;
    }
    return 0;
}

namespace {

DimName dim_name_uncached(const Irrep& r) {
    DimName name;
    name.dim = dim(r);

    long own_max = 0;
    for (long v : r.label) own_max = std::max(own_max, v);
    int cap = int(own_max) + name_digit_offset(r.algebra);

    std::vector<Irrep> same_dim = irreps_by_dim(r.algebra, name.dim, cap);

    // Group by index; ascending index order determines the primes.
    std::map<Rat, std::vector<Irrep>> by_index;
    for (const Irrep& i : same_dim) by_index[index_raw(i)].push_back(i);

    int primes = 0;
    for (auto& [idx, group] : by_index) {
        bool contains = std::find(group.begin(), group.end(), r) != group.end();
        if (!contains) {
            ++primes;
            continue;
        }
        name.n_primes = primes;
        if (r.algebra.cls == AlgebraClass::D && r.algebra.rank == 4) {
            name.subscript = so8_subscript(r, group);
            return name;
        }
        // Within a group: lower congruency class unbarred; equal congruency
        // broken by the Dynkin label read as a number, the smaller barred.
        std::sort(group.begin(), group.end(), [](const Irrep& a, const Irrep& b) {
            CongruencyClass ca = congruency_class(a), cb = congruency_class(b);
            if (ca != cb) return ca < cb;
            return a.label > b.label;
        });
        auto it = std::find(group.begin(), group.end(), r);
        name.barred = (it - group.begin()) % 2 == 1;
        return name;
    }
    // r itself is always in its own scan; not reached.
    throw std::logic_error("dim_name: irrep missing from its own dimension scan");
}

}  // namespace

DimName dim_name(const Irrep& r) {
    return *g_names.get_or_compute(r, [&] { return dim_name_uncached(r); });
}

Irrep irrep_by_name(AlgebraId algebra, const DimName& name, int max_digit) {
    for (const Irrep& cand : irreps_by_dim(algebra, name.dim, max_digit))
        if (dim_name(cand) == name) return cand;
    std::string printed = to_string(name.dim) + std::string(name.n_primes, '\'');
    if (name.barred) printed = "bar(" + printed + ")";
    if (!name.subscript.empty()) printed += "_" + name.subscript;
    throw name_error("Either an irrep with the dimensional name " + printed +
                     " does not exist in " + algebra.traditional_name() +
                     " or it has at least one Dynkin digit higher than " +
                     std::to_string(max_digit) + ". Try a higher max Dynkin digit than " +
                     std::to_string(max_digit) + ".");
}

std::vector<long> young_shape(const Irrep& r) {
    if (r.algebra.cls != AlgebraClass::A)
        throw std::invalid_argument("Young tableaux are defined for SU(N) irreps");
    std::vector<long> rows;
    long acc = 0;
    for (auto it = r.label.rbegin(); it != r.label.rend(); ++it) {
        // building from the bottom row up
        acc += *it;
        rows.push_back(acc);
    }
    std::reverse(rows.begin(), rows.end());
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    return rows;
}

std::vector<Irrep> basic_irreps(AlgebraId algebra) {
    std::vector<Irrep> out;
    for (int i = 0; i < algebra.rank; ++i) {
        Label lab(algebra.rank, 0);
        lab[i] = 1;
        out.push_back(Irrep{algebra, std::move(lab)});
    }
    return out;
}

}  // namespace liereps
