#include "liereps/weights.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

#include "liereps/cache.hpp"

namespace liereps {

namespace {

Memo<std::pair<AlgebraId, std::vector<int>>, std::vector<std::pair<Label, long>>> g_xis;
Memo<Irrep, WeightTable> g_dominant_systems;

std::vector<int> t_set_of(const Label& w) {
    std::vector<int> t;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] == 0) t.push_back(int(i) + 1);
    return t;
}

// Decompose the full root system into orbits of <W_T, -1> and keep the unique
// representative of each orbit that is a positive root with non-negative
// coordinates at the positions in T.
std::vector<std::pair<Label, long>> build_xis(AlgebraId algebra, const std::vector<int>& t) {
    const DefiningData& dd = defining_data(algebra);
    auto rs = root_system(algebra);
    std::set<Label> remaining(rs->roots.begin(), rs->roots.begin() + rs->n_positive);
    for (int i = 0; i < rs->n_positive; ++i) {
        Label neg = rs->roots[i];
        for (long& v : neg) v = -v;
        remaining.insert(std::move(neg));
    }
    const auto& pos = positive_roots(algebra);
    std::set<Label> positive(pos.begin(), pos.end());

    std::vector<std::pair<Label, long>> xis;
    while (!remaining.empty()) {
        Label seed = *remaining.begin();
        std::set<Label> orb{seed};
        std::vector<Label> frontier{seed};
        while (!frontier.empty()) {
            std::vector<Label> next;
            for (const Label& x : frontier) {
                Label neg = x;
                for (long& v : neg) v = -v;
                if (orb.insert(neg).second) next.push_back(std::move(neg));
                for (int i : t) {
                    Label y = reflect_label(dd, x, i);
                    if (orb.insert(y).second) next.push_back(std::move(y));
                }
            }
            frontier = std::move(next);
        }
        const Label* rep = nullptr;
        for (const Label& x : orb) {
            if (!positive.count(x)) continue;
            bool t_dominant = true;
            for (int i : t)
                if (x[i - 1] < 0) {
                    t_dominant = false;
                    break;
                }
            if (t_dominant) {
                assert(rep == nullptr);
                rep = &x;
            }
        }
        assert(rep != nullptr);
        xis.emplace_back(*rep, long(orb.size()));
        for (const Label& x : orb) remaining.erase(x);
    }
    std::sort(xis.begin(), xis.end(), [&](const auto& a, const auto& b) {
        long ha = height_num_of(dd, a.first), hb = height_num_of(dd, b.first);
        if (ha != hb) return ha > hb;
        return a.first > b.first;
    });
    return xis;
}

// Modified Freudenthal recursion over the dominant weights, top-down by level.
WeightTable build_dominant_system(const Irrep& r) {
    const DefiningData& dd = defining_data(r.algebra);
    std::vector<Label> dws = single_dominant_weights(r);
    std::sort(dws.begin(), dws.end(), [&](const Label& a, const Label& b) {
        long ha = height_num_of(dd, a), hb = height_num_of(dd, b);
        if (ha != hb) return ha > hb;
        return a > b;
    });
    std::map<Label, Int> mult;
    const Label delta = delta_label(r.algebra);
    const int n = r.algebra.rank;
    Label lambda_delta(n);
    for (int i = 0; i < n; ++i) lambda_delta[i] = r.label[i] + delta[i];
    const long norm_top = scalar_num(dd, lambda_delta, lambda_delta);

    WeightTable table;
    for (const Label& w : dws) {
        if (w == r.label) {
            mult[w] = 1;
            table.emplace_back(w, Int(1));
            continue;
        }
        auto xis = g_xis.get_or_compute({r.algebra, t_set_of(w)}, [&] {
            return build_xis(r.algebra, t_set_of(w));
        });
        Int numerator = 0;
        for (const auto& [xi, osize] : *xis) {
            for (long k = 1;; ++k) {
                Label higher(n);
                for (int i = 0; i < n; ++i) higher[i] = w[i] + k * xi[i];
                Label dom = to_dominant_label(dd, higher);
                auto it = mult.find(dom);
                if (it == mult.end()) break;  // left the weight system
                Int term = it->second * scalar_num(dd, higher, xi);
                numerator += term * osize;
            }
        }
        Label w_delta(n);
        for (int i = 0; i < n; ++i) w_delta[i] = w[i] + delta[i];
        long den = norm_top - scalar_num(dd, w_delta, w_delta);
        assert(den > 0);
        Int m;
        mpz_divexact_ui(m.get_mpz_t(), numerator.get_mpz_t(), static_cast<unsigned long>(den));
        mult[w] = m;
        table.emplace_back(w, m);
    }
    return table;
}

}  // namespace

Irrep make_irrep(AlgebraId algebra, Label label) {
    if (algebra.is_u1()) throw std::invalid_argument("U1 factors carry charges, not labels");
    if (int(label.size()) != algebra.rank)
        throw std::invalid_argument("Dynkin label length must equal the rank");
    for (long v : label)
        if (v < 0) throw std::invalid_argument("Dynkin label entries must be non-negative");
    return Irrep{algebra, std::move(label)};
}

long weight_level_label(const DefiningData& dd, const Label& w, const Irrep& r) {
    long diff = height_num_of(dd, r.label) - height_num_of(dd, w);
    if (diff % dd.height_den != 0)
        throw std::invalid_argument("weight is not in the root lattice coset of the irrep");
    return diff / dd.height_den;
}

long weight_level(const Vec& w, const Irrep& r) {
    const DefiningData& dd = defining_data(r.algebra);
    return weight_level_label(dd, to_label(convert_basis(w, Basis::Omega)), r);
}

long irrep_height(const Irrep& r) {
    const DefiningData& dd = defining_data(r.algebra);
    long h = 2 * height_num_of(dd, r.label);
    assert(h % dd.height_den == 0);
    return h / dd.height_den;
}

std::vector<Label> single_dominant_weights(const Irrep& r) {
    const DefiningData& dd = defining_data(r.algebra);
    const auto& pos = positive_roots(r.algebra);
    std::set<Label> seen{r.label};
    std::vector<Label> frontier{r.label};
    while (!frontier.empty()) {
        std::vector<Label> next;
        for (const Label& w : frontier)
            for (const Label& a : pos) {
                Label v(w.size());
                bool dominant = true;
                for (std::size_t i = 0; i < w.size(); ++i) {
                    v[i] = w[i] - a[i];
                    if (v[i] < 0) dominant = false;
                }
                if (dominant && seen.insert(v).second) next.push_back(std::move(v));
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

StabilizerData stabilizer_data(AlgebraId algebra, const Label& w) {
    if (!is_dominant_label(w)) throw std::invalid_argument("stabilizer data needs a dominant weight");
    StabilizerData sd;
    sd.t_set = t_set_of(w);
    sd.xis = *g_xis.get_or_compute({algebra, sd.t_set},
                                   [&] { return build_xis(algebra, sd.t_set); });
    return sd;
}

std::shared_ptr<const WeightTable> dominant_weight_system(const Irrep& r) {
    return g_dominant_systems.get_or_compute(r, [&] { return build_dominant_system(r); });
}

Int weight_multiplicity_label(const Label& w, const Irrep& r) {
    auto table = dominant_weight_system(r);
    for (const auto& [lab, m] : *table)
        if (lab == w) return m;
    return 0;  // not a member
}

Int weight_multiplicity(const Vec& w, const Irrep& r) {
    Vec omega = convert_basis(w, Basis::Omega);
    for (const Rat& c : omega.coords)
        if (!is_integer(c)) return 0;
    Label lab = to_label(omega);
    if (!is_dominant_label(lab)) throw std::invalid_argument("weight must be dominant");
    return weight_multiplicity_label(lab, r);
}

std::vector<std::pair<Label, Int>> weight_system_with_mul(const Irrep& r) {
    auto table = dominant_weight_system(r);
    std::vector<std::pair<Label, Int>> out;
    for (const auto& [w, m] : *table) {
        auto orb = orbit_of(r.algebra, w);
        for (const Label& x : orb->elements) out.emplace_back(x, m);
    }
    return out;
}

std::vector<std::pair<Label, long>> weight_system(const Irrep& r) {
    const DefiningData& dd = defining_data(r.algebra);
    std::vector<std::pair<Label, long>> out;
    for (const auto& [w, m] : weight_system_with_mul(r)) {
        long level = weight_level_label(dd, w, r);
        unsigned long copies = m.get_ui();
        for (unsigned long c = 0; c < copies; ++c) out.emplace_back(w, level);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return a.first > b.first;
    });
    return out;
}

Label delta_label(AlgebraId algebra) {
    return Label(algebra.rank, 1);
}

Vec delta(AlgebraId algebra) {
    return omega_vec(algebra, delta_label(algebra));
}

}  // namespace liereps
