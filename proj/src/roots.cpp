#include "liereps/roots.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

#include "liereps/cache.hpp"

namespace liereps {

namespace {

Memo<AlgebraId, RootSystem> g_root_systems;
Memo<AlgebraId, std::vector<Label>> g_positive_roots;

RootSystem build(AlgebraId algebra) {
    const DefiningData& dd = defining_data(algebra);
    const int n = algebra.rank;
    std::set<Label> nonzero;
    for (int i = 0; i < n; ++i) {
        Label alpha(n);
        for (int j = 0; j < n; ++j) alpha[j] = dd.cartan(i, j);
        auto orb = orbit_of(algebra, alpha);
        nonzero.insert(orb->elements.begin(), orb->elements.end());
    }
    RootSystem rs;
    rs.algebra = algebra;
    rs.roots.assign(nonzero.begin(), nonzero.end());
    for (int i = 0; i < n; ++i) rs.roots.emplace_back(n, 0);
    std::stable_sort(rs.roots.begin(), rs.roots.end(), [&](const Label& a, const Label& b) {
        long ha = height_num_of(dd, a), hb = height_num_of(dd, b);
        if (ha != hb) return ha > hb;
        return a > b;
    });
    rs.n_positive = int((rs.roots.size() - n) / 2);
    return rs;
}

}  // namespace

std::shared_ptr<const RootSystem> root_system(AlgebraId algebra) {
    return g_root_systems.get_or_compute(algebra, [&] { return build(algebra); });
}

Rat height(const Vec& root) {
    const DefiningData& dd = defining_data(root.algebra);
    Vec alpha = convert_basis(root, Basis::Alpha);
    Rat s(0);
    for (const Rat& c : alpha.coords) s += c;
    return s;
}

Label highest_root(AlgebraId algebra) {
    return root_system(algebra)->roots.front();
}

const std::vector<Label>& positive_roots(AlgebraId algebra) {
    static thread_local std::shared_ptr<const std::vector<Label>> last;
    static thread_local AlgebraId last_algebra{AlgebraClass::U1, 1};
    if (!last || !(last_algebra == algebra)) {
        last = g_positive_roots.get_or_compute(algebra, [&] {
            auto rs = root_system(algebra);
            return std::vector<Label>(rs->roots.begin(), rs->roots.begin() + rs->n_positive);
        });
        last_algebra = algebra;
    }
    return *last;
}

int num_positive_roots(AlgebraId algebra) {
    return root_system(algebra)->n_positive;
}

bool is_positive_root(const Vec& v) {
    const DefiningData& dd = defining_data(v.algebra);
    Vec alpha = convert_basis(v, Basis::Alpha);
    bool nonzero = false;
    for (const Rat& c : alpha.coords) {
        if (c < 0) return false;
        if (c > 0) nonzero = true;
    }
    if (!nonzero) return false;
    // membership, not just positivity of the alpha coordinates
    Vec omega = convert_basis(v, Basis::Omega);
    Label lab;
    for (const Rat& c : omega.coords) {
        if (!is_integer(c)) return false;
        lab.push_back(c.get_num().get_si());
    }
    const auto& pos = positive_roots(v.algebra);
    return std::find(pos.begin(), pos.end(), lab) != pos.end();
}

std::string spindle_text(const RootSystem& rs) {
    const DefiningData& dd = defining_data(rs.algebra);
    std::ostringstream out;
    bool first_row = true;
    long current = 0;
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
        long h = height_num_of(dd, rs.roots[i]);
        if (first_row || h != current) {
            if (!first_row) out << '\n';
            first_row = false;
            current = h;
        } else {
            out << ' ';
        }
        out << '<';
        for (std::size_t j = 0; j < rs.roots[i].size(); ++j) {
            if (j) out << ',';
            out << rs.roots[i][j];
        }
        out << '>';
    }
    return out.str();
}

}  // namespace liereps
