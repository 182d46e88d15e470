#include "liereps/weyl.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

#include "liereps/cache.hpp"

namespace liereps {

namespace {

bool desc_lex(const Label& a, const Label& b) {
    return a > b;
}

std::vector<Label> an_orbit_by_permutation(const DefiningData& dd, const Label& dom) {
    // Orthogonal coordinates of an A_n weight have denominator dividing n+1;
    // scale to integers and enumerate distinct permutations.
    const int m = dd.m;
    std::vector<Rat> omega(dom.size());
    for (std::size_t i = 0; i < dom.size(); ++i) omega[i] = Rat(dom[i]);
    std::vector<Rat> orth = dd.omega_orth.apply_left(omega);
    std::vector<long> scaled(m);
    for (int k = 0; k < m; ++k) {
        Rat v = orth[k] * m;
        assert(is_integer(v));
        scaled[k] = v.get_num().get_si();
    }
    std::sort(scaled.begin(), scaled.end());
    std::vector<Label> out;
    do {
        // a_i = dot(x, alpha_i) for A_n; alpha_i = e_i - e_{i+1}
        Label lab(dom.size());
        for (std::size_t i = 0; i < dom.size(); ++i) {
            long d = scaled[i] - scaled[i + 1];
            assert(d % m == 0);
            lab[i] = d / m;
        }
        out.push_back(std::move(lab));
    } while (std::next_permutation(scaled.begin(), scaled.end()));
    return out;
}

std::vector<Label> generic_orbit(const DefiningData& dd, const Label& dom) {
    const int n = dd.algebra.rank;
    std::set<Label> seen{dom};
    std::vector<Label> frontier{dom};
    while (!frontier.empty()) {
        std::vector<Label> next;
        for (const Label& x : frontier)
            for (int i = 1; i <= n; ++i) {
                Label y = reflect_label(dd, x, i);
                if (seen.insert(y).second) next.push_back(std::move(y));
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

Memo<std::pair<AlgebraId, Label>, Orbit> g_orbits;

}  // namespace

Label reflect_label(const DefiningData& dd, const Label& x, int i) {
    assert(i >= 1 && i <= dd.algebra.rank);
    Label y = x;
    long c = x[i - 1];
    if (c)
        for (int j = 0; j < dd.algebra.rank; ++j) y[j] -= c * dd.cartan(i - 1, j);
    return y;
}

Vec reflect(const Vec& v, int simple_root_index) {
    const DefiningData& dd = defining_data(v.algebra);
    if (simple_root_index < 1 || simple_root_index > v.algebra.rank)
        throw std::out_of_range("simple root index out of range");
    Vec omega = convert_basis(v, Basis::Omega);
    // Dynkin coordinate times the Cartan row; exact for rational input too.
    Rat c = omega.coords[simple_root_index - 1];
    for (int j = 0; j < v.algebra.rank; ++j)
        omega.coords[j] -= c * dd.cartan(simple_root_index - 1, j);
    return convert_basis(omega, v.basis);
}

std::vector<RatMat> reflection_matrices(AlgebraId algebra) {
    const DefiningData& dd = defining_data(algebra);
    std::vector<RatMat> out;
    out.reserve(algebra.rank);
    for (int i = 0; i < algebra.rank; ++i) {
        // M = I - 2 a a^T / (a.a), acting on orthogonal column vectors.
        Rat len(0);
        for (int k = 0; k < dd.m; ++k)
            len += dd.simple_roots_orth(i, k) * dd.simple_roots_orth(i, k);
        RatMat m = RatMat::identity(dd.m);
        for (int r = 0; r < dd.m; ++r)
            for (int c = 0; c < dd.m; ++c)
                m(r, c) -= 2 * dd.simple_roots_orth(i, r) * dd.simple_roots_orth(i, c) / len;
        out.push_back(std::move(m));
    }
    return out;
}

bool is_dominant_label(const Label& x) {
    for (long v : x)
        if (v < 0) return false;
    return true;
}

bool is_dominant(const Vec& v) {
    Vec omega = convert_basis(v, Basis::Omega);
    for (const Rat& c : omega.coords)
        if (c < 0) return false;
    return true;
}

Label to_dominant_label(const DefiningData& dd, Label x) {
    const int n = dd.algebra.rank;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < n; ++i)
            if (x[i] < 0) {
                long c = x[i];
                for (int j = 0; j < n; ++j) x[j] -= c * dd.cartan(i, j);
                changed = true;
            }
    }
    return x;
}

Vec to_dominant(const Vec& v) {
    const DefiningData& dd = defining_data(v.algebra);
    Vec omega = convert_basis(v, Basis::Omega);
    Label lab = to_label(omega);
    return convert_basis(omega_vec(v.algebra, to_dominant_label(dd, lab), v.kind), v.basis);
}

std::shared_ptr<const Orbit> orbit_of(AlgebraId algebra, const Label& omega_label) {
    const DefiningData& dd = defining_data(algebra);
    Label dom = to_dominant_label(dd, omega_label);
    return g_orbits.get_or_compute({algebra, dom}, [&] {
        Orbit o;
        o.dominant = dom;
        o.elements = (algebra.cls == AlgebraClass::A) ? an_orbit_by_permutation(dd, dom)
                                                      : generic_orbit(dd, dom);
        std::sort(o.elements.begin(), o.elements.end(), desc_lex);
        return o;
    });
}

Orbit orbit(const Vec& v) {
    Vec omega = convert_basis(v, Basis::Omega);
    return *orbit_of(v.algebra, to_label(omega));
}

Int orbit_size(AlgebraId algebra, const Label& omega_label) {
    return Int(static_cast<unsigned long>(orbit_of(algebra, omega_label)->size()));
}

Int weyl_order(AlgebraId algebra) {
    auto factorial = [](int n) {
        Int f = 1;
        for (int i = 2; i <= n; ++i) f *= i;
        return f;
    };
    const int n = algebra.rank;
    switch (algebra.cls) {
        case AlgebraClass::A: return factorial(n + 1);
        case AlgebraClass::B:
        case AlgebraClass::C: {
            Int f = factorial(n);
            for (int i = 0; i < n; ++i) f *= 2;
            return f;
        }
        case AlgebraClass::D: {
            Int f = factorial(n);
            for (int i = 0; i < n - 1; ++i) f *= 2;
            return f;
        }
        case AlgebraClass::G2: return 12;
        case AlgebraClass::F4: return 1152;
        case AlgebraClass::E6: return 51840;
        case AlgebraClass::E7: return 2903040;
        case AlgebraClass::E8: return Int("696729600");
        case AlgebraClass::U1: return 1;
    }
    throw std::logic_error("unreachable");
}

}  // namespace liereps
