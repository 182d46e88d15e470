#include "liereps/format.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <sstream>

namespace liereps {

namespace {

bool needs_commas(const Label& label) {
    for (long v : label)
        if (v < 0 || v > 9) return true;
    return false;
}

std::string join_label(const Label& label, bool commas) {
    std::string out;
    for (std::size_t i = 0; i < label.size(); ++i) {
        if (i && commas) out += ',';
        out += std::to_string(label[i]);
    }
    return out;
}

std::string latex_name(const DimName& n) {
    std::string cmd = n.barred ? "\\irrepbar" : "\\irrep";
    if (!n.subscript.empty()) cmd += "sub";
    std::string out = cmd;
    if (n.n_primes) out += "[" + std::to_string(n.n_primes) + "]";
    out += "{" + to_string(n.dim) + "}";
    if (!n.subscript.empty()) out += "{" + n.subscript + "}";
    return out;
}

}  // namespace

std::string render_name(const DimName& n, OutputFormat format) {
    if (format == OutputFormat::Latex) return latex_name(n);
    std::string core = to_string(n.dim);
    if (n.barred) core = "bar(" + core + ")";
    core += std::string(n.n_primes, '\'');
    if (!n.subscript.empty()) core += "_" + n.subscript;
    return core;
}

std::string render_label(const Label& label, OutputFormat format) {
    bool commas = needs_commas(label);
    if (format == OutputFormat::Latex)
        return (commas ? "\\dynkincomma{" : "\\dynkin{") + join_label(label, true) + "}";
    return "<" + join_label(label, commas) + ">";
}

std::string render_vec(const Vec& v, OutputFormat format) {
    if (format == OutputFormat::Latex) {
        std::string cmd;
        if (v.basis == Basis::Omega)
            cmd = v.kind == Kind::Root ? "\\rootomega" : "\\weight";
        else if (v.basis == Basis::Alpha)
            cmd = v.kind == Kind::Root ? "\\root" : "\\weightalpha";
        else
            cmd = v.kind == Kind::Root ? "\\rootorthogonal" : "\\weightorthogonal";
        std::string out = cmd + "{";
        for (std::size_t i = 0; i < v.coords.size(); ++i) {
            if (i) out += ',';
            out += to_string(v.coords[i]);
        }
        return out + "}";
    }
    std::string out = "<";
    bool commas = false;
    for (const Rat& c : v.coords)
        if (c < 0 || c > 9 || !is_integer(c)) commas = true;
    for (std::size_t i = 0; i < v.coords.size(); ++i) {
        if (i && commas) out += ',';
        out += to_string(v.coords[i]);
    }
    return out + ">";
}

std::string render_irrep(const Irrep& r, OutputFormat format) {
    switch (format) {
        case OutputFormat::Dynkin: return render_label(r.label, OutputFormat::Dynkin);
        case OutputFormat::Latex: return latex_name(dim_name(r));
        default: return render_name(dim_name(r));
    }
}

std::string render_product_irrep(const ProductIrrep& p, OutputFormat format) {
    bool single_simple = p.algebra.factors.size() == 1 && p.charges.empty();
    std::string out;
    if (single_simple) {
        out = render_irrep(Irrep{p.algebra.factors[0], p.labels[0]}, format);
        return out;
    }
    std::string tuple;
    std::size_t li = 0;
    for (const AlgebraId& f : p.algebra.factors) {
        if (f.is_u1()) continue;
        if (!tuple.empty()) tuple += ",";
        tuple += render_irrep(Irrep{f, p.labels[li++]}, format);
    }
    if (!tuple.empty()) out += "(" + tuple + ")";
    for (const Rat& q : p.charges) out += "(" + to_string(q) + ")";
    return out;
}

std::string render_sum(const IrrepSum& sum, OutputFormat format) {
    std::string sep = format == OutputFormat::Latex ? "+" : " + ";
    std::string out;
    for (const auto& [term, mult] : sum.terms) {
        if (!out.empty()) out += sep;
        std::string body = render_product_irrep(term, format);
        if (mult > 1) {
            bool already_parenthesized = body.front() == '(';
            out += to_string(mult);
            out += already_parenthesized ? body : "(" + body + ")";
        } else {
            out += body;
        }
    }
    if (format == OutputFormat::Latex) return "$" + out + "$";
    return out;
}

Irrep parse_irrep_spec(AlgebraId algebra, const std::string& text, int max_digit) {
    std::string s = text;
    std::erase(s, ' ');
    if (s.empty()) throw parse_error("empty irrep spec");

    if (s.front() == '(') {
        if (s.back() != ')') throw parse_error("unbalanced parentheses in '" + text + "'");
        Label lab;
        std::string token;
        std::stringstream ss(s.substr(1, s.size() - 2));
        while (std::getline(ss, token, ',')) lab.push_back(std::stol(token));
        return make_irrep(algebra, std::move(lab));
    }
    if (s.front() == '<' && s.back() == '>') {
        Label lab;
        std::string inner = s.substr(1, s.size() - 2);
        if (inner.find(',') != std::string::npos) {
            std::string token;
            std::stringstream ss(inner);
            while (std::getline(ss, token, ',')) lab.push_back(std::stol(token));
        } else {
            for (char c : inner) lab.push_back(c - '0');
        }
        return make_irrep(algebra, std::move(lab));
    }

    // dimensional name: digits with bar(...) wrappers, primes and subscripts
    DimName name;
    std::function<void(const std::string&)> parse_body = [&](const std::string& body) {
        std::string rest = body;
        std::size_t us = rest.find('_');
        if (us != std::string::npos) {
            name.subscript = rest.substr(us + 1);
            rest = rest.substr(0, us);
        }
        while (!rest.empty() && rest.back() == '\'') {
            ++name.n_primes;
            rest.pop_back();
        }
        if (rest.rfind("bar(", 0) == 0) {
            if (rest.back() != ')') throw parse_error("unbalanced bar(...) in '" + body + "'");
            if (name.barred) throw parse_error("double bar in '" + body + "'");
            name.barred = true;
            parse_body(rest.substr(4, rest.size() - 5));
            return;
        }
        if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
            throw parse_error("cannot parse irrep name '" + body + "'");
        name.dim = Int(rest);
    };
    parse_body(s);
    return irrep_by_name(algebra, name, max_digit);
}

std::vector<Irrep> table_irreps(AlgebraId algebra, const Int& max_dim) {
    // every label with dim <= max_dim (dimension is strictly monotonic in
    // each digit, so the scan prunes hard)
    std::vector<Irrep> all;
    const int n = algebra.rank;
    Label label(n, 0);
    std::function<void(int)> scan = [&](int pos) {
        if (dim(Irrep{algebra, label}) > max_dim) return;
        if (pos == n) {
            all.push_back(Irrep{algebra, label});
            return;
        }
        for (long v = 0;; ++v) {
            label[pos] = v;
            if (v > 0 && dim(Irrep{algebra, label}) > max_dim) break;
            scan(pos + 1);
        }
        label[pos] = 0;
    };
    scan(0);

    std::erase_if(all, [](const Irrep& r) {
        bool trivial = std::all_of(r.label.begin(), r.label.end(), [](long v) { return v == 0; });
        return trivial || dim_name(r).barred;
    });
    std::sort(all.begin(), all.end(), [](const Irrep& a, const Irrep& b) {
        Int da = dim(a), db = dim(b);
        if (da != db) return da < db;
        Rat ia = index_raw(a), ib = index_raw(b);
        if (ia != ib) return ia < ib;
        return a.label > b.label;
    });
    return all;
}

namespace {

std::string csv_escape(const std::string& s) {
    return s;  // no commas or quotes appear in the rendered cells
}

std::string format_row(const std::vector<std::string>& cells, OutputFormat format) {
    std::string sep = format == OutputFormat::Csv    ? ","
                      : format == OutputFormat::Latex ? " & "
                                                       : "  ";
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += sep;
        out += format == OutputFormat::Csv ? csv_escape(cells[i]) : cells[i];
    }
    if (format == OutputFormat::Latex) out += " \\\\";
    return out;
}

}  // namespace

std::string generate_table(TableKind kind, AlgebraId algebra, const Int& max_dim,
                           OutputFormat format) {
    std::ostringstream out;
    OutputFormat name_fmt = format == OutputFormat::Latex ? OutputFormat::Latex
                                                          : OutputFormat::Plain;
    OutputFormat label_fmt = format == OutputFormat::Latex ? OutputFormat::Latex
                                                           : OutputFormat::Dynkin;
    std::vector<Irrep> irreps = table_irreps(algebra, max_dim);
    switch (kind) {
        case TableKind::Irreps: {
            std::string index_header =
                index_table_factor(algebra) == 1
                    ? "l"
                    : "l/" + std::to_string(index_table_factor(algebra));
            out << format_row({"label", "name", index_header + " (index)", "congruency"}, format)
                << '\n';
            for (const Irrep& r : irreps)
                out << format_row({render_label(r.label, label_fmt),
                                   render_name(dim_name(r), name_fmt),
                                   to_string(index_normalized(r)), congruency_class(r).str()},
                                  format)
                    << '\n';
            break;
        }
        case TableKind::Products: {
            for (std::size_t i = 0; i < irreps.size(); ++i)
                for (std::size_t j = 0; j <= i; ++j) {
                    IrrepSum sum = decompose_product(irreps[i], irreps[j]);
                    out << render_name(dim_name(irreps[i]), name_fmt) << " * "
                        << render_name(dim_name(irreps[j]), name_fmt) << " = "
                        << render_sum(sum, name_fmt) << '\n';
                }
            break;
        }
        case TableKind::Branchings: {
            auto targets = BranchingRegistry::instance().known_targets(algebra);
            for (const ProductAlgebra& target : targets) {
                out << algebra.traditional_name() << " -> " << target.name() << '\n';
                for (const Irrep& r : irreps)
                    out << render_name(dim_name(r), name_fmt) << " = "
                        << render_sum(decompose_irrep(r, target), name_fmt) << '\n';
                out << '\n';
            }
            break;
        }
    }
    return out.str();
}

}  // namespace liereps
