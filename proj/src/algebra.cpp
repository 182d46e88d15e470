#include "liereps/algebra.hpp"

#include <cctype>
#include <sstream>

namespace liereps {

namespace {

int exceptional_rank(AlgebraClass cls) {
    switch (cls) {
        case AlgebraClass::E6: return 6;
        case AlgebraClass::E7: return 7;
        case AlgebraClass::E8: return 8;
        case AlgebraClass::F4: return 4;
        case AlgebraClass::G2: return 2;
        default: return 0;
    }
}

[[noreturn]] void reject_alias(const std::string& name, const std::string& canonical) {
    throw parse_error("algebra " + name + " is isomorphic to " + canonical +
                      "; use the canonical name");
}

}  // namespace

AlgebraId make_algebra(AlgebraClass cls, int rank) {
    switch (cls) {
        case AlgebraClass::A:
            if (rank < 1) throw parse_error("A_n requires rank >= 1");
            break;
        case AlgebraClass::B:
            if (rank == 1) reject_alias("B1", "A1");
            if (rank < 2) throw parse_error("B_n requires rank >= 2");
            break;
        case AlgebraClass::C:
            if (rank == 1) reject_alias("C1", "A1");
            if (rank < 2) throw parse_error("C_n requires rank >= 2");
            break;
        case AlgebraClass::D:
            if (rank == 2) reject_alias("D2", "A1*A1");
            if (rank == 3) reject_alias("D3", "A3");
            if (rank < 4) throw parse_error("D_n requires rank >= 4");
            break;
        case AlgebraClass::U1:
            if (rank != 1) throw parse_error("U1 has rank 1");
            break;
        default:
            if (rank != exceptional_rank(cls))
                throw parse_error("exceptional algebra has a fixed rank");
            break;
    }
    return AlgebraId{cls, rank};
}

std::string AlgebraId::name() const {
    switch (cls) {
        case AlgebraClass::A: return "A" + std::to_string(rank);
        case AlgebraClass::B: return "B" + std::to_string(rank);
        case AlgebraClass::C: return "C" + std::to_string(rank);
        case AlgebraClass::D: return "D" + std::to_string(rank);
        case AlgebraClass::E6: return "E6";
        case AlgebraClass::E7: return "E7";
        case AlgebraClass::E8: return "E8";
        case AlgebraClass::F4: return "F4";
        case AlgebraClass::G2: return "G2";
        case AlgebraClass::U1: return "U1";
    }
    return "?";
}

std::string AlgebraId::traditional_name() const {
    switch (cls) {
        case AlgebraClass::A: return "SU" + std::to_string(rank + 1);
        case AlgebraClass::B: return "SO" + std::to_string(2 * rank + 1);
        case AlgebraClass::C: return "Sp" + std::to_string(2 * rank);
        case AlgebraClass::D: return "SO" + std::to_string(2 * rank);
        default: return name();
    }
}

std::string ProductAlgebra::name(char sep) const {
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out += sep;
        out += factors[i].traditional_name();
    }
    return out;
}

AlgebraId parse_simple_algebra(const std::string& name) {
    if (name.empty()) throw parse_error("empty algebra name");
    if (name == "U1") return AlgebraId{AlgebraClass::U1, 1};
    if (name == "E6") return AlgebraId{AlgebraClass::E6, 6};
    if (name == "E7") return AlgebraId{AlgebraClass::E7, 7};
    if (name == "E8") return AlgebraId{AlgebraClass::E8, 8};
    if (name == "F4") return AlgebraId{AlgebraClass::F4, 4};
    if (name == "G2") return AlgebraId{AlgebraClass::G2, 2};

    auto numeric_tail = [&](std::size_t pos) -> int {
        if (pos >= name.size()) throw parse_error("missing rank in '" + name + "'");
        for (std::size_t i = pos; i < name.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(name[i])))
                throw parse_error("unknown algebra '" + name + "'");
        return std::stoi(name.substr(pos));
    };

    if (name[0] == 'A' || name[0] == 'B' || name[0] == 'C' || name[0] == 'D') {
        int n = numeric_tail(1);
        AlgebraClass cls = name[0] == 'A'   ? AlgebraClass::A
                           : name[0] == 'B' ? AlgebraClass::B
                           : name[0] == 'C' ? AlgebraClass::C
                                            : AlgebraClass::D;
        return make_algebra(cls, n);
    }
    if (name.rfind("SU", 0) == 0) {
        int n = numeric_tail(2);
        if (n < 2) throw parse_error("SU(n) requires n >= 2");
        return make_algebra(AlgebraClass::A, n - 1);
    }
    if (name.rfind("SO", 0) == 0) {
        int n = numeric_tail(2);
        if (n < 5) {
            if (n == 3) reject_alias("SO3", "A1");
            if (n == 4) reject_alias("SO4", "A1*A1");
            throw parse_error("SO(n) requires n >= 5");
        }
        if (n == 6) reject_alias("SO6", "A3");
        return n % 2 ? make_algebra(AlgebraClass::B, (n - 1) / 2)
                     : make_algebra(AlgebraClass::D, n / 2);
    }
    if (name.rfind("Sp", 0) == 0) {
        int n = numeric_tail(2);
        if (n % 2) throw parse_error("Sp(n) requires even n");
        if (n == 2) reject_alias("Sp2", "A1");
        return make_algebra(AlgebraClass::C, n / 2);
    }
    throw parse_error("unknown algebra '" + name + "'");
}

ProductAlgebra parse_algebra(const std::string& name) {
    ProductAlgebra p;
    std::string token;
    std::stringstream ss(name);
    while (std::getline(ss, token, '*')) {
        // allow surrounding whitespace
        std::size_t b = token.find_first_not_of(" \t");
        std::size_t e = token.find_last_not_of(" \t");
        if (b == std::string::npos) throw parse_error("empty factor in '" + name + "'");
        p.factors.push_back(parse_simple_algebra(token.substr(b, e - b + 1)));
    }
    if (p.factors.empty()) throw parse_error("empty algebra name");
    return p;
}

}  // namespace liereps
