#pragma once

#include "mage/polynomial.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace mage {

// Variable of a formal jet polynomial: a base coordinate q^mu, a jet symbol
// phi_I of some field (I a sorted multiindex; the empty index is the field
// value itself), or a named parameter. Sorted storage makes the symmetry
// s_{mu nu} = s_{nu mu} structural.
struct JetVar {
    enum class Kind : unsigned char { Coord = 0, Symbol = 1, Parameter = 2 };
    Kind kind = Kind::Coord;
    int index = 0;              // Coord
    std::string field;          // Symbol
    std::vector<int> multi;     // Symbol, sorted ascending
    std::string param;          // Parameter

    static JetVar coord(int mu) { return {Kind::Coord, mu, {}, {}, {}}; }
    static JetVar symbol(std::string f, std::vector<int> I = {}) {
        std::sort(I.begin(), I.end());
        return {Kind::Symbol, 0, std::move(f), std::move(I), {}};
    }
    static JetVar parameter(std::string name) {
        return {Kind::Parameter, 0, {}, {}, std::move(name)};
    }

    int order() const { return static_cast<int>(multi.size()); }
    bool is_parameter() const { return kind == Kind::Parameter; }

    friend auto operator<=>(const JetVar&, const JetVar&) = default;

    std::string text() const {
        switch (kind) {
        case Kind::Coord: return "q" + std::to_string(index);
        case Kind::Parameter: return param;
        case Kind::Symbol: {
            std::string s = field;
            if (!multi.empty()) {
                s += '_';
                for (int i : multi) s += std::to_string(i);
            }
            return s;
        }
        }
        return "?";
    }
};

using JetPolynomial = PolynomialT<JetVar>;
using JetMonomial = MonomialT<JetVar>;

// Highest derivative order of the given field occurring in P.
int jet_order(const JetPolynomial& p, const std::string& field);

} // namespace mage
