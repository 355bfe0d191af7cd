#include "mage/render.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace mage {
namespace {

// ---- text ----

template <class Var>
std::string power_text(const Var& v, int e) {
    std::string s = v.text();
    if (e != 1) s += "^" + std::to_string(e);
    return s;
}

// Factors of one monomial, parameters first, then chart order.
template <class Var>
std::vector<std::string> factor_texts(const MonomialT<Var>& m, const Rational& abs_coeff) {
    std::vector<std::string> factors;
    if (abs_coeff != 1 || m.exps.empty()) factors.push_back(to_string(abs_coeff));
    for (const auto& [v, e] : m.exps)
        if (v.is_parameter()) factors.push_back(power_text(v, e));
    for (const auto& [v, e] : m.exps)
        if (!v.is_parameter()) factors.push_back(power_text(v, e));
    return factors;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

template <class Var>
std::string poly_text(const PolynomialT<Var>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const bool neg = c < 0;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        out += join(factor_texts(m, neg ? Rational(-c) : c), "*");
    }
    return out;
}

std::string mono_text(const GeneratorSet& gens, const ExtMonomial& m) {
    std::vector<std::string> parts;
    for (int s : m.factors()) parts.push_back(gens.generator_at(s).text());
    return join(parts, "^");
}

// ---- latex ----

std::string rational_latex(const Rational& r) {
    if (is_integer(r)) return to_string(r);
    std::string sign = r < 0 ? "-" : "";
    const Rational a = r < 0 ? Rational(-r) : r;
    return sign + "\\frac{" + to_string(numerator(a)) + "}{" + to_string(denominator(a)) + "}";
}

std::string brace(const std::string& s) { return s.size() == 1 ? s : "{" + s + "}"; }

std::string variable_latex(const VariableId& v) {
    switch (v.kind) {
    case VarKind::BaseCoord: return "q^" + brace(std::to_string(v.index));
    case VarKind::Fiber: return "u";
    case VarKind::Momentum: return "p_" + brace(std::to_string(v.index));
    case VarKind::Extension: return "e";
    case VarKind::FieldValue: return "\\phi";
    case VarKind::Parameter: return v.name.size() == 1 ? v.name : "\\mathrm{" + v.name + "}";
    }
    return "?";
}

std::string field_latex(const std::string& f) {
    static const std::set<std::string> greek = {"phi", "psi", "chi", "eta",  "xi",
                                                "rho", "sigma", "tau", "omega"};
    if (greek.count(f)) return "\\" + f;
    return f;
}

std::string variable_latex(const JetVar& v) {
    switch (v.kind) {
    case JetVar::Kind::Coord: return "q^" + brace(std::to_string(v.index));
    case JetVar::Kind::Parameter:
        return v.param.size() == 1 ? v.param : "\\mathrm{" + v.param + "}";
    case JetVar::Kind::Symbol: {
        std::string s = field_latex(v.field);
        if (!v.multi.empty()) {
            std::string idx;
            for (int i : v.multi) idx += std::to_string(i);
            s += "_" + brace(idx);
        }
        return s;
    }
    }
    return "?";
}

template <class Var>
std::string poly_latex(const PolynomialT<Var>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const bool neg = c < 0;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        const Rational a = neg ? Rational(-c) : c;
        std::vector<std::string> factors;
        if (a != 1 || m.exps.empty()) factors.push_back(rational_latex(a));
        auto emit = [&](const Var& v, int e) {
            std::string s = variable_latex(v);
            if (e != 1) s += "^" + brace(std::to_string(e));
            factors.push_back(s);
        };
        for (const auto& [v, e] : m.exps)
            if (v.is_parameter()) emit(v, e);
        for (const auto& [v, e] : m.exps)
            if (!v.is_parameter()) emit(v, e);
        out += join(factors, " ");
    }
    return out;
}

// d^{13}_{13}, d^{1234}, d_{12}, with Du/De/Dphi wedged in chart position.
std::string mono_latex(const GeneratorSet& gens, const ExtMonomial& m) {
    std::string qs, ps;
    bool du = false, de = false, dphi = false;
    for (int s : m.factors()) {
        const Generator g = gens.generator_at(s);
        switch (g.kind) {
        case Generator::Kind::DQ: qs += std::to_string(g.index); break;
        case Generator::Kind::DP: ps += std::to_string(g.index); break;
        case Generator::Kind::DU: du = true; break;
        case Generator::Kind::DE: de = true; break;
        case Generator::Kind::DPHI: dphi = true; break;
        }
    }
    std::vector<std::string> pieces;
    if (du) {
        if (!qs.empty()) pieces.push_back("d^{" + qs + "}");
        pieces.push_back("Du");
        if (!ps.empty()) pieces.push_back("d_{" + ps + "}");
    } else if (!qs.empty() || !ps.empty()) {
        std::string block = "d";
        if (!qs.empty()) block += "^{" + qs + "}";
        if (!ps.empty()) block += "_{" + ps + "}";
        pieces.push_back(block);
    }
    if (de) pieces.push_back("De");
    if (dphi) pieces.push_back("D\\phi");
    return join(pieces, " \\wedge ");
}

} // namespace

std::string to_text(const Polynomial& p) { return poly_text(p); }
std::string to_text(const JetPolynomial& p) { return poly_text(p); }

std::string to_text(const DifferentialForm& f) {
    if (f.is_zero()) return "0";
    if (f.degree() == 0) return poly_text(f.coefficient(ExtMonomial{}));
    std::string out;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        const std::string mono = mono_text(f.gens(), m);
        if (c.terms().size() == 1) {
            const auto& [pm, pc] = *c.terms().begin();
            const bool neg = pc < 0;
            if (first)
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            std::vector<std::string> factors =
                factor_texts(pm, neg ? Rational(-pc) : pc);
            if (factors.size() == 1 && factors[0] == "1") factors.clear();
            factors.push_back(mono);
            out += join(factors, "*");
        } else {
            out += first ? "" : " + ";
            out += "(" + poly_text(c) + ")*" + mono;
        }
        first = false;
    }
    return out;
}

std::string to_latex(const Rational& r) { return rational_latex(r); }
std::string to_latex(const Polynomial& p) { return poly_latex(p); }
std::string to_latex(const JetPolynomial& p) { return poly_latex(p); }

std::string to_latex(const DifferentialForm& f) {
    if (f.is_zero()) return "0";
    if (f.degree() == 0) return poly_latex(f.coefficient(ExtMonomial{}));

    // group monomials that share one exact coefficient, in canonical order
    std::vector<std::pair<Polynomial, std::vector<ExtMonomial>>> groups;
    for (const auto& [m, c] : f.terms()) {
        auto it = std::find_if(groups.begin(), groups.end(),
                               [&](const auto& g) { return g.first == c; });
        if (it == groups.end())
            groups.push_back({c, {m}});
        else
            it->second.push_back(m);
    }

    std::string out;
    bool first = true;
    for (const auto& [coeff, monos] : groups) {
        std::vector<std::string> body;
        for (const ExtMonomial& m : monos) body.push_back(mono_latex(f.gens(), m));

        // pull the sign out of a single-term coefficient
        bool neg = false;
        Polynomial c = coeff;
        if (coeff.terms().size() == 1 && coeff.terms().begin()->second < 0) {
            neg = true;
            c = -coeff;
        }
        std::string cs;
        const bool is_one = c.is_constant() && c.constant_value() == 1;
        if (!is_one)
            cs = c.terms().size() == 1 ? poly_latex(c) : "(" + poly_latex(c) + ")";

        std::string piece = cs;
        if (monos.size() > 1) {
            piece += "(" + join(body, "+") + ")";
        } else {
            if (!piece.empty()) piece += " ";
            piece += body[0];
        }

        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        out += piece;
    }
    return out;
}

namespace {

template <class Poly>
std::vector<std::string> collect_params(const Poly& p) {
    std::set<std::string> names;
    p.for_each_variable([&](const auto& v) {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, VariableId>) {
            if (v.is_parameter()) names.insert(v.name);
        } else {
            if (v.is_parameter()) names.insert(v.param);
        }
    });
    return {names.begin(), names.end()};
}

} // namespace

nlohmann::json to_json(const DifferentialForm& f) {
    std::set<std::string> params;
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : f.terms()) {
        nlohmann::json mono = nlohmann::json::array();
        for (int s : m.factors()) mono.push_back(f.gens().generator_at(s).text());
        terms.push_back({{"monomial", mono}, {"coefficient", poly_text(c)}});
        for (const auto& name : collect_params(c)) params.insert(name);
    }
    return {{"schema_version", kSchemaVersion},
            {"kind", "differential_form"},
            {"n", f.gens().n()},
            {"chart",
             {{"du", f.gens().has_du()}, {"de", f.gens().has_de()}, {"dphi", f.gens().has_dphi()}}},
            {"params", std::vector<std::string>(params.begin(), params.end())},
            {"degree", f.degree()},
            {"terms", terms}};
}

DifferentialForm form_from_json(const nlohmann::json& j) {
    if (j.value("kind", "") != "differential_form")
        throw Error("json document is not a differential form");
    const int n = j.at("n").get<int>();
    const auto& chart = j.at("chart");
    GeneratorSet gens = chart.value("dphi", false) ? GeneratorSet::covariant_phase(n)
                        : chart.value("de", false) ? GeneratorSet::jet_chart_extended(n)
                                                   : GeneratorSet::jet_chart(n);
    ParseContext pc{n, j.value("params", std::vector<std::string>{})};
    DifferentialForm f(gens, j.at("degree").get<int>());
    for (const auto& term : j.at("terms")) {
        std::uint32_t bits = 0;
        int sign = 1;
        for (const auto& gname : term.at("monomial")) {
            // reuse the DSL token names
            const std::string g = gname.get<std::string>();
            Generator gen = Generator::du();
            if (g == "du") gen = Generator::du();
            else if (g == "de") gen = Generator::de();
            else if (g == "dphi") gen = Generator::dphi();
            else if (g.rfind("dq", 0) == 0) gen = Generator::dq(std::stoi(g.substr(2)));
            else if (g.rfind("dp", 0) == 0) gen = Generator::dp(std::stoi(g.substr(2)));
            else throw Error("unknown generator '" + g + "' in json form");
            const int s = gens.slot(gen);
            const int a = append_sign(bits, s);
            if (a == 0) throw Error("repeated generator in json form monomial");
            sign *= a;
            bits |= std::uint32_t{1} << s;
        }
        Polynomial c = parse_polynomial(term.at("coefficient").get<std::string>(), pc);
        f.add_term(ExtMonomial{bits}, sign < 0 ? -c : c);
    }
    return f;
}

nlohmann::json to_json(const JetPolynomial& p, int n) {
    return {{"schema_version", kSchemaVersion},
            {"kind", "jet_polynomial"},
            {"n", n},
            {"params", collect_params(p)},
            {"text", poly_text(p)}};
}

JetPolynomial jet_polynomial_from_json(const nlohmann::json& j) {
    if (j.value("kind", "") != "jet_polynomial")
        throw Error("json document is not a jet polynomial");
    ParseContext pc{j.at("n").get<int>(), j.value("params", std::vector<std::string>{})};
    return parse_jet_polynomial(j.at("text").get<std::string>(), pc);
}

} // namespace mage
