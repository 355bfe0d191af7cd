#include "mage/catalog.hpp"

#include "mage/parser.hpp"
#include "mage/pde.hpp"
#include "mage/render.hpp"

#include <json.hpp>

#include <map>

namespace mage {
namespace {

// clang-format off
const char* kCatalogJson = R"json({
  "schema_version": 1,
  "entries": [
    {
      "name": "plebanski1",
      "n": 4,
      "params": [],
      "equation": "phi_13*phi_24 - phi_14*phi_23 - 1",
      "representation": "d[1,2;1,2] - beta",
      "alternate": "d[1,2;1,2] - d[1,2;3,4]",
      "notes": [
        "The circulated simple representation d[1,2;1,2] - d[1,2;3,4] extracts to phi_13*phi_24 - phi_14*phi_23 - (phi_33*phi_44 - phi_34^2), which is not a rational multiple of the first heavenly equation; it is kept as a flagged alternate and fails validation.",
        "The stored representation d[1,2;1,2] - beta validates with k = 1 and reproduces the -beta leading term of the effective part."
      ]
    },
    {
      "name": "plebanski2",
      "n": 4,
      "params": [],
      "equation": "phi_11*phi_22 - phi_12^2 + phi_13 + phi_24",
      "representation": "d[1,2,3;2] - d[1,2,4;1] + d[3,4;1,2]",
      "documented_effective": "1/2*d[1,2,4;1] + 1/2*d[1,2,3;2] + 1/2*d[2,3,4;3] + 1/2*d[1,3,4;4] + d[3,4;1,2]",
      "notes": [
        "The computed effective part is 1/2*(d[1,2,3;2] - d[1,2,4;1] + d[1,3,4;4] - d[2,3,4;3]) + d[3,4;1,2]; the circulated row has all four 1/2-terms positive. The sign pattern differs on d[1,2,4;1] and d[2,3,4;3]; only the computed row passes the bottom-operator test."
      ]
    },
    {
      "name": "grant",
      "n": 4,
      "params": [],
      "equation": "phi_11 + phi_24*phi_13 - phi_23*phi_14",
      "representation": "-d[2,3,4;1] + d[1,2;1,2]",
      "alternate": "-d[2,3,4;1] - d[1,2;1,2]",
      "notes": [
        "The circulated simple representation -d[2,3,4;1] - d[1,2;1,2] extracts to phi_11 - phi_13*phi_24 + phi_14*phi_23, which is not a nonzero multiple of the Grant equation; the +d[1,2;1,2] variant validates with k = 1 and matches the +1/3 signs of the effective part."
      ]
    },
    {
      "name": "husain",
      "n": 4,
      "params": [],
      "equation": "phi_13*phi_24 - phi_14*phi_23 + phi_11 + phi_22",
      "representation": "d[1,3,4;2] - d[2,3,4;1] + d[1,2;1,2]",
      "documented_effective": "d[1,3,4;2] - d[2,3,4;1] + d[1,2;1,2] + d[3,4;3,4] - 1/2*d[1,3;1,3] - 1/2*d[1,4;1,4] - 1/2*d[2,3;2,3] - 1/2*d[2,4;2,4]",
      "notes": [
        "The computed effective part is d[1,3,4;2] - d[2,3,4;1] + 1/3*(d[1,2;1,2] + d[3,4;3,4]) - 1/6*(d[1,3;1,3] + d[1,4;1,4] + d[2,3;2,3] + d[2,4;2,4]); the circulated row scales the whole Omega-block by 3 and fails the bottom-operator test."
      ]
    },
    {
      "name": "klein-gordon",
      "n": 4,
      "params": ["m"],
      "equation": "phi_11 - phi_22 - phi_33 - phi_44 + m^2*phi",
      "representation": "-beta_1^dp1 + beta_2^dp2 + beta_3^dp3 + beta_4^dp4 + m^2*u*beta",
      "notes": [
        "Stored with the linear mass term m^2*phi: the representing form's m^2*u*beta term and the Lagrangian 1/2*m^2*u^2 both pull back to it. The sometimes-printed quadratic variant m^2*phi^2 is inconsistent with that form and fails the extraction identity.",
        "The representation is already effective; it is not simple (the coefficient m^2*u is not constant)."
      ]
    },
    {
      "name": "wave1d",
      "n": 2,
      "params": ["c"],
      "equation": "phi_11 - c*phi_22",
      "representation": "-c*dq1^dp2 - dq2^dp1",
      "notes": [
        "The simple representation is already effective."
      ]
    }
  ]
})json";
// clang-format on

struct Catalog {
    std::vector<std::string> names;
    std::map<std::string, CatalogEntry> entries;
    std::map<int, JetContext> contexts;
};

// Verifies extract(rep) = k * lhs with k a nonzero rational; nullopt when the
// identity fails.
std::optional<Rational> extraction_factor(const JetContext& ctx, const DifferentialForm& rep,
                                          const JetPolynomial& lhs) {
    const JetPolynomial ex = extract_pde(ctx, rep);
    if (ex.is_zero() || lhs.is_zero()) return std::nullopt;
    const auto& [lm, lc] = *lhs.terms().begin();
    auto it = ex.terms().find(lm);
    if (it == ex.terms().end()) return std::nullopt;
    const Rational k = it->second / lc;
    if (k == 0 || !(ex == lhs * k)) return std::nullopt;
    return k;
}

Catalog load_catalog() {
    Catalog cat;
    const nlohmann::json doc = nlohmann::json::parse(kCatalogJson);
    for (const auto& je : doc.at("entries")) {
        MAEquation eq;
        eq.name = je.at("name").get<std::string>();
        eq.n = je.at("n").get<int>();
        eq.params = je.at("params").get<std::vector<std::string>>();

        auto cit = cat.contexts.find(eq.n);
        if (cit == cat.contexts.end())
            cit = cat.contexts.emplace(eq.n, make_jet_context(eq.n)).first;
        const JetContext& ctx = cit->second;

        const ParseContext pc{eq.n, eq.params};
        eq.lhs = parse_jet_polynomial(je.at("equation").get<std::string>(), pc);
        DifferentialForm rep = parse_form(je.at("representation").get<std::string>(), pc);

        const auto k = extraction_factor(ctx, rep, eq.lhs);
        if (!k)
            throw Error("catalog entry '" + eq.name + "' fails the extraction identity");

        CatalogEntry e{eq,
                       rep,
                       *k,
                       effective_part(ctx, project(ctx, rep)),
                       std::nullopt,
                       "",
                       std::nullopt,
                       {}};

        if (je.contains("alternate")) {
            e.alternate_representation = parse_form(je.at("alternate").get<std::string>(), pc);
            e.alternate_extraction_text =
                to_text(extract_pde(ctx, *e.alternate_representation));
            if (extraction_factor(ctx, *e.alternate_representation, e.equation.lhs))
                throw Error("catalog alternate for '" + e.equation.name +
                            "' unexpectedly validates");
        }
        if (je.contains("documented_effective"))
            e.documented_effective =
                parse_form(je.at("documented_effective").get<std::string>(), pc);
        for (const auto& note : je.at("notes")) e.notes.push_back(note.get<std::string>());

        cat.names.push_back(e.equation.name);
        cat.entries.emplace(e.equation.name, std::move(e));
    }
    return cat;
}

const Catalog& catalog() {
    static const Catalog cat = load_catalog();
    return cat;
}

} // namespace

const std::vector<std::string>& catalog_names() { return catalog().names; }

const CatalogEntry& catalog_entry(const std::string& name) {
    const auto& entries = catalog().entries;
    auto it = entries.find(name);
    if (it == entries.end()) throw UnknownEquation(name);
    return it->second;
}

const JetContext& catalog_context(const CatalogEntry& e) {
    return catalog().contexts.at(e.equation.n);
}

} // namespace mage
