#pragma once

#include "mage/jet_context.hpp"
#include "mage/jet_poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mage {

struct MAEquation {
    std::string name;
    int n = 4;
    std::vector<std::string> params;
    JetPolynomial lhs; // the equation is lhs = 0
};

// One built-in equation with its representing form. Validated on first
// access: extract_pde(representation) must be a nonzero rational multiple of
// lhs, and the stored effective part is recomputed from the representation.
// Variants from circulated tables that fail the extraction identity are kept
// as flagged alternates with notes.
struct CatalogEntry {
    MAEquation equation;
    DifferentialForm representation;
    Rational extraction_factor; // k with extract(representation) = k * lhs
    DifferentialForm effective;
    std::optional<DifferentialForm> alternate_representation;
    std::string alternate_extraction_text; // what the alternate actually extracts to
    std::optional<DifferentialForm> documented_effective; // differing printed row
    std::vector<std::string> notes;
};

// Catalog names: plebanski1, plebanski2, grant, husain, klein-gordon, wave1d.
const std::vector<std::string>& catalog_names();
const CatalogEntry& catalog_entry(const std::string& name); // throws UnknownEquation

// The jet context matching an entry's dimension.
const JetContext& catalog_context(const CatalogEntry& e);

} // namespace mage
