#pragma once

#include "mage/errors.hpp"
#include "mage/polynomial.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace mage {

// One-form generators of the exterior algebra, in canonical order
//   dq^1 < ... < dq^n < du < dp_1 < ... < dp_n < de < dphi.
struct Generator {
    enum class Kind : unsigned char { DQ, DU, DP, DE, DPHI };
    Kind kind = Kind::DU;
    int index = 0; // 1-based, DQ/DP only

    static Generator dq(int mu) { return {Kind::DQ, mu}; }
    static Generator du() { return {Kind::DU, 0}; }
    static Generator dp(int mu) { return {Kind::DP, mu}; }
    static Generator de() { return {Kind::DE, 0}; }
    static Generator dphi() { return {Kind::DPHI, 0}; }

    friend auto operator<=>(const Generator&, const Generator&) = default;

    std::string text() const;
};

// An ordered generator set for one chart. Slots are global positions in the
// canonical order for the given base dimension n, so permutation signs do not
// depend on which optional generators (du, de, dphi) are present.
class GeneratorSet {
public:
    // {dq, du, dp}: the first jet chart.
    static GeneratorSet jet_chart(int n);
    // {dq, du, dp, de}: the trivial line bundle over the jet chart.
    static GeneratorSet jet_chart_extended(int n);
    // {dq, dp, de, dphi}: the covariant phase space chart (no du).
    static GeneratorSet covariant_phase(int n);

    int n() const { return n_; }
    bool has_du() const { return du_; }
    bool has_de() const { return de_; }
    bool has_dphi() const { return dphi_; }
    std::size_t size() const;

    int slot(const Generator& g) const;         // throws if g is not in the set
    Generator generator_at(int slot) const;     // inverse of slot()
    std::vector<int> slots() const;             // ascending

    // Chart variable whose differential is the generator at `slot`.
    VariableId variable_at(int slot) const;
    // Slot of d(variable), or -1 when the variable has no generator here
    // (parameters, or coordinates absent from this chart).
    int slot_of_variable(const VariableId& v) const;

    friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

private:
    GeneratorSet(int n, bool du, bool de, bool dphi);
    int n_ = 0;
    bool du_ = false, de_ = false, dphi_ = false;
};

// Strictly increasing generator subset, stored as a bitmask over global
// slots. Degree = popcount. Permutation signs of arbitrary input orderings
// are absorbed into coefficients by the construction helpers.
struct ExtMonomial {
    std::uint32_t bits = 0;

    int degree() const { return std::popcount(bits); }
    bool contains(int slot) const { return bits & (std::uint32_t{1} << slot); }
    std::vector<int> factors() const;

    friend bool operator==(const ExtMonomial&, const ExtMonomial&) = default;
};

// Lexicographic order on the ascending factor sequences; beta = dq^1...dq^n
// precedes every other monomial of its degree.
struct ExtMonomialLex {
    bool operator()(const ExtMonomial& a, const ExtMonomial& b) const;
};

// Sign of appending the single generator `slot` to `mono` and resorting, or
// 0 when the generator already occurs.
int append_sign(std::uint32_t mono, int slot);
// Sign of the merge a ^ b into canonical order, or 0 on a shared generator.
int merge_sign(std::uint32_t a, std::uint32_t b);

// Degree-homogeneous differential form with exact polynomial coefficients.
// Immutable value semantics; every operation returns a new form.
class DifferentialForm {
public:
    using TermMap = std::map<ExtMonomial, Polynomial, ExtMonomialLex>;

    DifferentialForm(GeneratorSet gens, int degree);

    static DifferentialForm zero(const GeneratorSet& gens, int degree) {
        return DifferentialForm(gens, degree);
    }
    // The 0-form with the given polynomial value.
    static DifferentialForm scalar(const GeneratorSet& gens, Polynomial value);
    // c * g1 ^ g2 ^ ... with the permutation sign of the given ordering
    // folded into the coefficient; repeated generators give the zero form.
    static DifferentialForm product(const GeneratorSet& gens, const std::vector<Generator>& gs,
                                    Polynomial coeff = Polynomial::constant(Rational(1)));

    const GeneratorSet& gens() const { return gens_; }
    int degree() const { return degree_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(ExtMonomial m, const Polynomial& coeff);

    // The coefficient of a monomial (zero polynomial when absent).
    const Polynomial& coefficient(const ExtMonomial& m) const;

    DifferentialForm operator+(const DifferentialForm& o) const;
    DifferentialForm operator-(const DifferentialForm& o) const;
    DifferentialForm operator-() const;
    DifferentialForm scaled(const Polynomial& c) const;
    DifferentialForm scaled(const Rational& c) const;

    // Forms are equal when both are zero or when generator set, degree, and
    // all terms coincide.
    friend bool operator==(const DifferentialForm& a, const DifferentialForm& b);

private:
    GeneratorSet gens_;
    int degree_ = 0;
    TermMap terms_;
};

// Polynomial vector field: coefficients on the dual directions of the chart
// generators (the direction dual to the generator at slot s is stored under
// key s).
struct PolyVectorField {
    GeneratorSet gens;
    std::map<int, Polynomial> components;

    static PolyVectorField direction(const GeneratorSet& g, const Generator& gen);
};

// Sum of weighted decomposable bivectors A ^ B.
struct PolyBiVector {
    struct Pair {
        int a = 0, b = 0; // direction slots, a != b
        Polynomial weight;
    };
    GeneratorSet gens;
    std::vector<Pair> pairs;
};

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b);

// Interior product by a single coordinate direction.
DifferentialForm contract_direction(int slot, const DifferentialForm& a);

// Interior product V -| a; graded Leibniz rule holds by construction.
// Contracting a 0-form is a degree error.
DifferentialForm contract(const PolyVectorField& v, const DifferentialForm& a);

// (A ^ B) -| a := B -| (A -| a), summed with weights. Zero on degree <= 1.
DifferentialForm contract(const PolyBiVector& x, const DifferentialForm& a);

// Exterior derivative; parameters are constants (their differentials never
// appear). Coefficients may only depend on variables whose differential is a
// generator of the chart.
DifferentialForm ext_d(const DifferentialForm& a);

} // namespace mage
