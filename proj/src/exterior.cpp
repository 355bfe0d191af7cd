#include "mage/exterior.hpp"

namespace mage {

std::string Generator::text() const {
    switch (kind) {
    case Kind::DQ: return "dq" + std::to_string(index);
    case Kind::DU: return "du";
    case Kind::DP: return "dp" + std::to_string(index);
    case Kind::DE: return "de";
    case Kind::DPHI: return "dphi";
    }
    return "?";
}

GeneratorSet::GeneratorSet(int n, bool du, bool de, bool dphi)
    : n_(n), du_(du), de_(de), dphi_(dphi) {
    if (n < 2 || n > 6) throw DimensionError("base dimension must lie in 2..6");
}

GeneratorSet GeneratorSet::jet_chart(int n) { return GeneratorSet(n, true, false, false); }
GeneratorSet GeneratorSet::jet_chart_extended(int n) { return GeneratorSet(n, true, true, false); }
GeneratorSet GeneratorSet::covariant_phase(int n) { return GeneratorSet(n, false, true, true); }

std::size_t GeneratorSet::size() const {
    return static_cast<std::size_t>(2 * n_) + (du_ ? 1 : 0) + (de_ ? 1 : 0) + (dphi_ ? 1 : 0);
}

int GeneratorSet::slot(const Generator& g) const {
    switch (g.kind) {
    case Generator::Kind::DQ:
        if (g.index < 1 || g.index > n_) throw DimensionError("dq index out of range");
        return g.index - 1;
    case Generator::Kind::DU:
        if (!du_) throw GeneratorSetMismatch();
        return n_;
    case Generator::Kind::DP:
        if (g.index < 1 || g.index > n_) throw DimensionError("dp index out of range");
        return n_ + g.index;
    case Generator::Kind::DE:
        if (!de_) throw GeneratorSetMismatch();
        return 2 * n_ + 1;
    case Generator::Kind::DPHI:
        if (!dphi_) throw GeneratorSetMismatch();
        return 2 * n_ + 2;
    }
    throw GeneratorSetMismatch();
}

Generator GeneratorSet::generator_at(int s) const {
    if (s >= 0 && s < n_) return Generator::dq(s + 1);
    if (s == n_ && du_) return Generator::du();
    if (s > n_ && s <= 2 * n_) return Generator::dp(s - n_);
    if (s == 2 * n_ + 1 && de_) return Generator::de();
    if (s == 2 * n_ + 2 && dphi_) return Generator::dphi();
    throw GeneratorSetMismatch();
}

std::vector<int> GeneratorSet::slots() const {
    std::vector<int> r;
    for (int mu = 1; mu <= n_; ++mu) r.push_back(mu - 1);
    if (du_) r.push_back(n_);
    for (int mu = 1; mu <= n_; ++mu) r.push_back(n_ + mu);
    if (de_) r.push_back(2 * n_ + 1);
    if (dphi_) r.push_back(2 * n_ + 2);
    return r;
}

VariableId GeneratorSet::variable_at(int s) const {
    const Generator g = generator_at(s);
    switch (g.kind) {
    case Generator::Kind::DQ: return VariableId::coord(g.index);
    case Generator::Kind::DU: return VariableId::fiber();
    case Generator::Kind::DP: return VariableId::momentum(g.index);
    case Generator::Kind::DE: return VariableId::extension();
    case Generator::Kind::DPHI: return VariableId::field_value();
    }
    throw GeneratorSetMismatch();
}

int GeneratorSet::slot_of_variable(const VariableId& v) const {
    switch (v.kind) {
    case VarKind::BaseCoord: return (v.index >= 1 && v.index <= n_) ? v.index - 1 : -1;
    case VarKind::Fiber: return du_ ? n_ : -1;
    case VarKind::Momentum: return (v.index >= 1 && v.index <= n_) ? n_ + v.index : -1;
    case VarKind::Extension: return de_ ? 2 * n_ + 1 : -1;
    case VarKind::FieldValue: return dphi_ ? 2 * n_ + 2 : -1;
    case VarKind::Parameter: return -1;
    }
    return -1;
}

std::vector<int> ExtMonomial::factors() const {
    std::vector<int> r;
    std::uint32_t b = bits;
    while (b) {
        r.push_back(std::countr_zero(b));
        b &= b - 1;
    }
    return r;
}

bool ExtMonomialLex::operator()(const ExtMonomial& a, const ExtMonomial& b) const {
    std::uint32_t x = a.bits, y = b.bits;
    while (x && y) {
        const int lx = std::countr_zero(x), ly = std::countr_zero(y);
        if (lx != ly) return lx < ly;
        x &= x - 1;
        y &= y - 1;
    }
    return !x && y; // shorter sequence first
}

int append_sign(std::uint32_t mono, int slot) {
    const std::uint32_t bit = std::uint32_t{1} << slot;
    if (mono & bit) return 0;
    return (std::popcount(mono >> (slot + 1)) % 2) ? -1 : 1;
}

int merge_sign(std::uint32_t a, std::uint32_t b) {
    if (a & b) return 0;
    int inversions = 0;
    std::uint32_t rest = b;
    while (rest) {
        const int s = std::countr_zero(rest);
        inversions += std::popcount(a >> (s + 1));
        rest &= rest - 1;
    }
    return (inversions % 2) ? -1 : 1;
}

DifferentialForm::DifferentialForm(GeneratorSet gens, int degree)
    : gens_(std::move(gens)), degree_(degree) {
    if (degree < 0 || degree > static_cast<int>(gens_.size()))
        throw DegreeError("form degree out of range for the generator set");
}

DifferentialForm DifferentialForm::scalar(const GeneratorSet& gens, Polynomial value) {
    DifferentialForm f(gens, 0);
    f.add_term(ExtMonomial{}, value);
    return f;
}

DifferentialForm DifferentialForm::product(const GeneratorSet& gens,
                                           const std::vector<Generator>& gs, Polynomial coeff) {
    DifferentialForm f(gens, static_cast<int>(gs.size()));
    std::uint32_t mono = 0;
    int sign = 1;
    for (const Generator& g : gs) {
        const int s = gens.slot(g);
        const int a = append_sign(mono, s);
        if (a == 0) return f; // repeated generator: zero form
        sign *= a;
        mono |= std::uint32_t{1} << s;
    }
    f.add_term(ExtMonomial{mono}, sign < 0 ? -coeff : coeff);
    return f;
}

void DifferentialForm::add_term(ExtMonomial m, const Polynomial& coeff) {
    if (m.degree() != degree_) throw DegreeError("monomial degree does not match form degree");
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

const Polynomial& DifferentialForm::coefficient(const ExtMonomial& m) const {
    static const Polynomial kZero;
    auto it = terms_.find(m);
    return it == terms_.end() ? kZero : it->second;
}

DifferentialForm DifferentialForm::operator+(const DifferentialForm& o) const {
    if (!(gens_ == o.gens_)) throw GeneratorSetMismatch();
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (degree_ != o.degree_) throw DegreeError("cannot add forms of different degree");
    DifferentialForm r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

DifferentialForm DifferentialForm::operator-() const {
    DifferentialForm r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

DifferentialForm DifferentialForm::operator-(const DifferentialForm& o) const {
    return *this + (-o);
}

DifferentialForm DifferentialForm::scaled(const Polynomial& c) const {
    DifferentialForm r(gens_, degree_);
    for (const auto& [m, coeff] : terms_) r.add_term(m, coeff * c);
    return r;
}

DifferentialForm DifferentialForm::scaled(const Rational& c) const {
    DifferentialForm r(gens_, degree_);
    if (c == 0) return r;
    for (const auto& [m, coeff] : terms_) r.add_term(m, coeff * c);
    return r;
}

bool operator==(const DifferentialForm& a, const DifferentialForm& b) {
    if (a.is_zero() && b.is_zero()) return true;
    return a.gens_ == b.gens_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

PolyVectorField PolyVectorField::direction(const GeneratorSet& g, const Generator& gen) {
    PolyVectorField v{g, {}};
    v.components.emplace(g.slot(gen), Polynomial::constant(Rational(1)));
    return v;
}

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b) {
    if (!(a.gens() == b.gens())) throw GeneratorSetMismatch();
    DifferentialForm r(a.gens(), a.degree() + b.degree());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            const int s = merge_sign(ma.bits, mb.bits);
            if (s == 0) continue;
            Polynomial c = ca * cb;
            r.add_term(ExtMonomial{ma.bits | mb.bits}, s < 0 ? -c : c);
        }
    return r;
}

DifferentialForm contract_direction(int slot, const DifferentialForm& a) {
    DifferentialForm r(a.gens(), a.degree() - 1);
    const std::uint32_t bit = std::uint32_t{1} << slot;
    for (const auto& [m, c] : a.terms()) {
        if (!(m.bits & bit)) continue;
        const int below = std::popcount(m.bits & (bit - 1));
        r.add_term(ExtMonomial{m.bits & ~bit}, (below % 2) ? -c : c);
    }
    return r;
}

DifferentialForm contract(const PolyVectorField& v, const DifferentialForm& a) {
    if (!(v.gens == a.gens())) throw GeneratorSetMismatch();
    if (a.degree() == 0) throw DegreeZero();
    DifferentialForm r(a.gens(), a.degree() - 1);
    for (const auto& [slot, w] : v.components) {
        if (w.is_zero()) continue;
        r = r + contract_direction(slot, a).scaled(w);
    }
    return r;
}

DifferentialForm contract(const PolyBiVector& x, const DifferentialForm& a) {
    if (!(x.gens == a.gens())) throw GeneratorSetMismatch();
    if (a.degree() <= 1) return DifferentialForm::zero(a.gens(), 0);
    DifferentialForm r(a.gens(), a.degree() - 2);
    for (const auto& pair : x.pairs) {
        if (pair.weight.is_zero()) continue;
        r = r + contract_direction(pair.b, contract_direction(pair.a, a)).scaled(pair.weight);
    }
    return r;
}

DifferentialForm ext_d(const DifferentialForm& a) {
    const GeneratorSet& g = a.gens();
    DifferentialForm r(g, a.degree() + 1);
    for (const auto& [m, c] : a.terms()) {
        c.for_each_variable([&](const VariableId& v) {
            if (v.is_parameter()) return;
            if (g.slot_of_variable(v) < 0)
                throw Error("coefficient depends on '" + v.text() +
                            "', which has no generator in this chart");
        });
        for (int s : g.slots()) {
            const std::uint32_t bit = std::uint32_t{1} << s;
            if (m.bits & bit) continue;
            const Polynomial dc = c.derivative(g.variable_at(s));
            if (dc.is_zero()) continue;
            // dv ^ m: sorting dv inward past the generators below slot s.
            const int below = std::popcount(m.bits & (bit - 1));
            r.add_term(ExtMonomial{m.bits | bit}, (below % 2) ? -dc : dc);
        }
    }
    return r;
}

} // namespace mage
