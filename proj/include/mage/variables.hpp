#pragma once

#include <compare>
#include <string>

namespace mage {

// Chart variables of the (possibly extended) first jet chart:
//   q^mu (base coordinates), u (jet fiber), p_mu (momenta),
//   e (trivial line-bundle fiber), phi (field value on the covariant phase
//   space), and named constant parameters such as m or c.
//
// Parameters behave like ordinary variables under partial differentiation and
// evaluation, but the exterior derivative treats them as constants (they have
// no generator 1-form).
enum class VarKind : unsigned char {
    BaseCoord = 0,
    Fiber = 1,
    Momentum = 2,
    Extension = 3,
    FieldValue = 4,
    Parameter = 5,
};

struct VariableId {
    VarKind kind = VarKind::Fiber;
    int index = 0;    // 1-based, BaseCoord/Momentum only
    std::string name; // Parameter only

    static VariableId coord(int mu) { return {VarKind::BaseCoord, mu, {}}; }
    static VariableId fiber() { return {VarKind::Fiber, 0, {}}; }
    static VariableId momentum(int mu) { return {VarKind::Momentum, mu, {}}; }
    static VariableId extension() { return {VarKind::Extension, 0, {}}; }
    static VariableId field_value() { return {VarKind::FieldValue, 0, {}}; }
    static VariableId parameter(std::string n) { return {VarKind::Parameter, 0, std::move(n)}; }

    bool is_parameter() const { return kind == VarKind::Parameter; }

    // Canonical chart order: q1 < ... < qn < u < p1 < ... < pn < e < phi,
    // followed by parameters in name order.
    friend auto operator<=>(const VariableId&, const VariableId&) = default;

    std::string text() const {
        switch (kind) {
        case VarKind::BaseCoord: return "q" + std::to_string(index);
        case VarKind::Fiber: return "u";
        case VarKind::Momentum: return "p" + std::to_string(index);
        case VarKind::Extension: return "e";
        case VarKind::FieldValue: return "phi";
        case VarKind::Parameter: return name;
        }
        return "?";
    }
};

} // namespace mage
