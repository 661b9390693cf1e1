#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hodgeforge/realization.hpp"
#include "hodgeforge/torus_rep.hpp"

namespace hodgeforge {

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& msg, std::size_t position)
        : std::invalid_argument(msg + " at position " + std::to_string(position)), position_(position) {}
    [[nodiscard]] std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// Grammar:
//   expr    := term ("+" term)*          direct sum
//   term    := factor ("*" factor)*      tensor product, binds tighter
//   factor  := "V(" int ")" | "H(" int "," int ")" | "T(" int ")" | "1"
//            | "sym(" int "," expr ")" | "wedge(" int "," expr ")"
//            | "dual(" expr ")" | "twist(" int "," expr ")" | "(" expr ")"
// T(m) is the Tate object Q(-m). Integers are decimal with optional sign.
struct Expr {
    enum class Kind { V, H, Tate, Unit, Sum, Product, Sym, Wedge, Dual, Twist };

    Kind kind = Kind::Unit;
    int a = 0;  // V: n; H: p; Tate: m; Sym/Wedge: degree; Twist: m
    int b = 0;  // H: q
    std::shared_ptr<const Expr> left;   // Sum/Product lhs, or the operand
    std::shared_ptr<const Expr> right;  // Sum/Product rhs

    friend bool operator==(const Expr& x, const Expr& y);
};

using ExprPtr = std::shared_ptr<const Expr>;

ExprPtr parse_expression(std::string_view text);

// Canonical text; parse_expression(print(e)) == e.
std::string print(const Expr& e);

// Number of atoms (V, H, T, 1) in the tree.
std::size_t atom_count(const Expr& e);

RepObject evaluate(const Expr& e);

// Matrix realization of an effective expression as a list of components,
// each a summand of some V^{⊗k}. Throws RealizationError for dual or
// negative twists, which have no effective realization.
std::vector<RealizedObject> realize_expression(const Expr& e);

// Hodge numbers of the realized components, grouped by weight.
std::map<int, HodgeNumbers> realized_hodge_by_weight(const std::vector<RealizedObject>& parts, const TorusElement& t);

// The formal object's Hodge numbers, grouped by weight.
std::map<int, HodgeNumbers> formal_hodge_by_weight(const RepObject& a);

}  // namespace hodgeforge
