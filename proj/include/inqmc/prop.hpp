#pragma once

#include "inqmc/switching.hpp"

#include <cstddef>
#include <memory>
#include <string>

namespace inqmc {

/// Propositional formula over x_0, x_1, ... with negation anywhere.
class BoolExpr {
public:
    enum class Kind : unsigned char { Var, Not, And, Or };

    static BoolExpr var(std::size_t index);
    static BoolExpr negation(BoolExpr operand);
    static BoolExpr conj(BoolExpr lhs, BoolExpr rhs);
    static BoolExpr disj(BoolExpr lhs, BoolExpr rhs);

    Kind kind() const noexcept;
    std::size_t var_index() const noexcept;
    const BoolExpr& lhs() const noexcept;  // also the operand of Not
    const BoolExpr& rhs() const noexcept;

    friend bool operator==(const BoolExpr& a, const BoolExpr& b);

private:
    struct Node;
    explicit BoolExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

/// Propositional formula in negation normal form: negation only occurs
/// directly on variables, which the constructors enforce.
class PropFormula {
public:
    enum class Kind : unsigned char { Var, NegVar, And, Or };

    static PropFormula var(std::size_t index);
    static PropFormula neg_var(std::size_t index);
    static PropFormula conj(PropFormula lhs, PropFormula rhs);
    static PropFormula disj(PropFormula lhs, PropFormula rhs);

    Kind kind() const noexcept;
    std::size_t var_index() const noexcept;
    const PropFormula& lhs() const noexcept;
    const PropFormula& rhs() const noexcept;
    bool is_literal() const noexcept { return kind() == Kind::Var || kind() == Kind::NegVar; }

    friend bool operator==(const PropFormula& a, const PropFormula& b);

private:
    struct Node;
    explicit PropFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

/// Pushes negations to the variables (De Morgan, double negation).
PropFormula to_nnf(const BoolExpr& f);

/// Classical truth value. Throws ReductionError if a variable is outside
/// the valuation's domain.
bool eval_prop(const PropFormula& f, const BoolValuation& v);
bool eval_bool_expr(const BoolExpr& f, const BoolValuation& v);

/// Size measure matching formula_size: x_i costs 1 + ceil(log2(i + 2)),
/// a negated variable one more, each binary connective 1.
std::size_t prop_size(const PropFormula& f);

/// Node count with a negated variable counted as two nodes.
std::size_t prop_node_count(const PropFormula& f);
std::size_t bool_expr_node_count(const BoolExpr& f);

/// Largest variable index, or -1 if none (never for a well-formed formula).
long long max_var_index(const PropFormula& f);

/// Renders with `~`, `&`, `|` and full parenthesization of binary nodes.
std::string render_prop(const PropFormula& f);

} // namespace inqmc
