#include "inqmc/prop.hpp"

#include "inqmc/error.hpp"

#include <algorithm>
#include <bit>

namespace inqmc {

struct BoolExpr::Node {
    Kind kind;
    std::size_t var = 0;
    BoolExpr lhs;
    BoolExpr rhs;
};

BoolExpr BoolExpr::var(std::size_t index)
{
    return BoolExpr(std::make_shared<const Node>(Node{Kind::Var, index, BoolExpr(nullptr), BoolExpr(nullptr)}));
}

BoolExpr BoolExpr::negation(BoolExpr operand)
{
    return BoolExpr(std::make_shared<const Node>(Node{Kind::Not, 0, std::move(operand), BoolExpr(nullptr)}));
}

BoolExpr BoolExpr::conj(BoolExpr lhs, BoolExpr rhs)
{
    return BoolExpr(std::make_shared<const Node>(Node{Kind::And, 0, std::move(lhs), std::move(rhs)}));
}

BoolExpr BoolExpr::disj(BoolExpr lhs, BoolExpr rhs)
{
    return BoolExpr(std::make_shared<const Node>(Node{Kind::Or, 0, std::move(lhs), std::move(rhs)}));
}

BoolExpr::Kind BoolExpr::kind() const noexcept { return node_->kind; }
std::size_t BoolExpr::var_index() const noexcept { return node_->var; }
const BoolExpr& BoolExpr::lhs() const noexcept { return node_->lhs; }
const BoolExpr& BoolExpr::rhs() const noexcept { return node_->rhs; }

bool operator==(const BoolExpr& a, const BoolExpr& b)
{
    if (a.node_ == b.node_) return true;
    if (!a.node_ || !b.node_ || a.kind() != b.kind()) return false;
    switch (a.kind()) {
    case BoolExpr::Kind::Var: return a.var_index() == b.var_index();
    case BoolExpr::Kind::Not: return a.lhs() == b.lhs();
    default: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    }
}

struct PropFormula::Node {
    Kind kind;
    std::size_t var = 0;
    PropFormula lhs;
    PropFormula rhs;
};

PropFormula PropFormula::var(std::size_t index)
{
    return PropFormula(
        std::make_shared<const Node>(Node{Kind::Var, index, PropFormula(nullptr), PropFormula(nullptr)}));
}

PropFormula PropFormula::neg_var(std::size_t index)
{
    return PropFormula(
        std::make_shared<const Node>(Node{Kind::NegVar, index, PropFormula(nullptr), PropFormula(nullptr)}));
}

PropFormula PropFormula::conj(PropFormula lhs, PropFormula rhs)
{
    return PropFormula(std::make_shared<const Node>(Node{Kind::And, 0, std::move(lhs), std::move(rhs)}));
}

PropFormula PropFormula::disj(PropFormula lhs, PropFormula rhs)
{
    return PropFormula(std::make_shared<const Node>(Node{Kind::Or, 0, std::move(lhs), std::move(rhs)}));
}

PropFormula::Kind PropFormula::kind() const noexcept { return node_->kind; }
std::size_t PropFormula::var_index() const noexcept { return node_->var; }
const PropFormula& PropFormula::lhs() const noexcept { return node_->lhs; }
const PropFormula& PropFormula::rhs() const noexcept { return node_->rhs; }

bool operator==(const PropFormula& a, const PropFormula& b)
{
    if (a.node_ == b.node_) return true;
    if (!a.node_ || !b.node_ || a.kind() != b.kind()) return false;
    if (a.is_literal()) return a.var_index() == b.var_index();
    return a.lhs() == b.lhs() && a.rhs() == b.rhs();
}

namespace {

PropFormula nnf(const BoolExpr& f, bool negated)
{
    switch (f.kind()) {
    case BoolExpr::Kind::Var: return negated ? PropFormula::neg_var(f.var_index()) : PropFormula::var(f.var_index());
    case BoolExpr::Kind::Not: return nnf(f.lhs(), !negated);
    case BoolExpr::Kind::And:
        return negated ? PropFormula::disj(nnf(f.lhs(), true), nnf(f.rhs(), true))
                       : PropFormula::conj(nnf(f.lhs(), false), nnf(f.rhs(), false));
    case BoolExpr::Kind::Or:
        return negated ? PropFormula::conj(nnf(f.lhs(), true), nnf(f.rhs(), true))
                       : PropFormula::disj(nnf(f.lhs(), false), nnf(f.rhs(), false));
    }
    return PropFormula::var(0);
}

bool lookup(const BoolValuation& v, std::size_t index)
{
    if (index >= v.size()) {
        throw ReductionError("variable x" + std::to_string(index) + " is outside the valuation domain of size "
                             + std::to_string(v.size()));
    }
    return v.values[index];
}

std::size_t var_cost(std::size_t index) { return 1 + static_cast<std::size_t>(std::bit_width(index + 1)); }

void render_into(const PropFormula& f, std::string& out)
{
    switch (f.kind()) {
    case PropFormula::Kind::Var: out += "x" + std::to_string(f.var_index()); return;
    case PropFormula::Kind::NegVar: out += "~x" + std::to_string(f.var_index()); return;
    default:
        out += '(';
        render_into(f.lhs(), out);
        out += f.kind() == PropFormula::Kind::And ? " & " : " | ";
        render_into(f.rhs(), out);
        out += ')';
        return;
    }
}

} // namespace

PropFormula to_nnf(const BoolExpr& f) { return nnf(f, false); }

bool eval_prop(const PropFormula& f, const BoolValuation& v)
{
    switch (f.kind()) {
    case PropFormula::Kind::Var: return lookup(v, f.var_index());
    case PropFormula::Kind::NegVar: return !lookup(v, f.var_index());
    case PropFormula::Kind::And: return eval_prop(f.lhs(), v) && eval_prop(f.rhs(), v);
    case PropFormula::Kind::Or: return eval_prop(f.lhs(), v) || eval_prop(f.rhs(), v);
    }
    return false;
}

bool eval_bool_expr(const BoolExpr& f, const BoolValuation& v)
{
    switch (f.kind()) {
    case BoolExpr::Kind::Var: return lookup(v, f.var_index());
    case BoolExpr::Kind::Not: return !eval_bool_expr(f.lhs(), v);
    case BoolExpr::Kind::And: return eval_bool_expr(f.lhs(), v) && eval_bool_expr(f.rhs(), v);
    case BoolExpr::Kind::Or: return eval_bool_expr(f.lhs(), v) || eval_bool_expr(f.rhs(), v);
    }
    return false;
}

std::size_t prop_size(const PropFormula& f)
{
    switch (f.kind()) {
    case PropFormula::Kind::Var: return var_cost(f.var_index());
    case PropFormula::Kind::NegVar: return 1 + var_cost(f.var_index());
    default: return 1 + prop_size(f.lhs()) + prop_size(f.rhs());
    }
}

std::size_t prop_node_count(const PropFormula& f)
{
    switch (f.kind()) {
    case PropFormula::Kind::Var: return 1;
    case PropFormula::Kind::NegVar: return 2;
    default: return 1 + prop_node_count(f.lhs()) + prop_node_count(f.rhs());
    }
}

std::size_t bool_expr_node_count(const BoolExpr& f)
{
    switch (f.kind()) {
    case BoolExpr::Kind::Var: return 1;
    case BoolExpr::Kind::Not: return 1 + bool_expr_node_count(f.lhs());
    default: return 1 + bool_expr_node_count(f.lhs()) + bool_expr_node_count(f.rhs());
    }
}

long long max_var_index(const PropFormula& f)
{
    if (f.is_literal()) return static_cast<long long>(f.var_index());
    return std::max(max_var_index(f.lhs()), max_var_index(f.rhs()));
}

std::string render_prop(const PropFormula& f)
{
    std::string out;
    render_into(f, out);
    return out;
}

} // namespace inqmc
