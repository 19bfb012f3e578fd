#include "inqmc/formula.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>
#include <utility>

namespace inqmc {

struct Formula::Node {
    Op op;
    std::size_t atom = 0;
    Formula lhs;
    Formula rhs;
};

Formula::Formula() : Formula(bottom()) {}

Formula Formula::bottom()
{
    // Shared terminal; children of leaves stay null handles and are never read.
    static const std::shared_ptr<const Node> node =
        std::make_shared<const Node>(Node{Op::Bottom, 0, Formula(nullptr), Formula(nullptr)});
    return Formula(node);
}

Formula Formula::atom(std::size_t index)
{
    return Formula(std::make_shared<const Node>(Node{Op::Atom, index, Formula(nullptr), Formula(nullptr)}));
}

Formula Formula::conj(Formula lhs, Formula rhs)
{
    return Formula(std::make_shared<const Node>(Node{Op::And, 0, std::move(lhs), std::move(rhs)}));
}

Formula Formula::ivee(Formula lhs, Formula rhs)
{
    return Formula(std::make_shared<const Node>(Node{Op::IVee, 0, std::move(lhs), std::move(rhs)}));
}

Formula Formula::implies(Formula lhs, Formula rhs)
{
    return Formula(std::make_shared<const Node>(Node{Op::Implies, 0, std::move(lhs), std::move(rhs)}));
}

Formula Formula::box(Formula operand)
{
    return Formula(std::make_shared<const Node>(Node{Op::Box, 0, std::move(operand), Formula(nullptr)}));
}

Formula Formula::wbox(Formula operand)
{
    return Formula(std::make_shared<const Node>(Node{Op::WBox, 0, std::move(operand), Formula(nullptr)}));
}

Formula Formula::negation(Formula operand)
{
    return implies(std::move(operand), bottom());
}

Formula Formula::classical_or(Formula lhs, Formula rhs)
{
    return negation(conj(negation(std::move(lhs)), negation(std::move(rhs))));
}

Formula Formula::question(Formula operand)
{
    Formula neg = negation(operand);
    return ivee(std::move(operand), std::move(neg));
}

Op Formula::op() const noexcept { return node_->op; }
std::size_t Formula::atom_index() const noexcept { return node_->atom; }
const Formula& Formula::lhs() const noexcept { return node_->lhs; }
const Formula& Formula::rhs() const noexcept { return node_->rhs; }

bool Formula::is_binary() const noexcept
{
    switch (op()) {
    case Op::And:
    case Op::IVee:
    case Op::Implies: return true;
    default: return false;
    }
}

bool operator==(const Formula& a, const Formula& b)
{
    if (a.node_ == b.node_) return true;
    if (!a.node_ || !b.node_) return false;
    if (a.op() != b.op()) return false;
    switch (a.op()) {
    case Op::Bottom: return true;
    case Op::Atom: return a.atom_index() == b.atom_index();
    case Op::Box:
    case Op::WBox: return a.operand() == b.operand();
    default: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    }
}

namespace {

const char* infix_token(Op op)
{
    switch (op) {
    case Op::And: return " & ";
    case Op::IVee: return " ior ";
    case Op::Implies: return " -> ";
    default: return "";
    }
}

void render_into(const Formula& f, std::string& out)
{
    switch (f.op()) {
    case Op::Bottom: out += "bot"; return;
    case Op::Atom:
        out += 'p';
        out += std::to_string(f.atom_index());
        return;
    case Op::Box:
        out += "box ";
        render_into(f.operand(), out);
        return;
    case Op::WBox:
        out += "wbox ";
        render_into(f.operand(), out);
        return;
    default:
        out += '(';
        render_into(f.lhs(), out);
        out += infix_token(f.op());
        render_into(f.rhs(), out);
        out += ')';
        return;
    }
}

std::size_t atom_cost(std::size_t index)
{
    // ceil(log2(i + 2)) == bit_width(i + 1)
    return 1 + static_cast<std::size_t>(std::bit_width(index + 1));
}

// Tree measures memoized on node identity, so shared subterms are
// charged per occurrence without re-walking them.
template <typename Leaf>
std::size_t tree_measure(const Formula& f, Leaf&& leaf, std::unordered_map<const void*, std::size_t>& memo)
{
    if (auto it = memo.find(f.identity()); it != memo.end()) return it->second;
    std::size_t value = 0;
    switch (f.op()) {
    case Op::Bottom:
    case Op::Atom: value = leaf(f); break;
    case Op::Box:
    case Op::WBox: value = 1 + tree_measure(f.operand(), leaf, memo); break;
    default: value = 1 + tree_measure(f.lhs(), leaf, memo) + tree_measure(f.rhs(), leaf, memo); break;
    }
    memo.emplace(f.identity(), value);
    return value;
}

} // namespace

std::string render_formula(const Formula& f)
{
    std::string out;
    render_into(f, out);
    return out;
}

std::size_t formula_size(const Formula& f)
{
    std::unordered_map<const void*, std::size_t> memo;
    return tree_measure(
        f, [](const Formula& leaf) { return leaf.op() == Op::Atom ? atom_cost(leaf.atom_index()) : std::size_t{1}; },
        memo);
}

std::size_t node_count(const Formula& f)
{
    std::unordered_map<const void*, std::size_t> memo;
    return tree_measure(f, [](const Formula&) { return std::size_t{1}; }, memo);
}

long long max_atom_index(const Formula& f)
{
    std::unordered_map<const void*, long long> seen;
    auto walk = [&seen](auto&& self, const Formula& g) -> long long {
        if (auto it = seen.find(g.identity()); it != seen.end()) return it->second;
        long long value = -1;
        switch (g.op()) {
        case Op::Bottom: break;
        case Op::Atom: value = static_cast<long long>(g.atom_index()); break;
        case Op::Box:
        case Op::WBox: value = self(self, g.operand()); break;
        default: value = std::max(self(self, g.lhs()), self(self, g.rhs())); break;
        }
        seen.emplace(g.identity(), value);
        return value;
    };
    return walk(walk, f);
}

bool uses_modalities(const Formula& f)
{
    std::unordered_map<const void*, bool> seen;
    auto walk = [&seen](auto&& self, const Formula& g) -> bool {
        if (auto it = seen.find(g.identity()); it != seen.end()) return it->second;
        bool value = false;
        switch (g.op()) {
        case Op::Bottom:
        case Op::Atom: break;
        case Op::Box:
        case Op::WBox: value = true; break;
        default: value = self(self, g.lhs()) || self(self, g.rhs()); break;
        }
        seen.emplace(g.identity(), value);
        return value;
    };
    return walk(walk, f);
}

} // namespace inqmc
