#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

namespace inqmc {

enum class Op : unsigned char {
    Bottom,
    Atom,
    And,
    IVee,    // inquisitive disjunction
    Implies,
    Box,
    WBox,    // window modality
};

/// Immutable formula of inquisitive modal logic.
///
/// A Formula is a cheap handle onto a shared node; copies share structure
/// and subterms may be shared between different formulas. Equality is
/// structural.
class Formula {
public:
    /// A default-constructed formula is `bot`.
    Formula();

    static Formula bottom();
    static Formula atom(std::size_t index);
    static Formula conj(Formula lhs, Formula rhs);
    static Formula ivee(Formula lhs, Formula rhs);
    static Formula implies(Formula lhs, Formula rhs);
    static Formula box(Formula operand);
    static Formula wbox(Formula operand);

    // Derived forms, expanded on construction.
    static Formula negation(Formula operand);               // f -> bot
    static Formula classical_or(Formula lhs, Formula rhs);  // not(not a & not b)
    static Formula question(Formula operand);               // f ior not f

    Op op() const noexcept;
    /// Only meaningful for Op::Atom.
    std::size_t atom_index() const noexcept;
    /// Left child of a binary node, or the operand of a modality.
    const Formula& lhs() const noexcept;
    const Formula& rhs() const noexcept;
    const Formula& operand() const noexcept { return lhs(); }

    bool is_binary() const noexcept;
    bool is_modal() const noexcept { return op() == Op::Box || op() == Op::WBox; }

    /// Address of the shared node; equal for copies of the same handle.
    const void* identity() const noexcept { return node_.get(); }

    friend bool operator==(const Formula& a, const Formula& b);

private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Fully parenthesized rendering in the concrete grammar, e.g. "(p0 ior p1)".
std::string render_formula(const Formula& f);

/// Parses the concrete formula grammar. Throws ParseError.
Formula parse_formula(std::string_view text);

/// Binary-length size measure: connectives and `bot` cost 1,
/// atom p_i costs 1 + ceil(log2(i + 2)).
std::size_t formula_size(const Formula& f);

/// Number of AST nodes, counting shared subterms once per occurrence.
std::size_t node_count(const Formula& f);

/// Largest atom index occurring in f, or -1 if there are none.
long long max_atom_index(const Formula& f);

bool uses_modalities(const Formula& f);

} // namespace inqmc
