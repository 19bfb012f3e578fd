#pragma once

#include "inqmc/prop.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace inqmc {

enum class Quantifier { ForAll, Exists };

struct QuantifiedVar {
    Quantifier quantifier;
    std::size_t var;

    friend bool operator==(const QuantifiedVar&, const QuantifiedVar&) = default;
};

/// Prenex QBF Q_0 x_0 ... Q_{l-1} x_{l-1} . matrix, matrix in NNF.
struct Qbf {
    std::vector<QuantifiedVar> prefix;
    PropFormula matrix = PropFormula::var(0);

    std::size_t num_vars() const noexcept { return prefix.size(); }

    friend bool operator==(const Qbf&, const Qbf&) = default;
};

/// Throws ReductionError if the prefix does not bind x_0 .. x_{l-1} in
/// order, ClosureError if the matrix has an unbound variable.
void validate_qbf(const Qbf& q);

/// Parses "forall x0 exists x1 : <matrix>" with `~` > `&` > `|`.
///
/// Strict mode requires the prefix to bind x0, x1, ... in order. With
/// `rename_variables`, any identifiers may be used and are renamed to
/// x0, x1, ... in prefix order. Throws ParseError or ClosureError.
Qbf parse_qbf(std::string_view text, bool rename_variables = false);

std::string render_qbf(const Qbf& q);

/// Truth value by recursive expansion along the prefix, short-circuiting.
bool eval_qbf(const Qbf& q);

/// Deterministic random closed QBF over l variables with at most
/// `matrix_nodes` matrix nodes (negated variables count as two).
Qbf random_qbf(std::uint64_t seed, std::size_t l, std::size_t matrix_nodes);

} // namespace inqmc
