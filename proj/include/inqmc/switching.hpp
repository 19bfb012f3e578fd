#pragma once

#include "inqmc/formula.hpp"
#include "inqmc/model.hpp"
#include "inqmc/state.hpp"

#include <cstddef>
#include <vector>

namespace inqmc {

/// Total Boolean assignment to x_0 .. x_{k-1}; k is `values.size()`.
struct BoolValuation {
    std::vector<bool> values;

    std::size_t size() const noexcept { return values.size(); }
    bool operator[](std::size_t i) const { return values.at(i); }

    friend bool operator==(const BoolValuation&, const BoolValuation&) = default;
};

/// The 2l-world model S_l.
///
/// Worlds are ordered w_0^+, w_0^-, w_1^+, w_1^-, ...; atom p_i has index i
/// and q_i has index l + i. V(p_i) = {w_i^+} and V(q_i) = {w_i^+, w_i^-}.
struct SwitchingModel {
    std::size_t l = 0;
    InformationModel model;

    static constexpr std::size_t plus_world(std::size_t i) noexcept { return 2 * i; }
    static constexpr std::size_t minus_world(std::size_t i) noexcept { return 2 * i + 1; }
    static constexpr std::size_t p_atom(std::size_t i) noexcept { return i; }
    std::size_t q_atom(std::size_t i) const noexcept { return l + i; }

    InfoState all_worlds() const { return model.full_state(); }
};

enum class Sign { Plus, Minus };

/// Throws ReductionError when l == 0 or 2l exceeds kMaxWorlds.
SwitchingModel build_switching_model(std::size_t l);

/// The k-switching s_sigma for k = v.size(): one world of each pair below k
/// (w_i^+ when x_i is true), both worlds of every pair from k on.
InfoState switching_from_valuation(const BoolValuation& v, std::size_t l);

/// Inverse of switching_from_valuation. Throws ReductionError if s is not a
/// k-switching of S_l.
BoolValuation valuation_from_switching(const InfoState& s, std::size_t k, std::size_t l);

bool is_k_switching(const InfoState& s, std::size_t k, std::size_t l);

/// Every k-switching of S_l, in the order of valuations read as binary
/// numbers with x_0 as the least significant digit.
std::vector<InfoState> all_k_switchings(std::size_t k, std::size_t l);

// Gadget formulas over S_l. All of them require k < l (k <= l for S).
Formula formula_C(std::size_t k, Sign sign, std::size_t l);  // q_k & p_k  /  q_k & not p_k
Formula formula_D(std::size_t k, std::size_t l);              // q_k -> ?p_k
Formula formula_S(std::size_t k, std::size_t l);

} // namespace inqmc
