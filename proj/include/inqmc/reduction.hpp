#pragma once

#include "inqmc/formula.hpp"
#include "inqmc/prop.hpp"
#include "inqmc/qbf.hpp"
#include "inqmc/switching.hpp"

#include <cstddef>

namespace inqmc {

enum class Polarity { Positive, Negative };

/// Positive / negative translation of an NNF formula into an InqB formula
/// over the atoms of S_l: x_i becomes q_i -> p_i (positive) or
/// q_i -> not p_i (negative); conjunction and disjunction swap between
/// `&` and `ior` under negative polarity.
Formula translate_prop(const PropFormula& matrix, Polarity polarity, std::size_t l);

/// Translation of the suffix Q_k x_k ... Q_{l-1} x_{l-1} . matrix of q,
/// with l = q.num_vars(). k == l yields the propositional translation.
/// Throws ReductionError if k > l or the prefix order is wrong.
Formula translate_qbf(const Qbf& q, std::size_t k, Polarity polarity);

struct ReductionInstance {
    SwitchingModel model;
    InfoState state;   // W_l
    Formula formula;   // positive translation of the whole QBF
    std::size_t l = 0;
    std::size_t matrix_size = 0;      // prop_size of the matrix
    std::size_t translated_size = 0;  // formula_size of the formula
};

/// Builds (S_l, W_l, theta^P). The QBF is true iff W_l supports the formula.
/// Throws ReductionError for an empty prefix or a mis-ordered one and
/// ClosureError for free variables.
ReductionInstance reduce_tqbf(const Qbf& q);

/// Upper bound for size_ratio observed over the measured instance families
/// (see tests/acceptance.cpp); the report flags instances above it.
inline constexpr double kDefaultSizeBoundConstant = 16.0;

struct SizeReport {
    std::size_t l = 0;
    std::size_t matrix_size = 0;
    std::size_t translated_size = 0;
    double ratio = 0.0;  // translated / (l^2 log2(l + 2) + matrix)
    double bound_constant = kDefaultSizeBoundConstant;
    bool violation = false;
};

SizeReport size_report(const ReductionInstance& instance, double bound_constant = kDefaultSizeBoundConstant);

} // namespace inqmc
