#include "inqmc/reduction.hpp"

#include "inqmc/error.hpp"

#include <cmath>

namespace inqmc {

Formula translate_prop(const PropFormula& z, Polarity polarity, std::size_t l)
{
    const bool positive = polarity == Polarity::Positive;
    switch (z.kind()) {
    case PropFormula::Kind::Var:
    case PropFormula::Kind::NegVar: {
        const std::size_t i = z.var_index();
        if (i >= l) {
            throw ReductionError("variable x" + std::to_string(i) + " has no switching pair in S_" + std::to_string(l));
        }
        // x_i^p and (~x_i)^n assert p_i; the other two deny it.
        const bool asserts_p = (z.kind() == PropFormula::Kind::Var) == positive;
        Formula p = Formula::atom(SwitchingModel::p_atom(i));
        return Formula::implies(Formula::atom(l + i), asserts_p ? std::move(p) : Formula::negation(std::move(p)));
    }
    case PropFormula::Kind::And: {
        Formula lhs = translate_prop(z.lhs(), polarity, l);
        Formula rhs = translate_prop(z.rhs(), polarity, l);
        return positive ? Formula::conj(std::move(lhs), std::move(rhs)) : Formula::ivee(std::move(lhs), std::move(rhs));
    }
    case PropFormula::Kind::Or: {
        Formula lhs = translate_prop(z.lhs(), polarity, l);
        Formula rhs = translate_prop(z.rhs(), polarity, l);
        return positive ? Formula::ivee(std::move(lhs), std::move(rhs)) : Formula::conj(std::move(lhs), std::move(rhs));
    }
    }
    return Formula::bottom();
}

Formula translate_qbf(const Qbf& q, std::size_t k, Polarity polarity)
{
    validate_qbf(q);
    const std::size_t l = q.num_vars();
    if (k > l) {
        throw ReductionError("suffix index " + std::to_string(k) + " exceeds the " + std::to_string(l)
                             + " quantified variables");
    }
    Formula positive = translate_prop(q.matrix, Polarity::Positive, l);
    Formula negative = translate_prop(q.matrix, Polarity::Negative, l);
    // Build theta_j^P and theta_j^N from j = l down to j = k.
    for (std::size_t j = l; j-- > k;) {
        // The step binding x_j is evaluated at j-switchings, where S_j is the
        // gadget that fails exactly at the whole state.
        Formula d = formula_D(j, l);
        Formula s = formula_S(j, l);
        if (q.prefix[j].quantifier == Quantifier::ForAll) {
            Formula next_p = Formula::implies(d, positive);
            Formula next_n = Formula::implies(next_p, s);
            positive = std::move(next_p);
            negative = std::move(next_n);
        } else {
            Formula next_n = Formula::implies(d, negative);
            Formula next_p = Formula::implies(next_n, s);
            positive = std::move(next_p);
            negative = std::move(next_n);
        }
    }
    return polarity == Polarity::Positive ? positive : negative;
}

ReductionInstance reduce_tqbf(const Qbf& q)
{
    validate_qbf(q);
    if (q.num_vars() == 0) throw ReductionError("the QBF has no quantifiers; a switching model needs l >= 1");
    ReductionInstance inst{build_switching_model(q.num_vars()), InfoState(), Formula(), q.num_vars(), 0, 0};
    inst.state = inst.model.all_worlds();
    inst.formula = translate_qbf(q, 0, Polarity::Positive);
    inst.matrix_size = prop_size(q.matrix);
    inst.translated_size = formula_size(inst.formula);
    return inst;
}

SizeReport size_report(const ReductionInstance& instance, double bound_constant)
{
    SizeReport report;
    report.l = instance.l;
    report.matrix_size = instance.matrix_size;
    report.translated_size = instance.translated_size;
    const double l = static_cast<double>(instance.l);
    const double denominator = l * l * std::log2(l + 2.0) + static_cast<double>(instance.matrix_size);
    report.ratio = denominator > 0.0 ? static_cast<double>(instance.translated_size) / denominator : 0.0;
    report.bound_constant = bound_constant;
    report.violation = report.ratio > bound_constant;
    return report;
}

} // namespace inqmc
