#include "inqmc/switching.hpp"

#include "inqmc/error.hpp"

#include <optional>

namespace inqmc {

SwitchingModel build_switching_model(std::size_t l)
{
    if (l == 0) throw ReductionError("switching model needs l >= 1");
    if (2 * l > kMaxWorlds) {
        throw ReductionError("switching model S_" + std::to_string(l) + " would need " + std::to_string(2 * l)
                             + " worlds; at most " + std::to_string(kMaxWorlds) + " are supported");
    }
    SwitchingModel sm;
    sm.l = l;
    sm.model.worlds = 2 * l;
    sm.model.atoms = 2 * l;
    sm.model.valuation.assign(2 * l, InfoState(2 * l));
    for (std::size_t i = 0; i < l; ++i) {
        sm.model.valuation[SwitchingModel::p_atom(i)].insert(SwitchingModel::plus_world(i));
        sm.model.valuation[sm.q_atom(i)].insert(SwitchingModel::plus_world(i)).insert(SwitchingModel::minus_world(i));
    }
    return sm;
}

InfoState switching_from_valuation(const BoolValuation& v, std::size_t l)
{
    if (v.size() > l) {
        throw ReductionError("valuation over " + std::to_string(v.size()) + " variables does not fit S_"
                             + std::to_string(l));
    }
    InfoState s = InfoState::full(2 * l);
    for (std::size_t i = 0; i < v.size(); ++i) {
        s.erase(v[i] ? SwitchingModel::minus_world(i) : SwitchingModel::plus_world(i));
    }
    return s;
}

namespace {

// Valuation encoded by s when s is a k-switching of S_l.
std::optional<BoolValuation> read_switching(const InfoState& s, std::size_t k, std::size_t l)
{
    if (k > l || s.width() != 2 * l) return std::nullopt;
    BoolValuation v;
    v.values.reserve(k);
    for (std::size_t i = 0; i < l; ++i) {
        const bool plus = s.contains(SwitchingModel::plus_world(i));
        const bool minus = s.contains(SwitchingModel::minus_world(i));
        if (i < k) {
            if (plus == minus) return std::nullopt;
            v.values.push_back(plus);
        } else if (!(plus && minus)) {
            return std::nullopt;
        }
    }
    return v;
}

} // namespace

BoolValuation valuation_from_switching(const InfoState& s, std::size_t k, std::size_t l)
{
    if (auto v = read_switching(s, k, l)) return *v;
    throw ReductionError("state " + s.to_string() + " is not a " + std::to_string(k) + "-switching of S_"
                         + std::to_string(l));
}

bool is_k_switching(const InfoState& s, std::size_t k, std::size_t l)
{
    return read_switching(s, k, l).has_value();
}

std::vector<InfoState> all_k_switchings(std::size_t k, std::size_t l)
{
    if (k > l) throw ReductionError("k-switchings need k <= l");
    std::vector<InfoState> out;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << k); ++code) {
        BoolValuation v;
        for (std::size_t i = 0; i < k; ++i) v.values.push_back((code >> i) & 1U);
        out.push_back(switching_from_valuation(v, l));
    }
    return out;
}

Formula formula_C(std::size_t k, Sign sign, std::size_t l)
{
    if (k >= l) throw ReductionError("C_k needs k < l");
    Formula p = Formula::atom(SwitchingModel::p_atom(k));
    Formula q = Formula::atom(l + k);
    return Formula::conj(std::move(q), sign == Sign::Plus ? std::move(p) : Formula::negation(std::move(p)));
}

Formula formula_D(std::size_t k, std::size_t l)
{
    if (k >= l) throw ReductionError("D_k needs k < l");
    return Formula::implies(Formula::atom(l + k), Formula::question(Formula::atom(SwitchingModel::p_atom(k))));
}

Formula formula_S(std::size_t k, std::size_t l)
{
    if (l == 0 || k > l) throw ReductionError("S_k needs 0 <= k <= l and l >= 1");
    // Left-nested inquisitive disjunction of the per-pair blocks: the
    // conjunctive blocks for i < k followed by the disjunctive ones for i >= k.
    std::optional<Formula> acc;
    for (std::size_t i = 0; i < l; ++i) {
        Formula not_plus = Formula::negation(formula_C(i, Sign::Plus, l));
        Formula not_minus = Formula::negation(formula_C(i, Sign::Minus, l));
        Formula block = i < k ? Formula::conj(std::move(not_plus), std::move(not_minus))
                              : Formula::ivee(std::move(not_plus), std::move(not_minus));
        acc = acc ? Formula::ivee(std::move(*acc), std::move(block)) : std::move(block);
    }
    return *acc;
}

} // namespace inqmc
