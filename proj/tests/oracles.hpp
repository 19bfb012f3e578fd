// Independent reference implementations used only by the tests.
//
// The support oracle works on std::set worlds and materializes the full
// downward closure of every Σ(w), following the semantic clauses literally.
// It shares no code with the bitmask evaluators in the library.
#pragma once

#include "inqmc/formula.hpp"
#include "inqmc/model.hpp"
#include "inqmc/prop.hpp"
#include "inqmc/qbf.hpp"

#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using WorldSet = std::set<std::size_t>;

inline WorldSet to_set(const inqmc::InfoState& s)
{
    WorldSet out;
    for (std::size_t i = 0; i < s.width(); ++i) {
        if (s.contains(i)) out.insert(i);
    }
    return out;
}

inline std::vector<WorldSet> powerset(const WorldSet& s)
{
    std::vector<WorldSet> out{WorldSet{}};
    for (std::size_t w : s) {
        const std::size_t n = out.size();
        for (std::size_t i = 0; i < n; ++i) {
            WorldSet with = out[i];
            with.insert(w);
            out.push_back(std::move(with));
        }
    }
    return out;
}

/// Σ(w) as the explicit downward closure of its generators.
inline std::set<WorldSet> closed_sigma(const inqmc::InformationModel& m, std::size_t w)
{
    std::set<WorldSet> out;
    for (const auto& gen : (*m.sigma)[w]) {
        for (auto& t : powerset(to_set(gen))) out.insert(std::move(t));
    }
    return out;
}

inline bool support(const inqmc::InformationModel& m, const WorldSet& s, const inqmc::Formula& f)
{
    using inqmc::Op;
    switch (f.op()) {
    case Op::Bottom: return s.empty();
    case Op::Atom:
        for (std::size_t w : s) {
            if (!m.valuation[f.atom_index()].contains(w)) return false;
        }
        return true;
    case Op::And: return support(m, s, f.lhs()) && support(m, s, f.rhs());
    case Op::IVee: return support(m, s, f.lhs()) || support(m, s, f.rhs());
    case Op::Implies:
        for (const auto& t : powerset(s)) {
            if (support(m, t, f.lhs()) && !support(m, t, f.rhs())) return false;
        }
        return true;
    case Op::Box:
        for (std::size_t w : s) {
            WorldSet uni;
            for (const auto& t : closed_sigma(m, w)) uni.insert(t.begin(), t.end());
            if (!support(m, uni, f.operand())) return false;
        }
        return true;
    case Op::WBox: {
        std::set<WorldSet> image;
        for (std::size_t w : s) {
            auto sw = closed_sigma(m, w);
            image.insert(sw.begin(), sw.end());
        }
        for (const auto& t : image) {
            if (!support(m, t, f.operand())) return false;
        }
        return true;
    }
    }
    return false;
}

inline bool support(const inqmc::InformationModel& m, const inqmc::InfoState& s, const inqmc::Formula& f)
{
    return support(m, to_set(s), f);
}

/// QBF truth by materializing the whole assignment table and folding the
/// quantifiers from the innermost variable outwards.
inline bool qbf_by_table(const inqmc::Qbf& q)
{
    const std::size_t l = q.num_vars();
    std::vector<bool> table(std::size_t{1} << l);
    for (std::uint64_t code = 0; code < table.size(); ++code) {
        inqmc::BoolValuation v;
        for (std::size_t i = 0; i < l; ++i) v.values.push_back((code >> i) & 1U);
        table[code] = inqmc::eval_prop(q.matrix, v);
    }
    for (std::size_t i = l; i-- > 0;) {
        const std::size_t half = std::size_t{1} << i;
        std::vector<bool> folded(half);
        const bool exists = q.prefix[i].quantifier == inqmc::Quantifier::Exists;
        for (std::size_t a = 0; a < half; ++a) {
            folded[a] = exists ? (table[a] || table[a | half]) : (table[a] && table[a | half]);
        }
        table = std::move(folded);
    }
    return table[0];
}

inline inqmc::BoolValuation valuation_from_code(std::uint64_t code, std::size_t k)
{
    inqmc::BoolValuation v;
    for (std::size_t i = 0; i < k; ++i) v.values.push_back((code >> i) & 1U);
    return v;
}

} // namespace oracle

namespace gen {

/// Random formula of bounded depth over atoms p0..p{atoms-1}.
inline inqmc::Formula formula(std::mt19937_64& rng, std::size_t depth, std::size_t atoms, bool modal)
{
    using inqmc::Formula;
    const std::size_t leaf_choice = rng() % 5;
    if (depth == 0 || leaf_choice == 0) {
        if (atoms == 0 || rng() % 6 == 0) return Formula::bottom();
        return Formula::atom(rng() % atoms);
    }
    const std::size_t kinds = modal ? 5 : 3;
    switch (rng() % kinds) {
    case 0: return Formula::conj(formula(rng, depth - 1, atoms, modal), formula(rng, depth - 1, atoms, modal));
    case 1: return Formula::ivee(formula(rng, depth - 1, atoms, modal), formula(rng, depth - 1, atoms, modal));
    case 2: return Formula::implies(formula(rng, depth - 1, atoms, modal), formula(rng, depth - 1, atoms, modal));
    case 3: return Formula::box(formula(rng, depth - 1, atoms, modal));
    default: return Formula::wbox(formula(rng, depth - 1, atoms, modal));
    }
}

/// Random propositional formula with negations anywhere.
inline inqmc::BoolExpr bool_expr(std::mt19937_64& rng, std::size_t depth, std::size_t vars)
{
    using inqmc::BoolExpr;
    if (depth == 0 || rng() % 4 == 0) return BoolExpr::var(rng() % vars);
    switch (rng() % 3) {
    case 0: return BoolExpr::negation(bool_expr(rng, depth - 1, vars));
    case 1: return BoolExpr::conj(bool_expr(rng, depth - 1, vars), bool_expr(rng, depth - 1, vars));
    default: return BoolExpr::disj(bool_expr(rng, depth - 1, vars), bool_expr(rng, depth - 1, vars));
    }
}

inline inqmc::InfoState state(std::mt19937_64& rng, std::size_t worlds)
{
    return inqmc::InfoState(worlds, rng() & inqmc::low_mask(worlds));
}

} // namespace gen
