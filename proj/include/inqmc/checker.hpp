#pragma once

#include "inqmc/formula.hpp"
#include "inqmc/model.hpp"
#include "inqmc/state.hpp"

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

namespace inqmc {

struct CheckStats {
    std::uint64_t nodes_visited = 0;  // semantic clauses evaluated
    std::uint64_t cache_hits = 0;     // memo lookups answered without evaluation
};

/// Throws QueryError unless the state width matches the model, every atom is
/// below the model's atom count and modalities are only used on InqM models.
void validate_query(const InformationModel& model, const InfoState& state, const Formula& formula);

/// Decides M, s |= phi by structural recursion. Implication enumerates every
/// subset of s; no persistency-based pruning. This is the reference evaluator.
bool check_support(const InformationModel& model, const InfoState& state, const Formula& formula,
                   CheckStats* stats = nullptr);

/// Decides M, s |/= phi.
bool check_anti_support(const InformationModel& model, const InfoState& state, const Formula& formula,
                        CheckStats* stats = nullptr);

/// Memo table for check_support_memo, keyed on (subformula, state).
///
/// Structurally equal subformulas share one entry. A cache is bound to the
/// (model, formula) pair of its first query and is reset when used with a
/// different pair. Not thread-safe; use one cache per evaluating thread.
class MemoCache {
public:
    MemoCache() = default;

    void clear();
    std::size_t entries() const noexcept { return entries_; }
    /// Distinct subformulas of the bound formula.
    std::size_t interned_nodes() const noexcept { return nodes_.size(); }
    const CheckStats& stats() const noexcept { return stats_; }
    void reset_stats() noexcept { stats_ = {}; }

private:
    friend bool check_support_memo(const InformationModel&, const InfoState&, const Formula&, MemoCache&);
    friend class MemoEvaluator;

    struct NodeRec {
        Op op;
        std::size_t atom;
        std::uint32_t lhs;
        std::uint32_t rhs;
    };

    void bind(const InformationModel& model, const Formula& root);
    std::uint32_t intern(const Formula& f);

    std::optional<InformationModel> model_;
    std::optional<Formula> root_;
    std::uint32_t root_id_ = 0;
    std::vector<NodeRec> nodes_;
    std::unordered_map<const void*, std::uint32_t> by_identity_;
    std::vector<std::uint64_t> sigma_unions_;

    // Value tables: flat arrays indexed by state bits for small models,
    // hash maps otherwise. -1 marks an absent entry.
    bool flat_ = true;
    std::vector<std::vector<std::int8_t>> flat_values_;
    std::vector<std::unordered_map<std::uint64_t, bool>> hashed_values_;
    std::size_t entries_ = 0;
    CheckStats stats_;
};

/// Same value as check_support; visited (subformula, state) pairs are added
/// to `cache`, and the cache's statistics are updated.
bool check_support_memo(const InformationModel& model, const InfoState& state, const Formula& formula,
                        MemoCache& cache);

} // namespace inqmc
