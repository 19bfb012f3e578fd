#include "inqmc/checker.hpp"

#include "inqmc/error.hpp"

#include <map>
#include <tuple>

namespace inqmc {

namespace {

constexpr std::size_t kFlatTableMaxWorlds = 16;

std::vector<std::uint64_t> all_sigma_unions(const InformationModel& model)
{
    std::vector<std::uint64_t> unions;
    if (model.kind() != ModelKind::InqM) return unions;
    unions.reserve(model.worlds);
    for (std::size_t i = 0; i < model.worlds; ++i) unions.push_back(sigma_union(model, i).bits());
    return unions;
}

class NaiveEvaluator {
public:
    NaiveEvaluator(const InformationModel& model, CheckStats& stats)
        : model_(model), unions_(all_sigma_unions(model)), stats_(stats)
    {
    }

    bool eval(const Formula& f, std::uint64_t s)
    {
        ++stats_.nodes_visited;
        switch (f.op()) {
        case Op::Bottom: return s == 0;
        case Op::Atom: return (s & ~model_.valuation[f.atom_index()].bits()) == 0;
        case Op::And: return eval(f.lhs(), s) && eval(f.rhs(), s);
        case Op::IVee: return eval(f.lhs(), s) || eval(f.rhs(), s);
        case Op::Implies:
            return all_subsets(s, [&](std::uint64_t t) { return !eval(f.lhs(), t) || eval(f.rhs(), t); });
        case Op::Box:
            for (std::size_t i = 0; i < model_.worlds; ++i) {
                if (((s >> i) & 1U) && !eval(f.operand(), unions_[i])) return false;
            }
            return true;
        case Op::WBox:
            for (const InfoState& t : sigma_image(model_, InfoState(model_.worlds, s))) {
                if (!eval(f.operand(), t.bits())) return false;
            }
            return true;
        }
        return false;
    }

private:
    const InformationModel& model_;
    std::vector<std::uint64_t> unions_;
    CheckStats& stats_;
};

} // namespace

void validate_query(const InformationModel& model, const InfoState& state, const Formula& formula)
{
    try {
        validate_model(model);
    } catch (const ValidationError& e) {
        throw QueryError(std::string("invalid model: ") + e.what());
    }
    if (state.width() != model.worlds) {
        throw QueryError("state has " + std::to_string(state.width()) + " bits but the model has "
                         + std::to_string(model.worlds) + " worlds");
    }
    const long long max_atom = max_atom_index(formula);
    if (max_atom >= 0 && static_cast<std::size_t>(max_atom) >= model.atoms) {
        throw QueryError("formula mentions p" + std::to_string(max_atom) + " but the model has only "
                         + std::to_string(model.atoms) + " atoms");
    }
    if (model.kind() != ModelKind::InqM && uses_modalities(formula)) {
        throw QueryError("box/wbox need an inquisitive state map, but the model is an InqB model");
    }
}

bool check_support(const InformationModel& model, const InfoState& state, const Formula& formula, CheckStats* stats)
{
    validate_query(model, state, formula);
    CheckStats local;
    NaiveEvaluator evaluator(model, stats ? *stats : local);
    return evaluator.eval(formula, state.bits());
}

bool check_anti_support(const InformationModel& model, const InfoState& state, const Formula& formula,
                        CheckStats* stats)
{
    return !check_support(model, state, formula, stats);
}

// ---------------------------------------------------------------------------
// Memoized evaluator

void MemoCache::clear()
{
    model_.reset();
    root_.reset();
    root_id_ = 0;
    nodes_.clear();
    by_identity_.clear();
    sigma_unions_.clear();
    flat_values_.clear();
    hashed_values_.clear();
    entries_ = 0;
}

std::uint32_t MemoCache::intern(const Formula& root)
{
    std::map<std::tuple<Op, std::size_t, std::uint32_t, std::uint32_t>, std::uint32_t> structural;
    for (std::uint32_t id = 0; id < nodes_.size(); ++id) {
        const NodeRec& r = nodes_[id];
        structural.emplace(std::make_tuple(r.op, r.atom, r.lhs, r.rhs), id);
    }
    auto walk = [&](auto&& self, const Formula& f) -> std::uint32_t {
        if (auto it = by_identity_.find(f.identity()); it != by_identity_.end()) return it->second;
        constexpr std::uint32_t none = ~std::uint32_t{0};
        NodeRec rec{f.op(), f.op() == Op::Atom ? f.atom_index() : 0, none, none};
        if (f.is_binary()) {
            rec.lhs = self(self, f.lhs());
            rec.rhs = self(self, f.rhs());
        } else if (f.is_modal()) {
            rec.lhs = self(self, f.operand());
        }
        auto key = std::make_tuple(rec.op, rec.atom, rec.lhs, rec.rhs);
        auto [it, inserted] = structural.emplace(key, static_cast<std::uint32_t>(nodes_.size()));
        if (inserted) nodes_.push_back(rec);
        by_identity_.emplace(f.identity(), it->second);
        return it->second;
    };
    return walk(walk, root);
}

void MemoCache::bind(const InformationModel& model, const Formula& root)
{
    if (model_ && root_ && root_->identity() == root.identity() && *model_ == model) return;
    clear();
    model_ = model;
    root_ = root;
    root_id_ = intern(root);
    sigma_unions_ = all_sigma_unions(model);
    flat_ = model.worlds <= kFlatTableMaxWorlds;
    if (flat_) {
        flat_values_.resize(nodes_.size());
    } else {
        hashed_values_.resize(nodes_.size());
    }
}

class MemoEvaluator {
public:
    explicit MemoEvaluator(MemoCache& cache) : c_(cache) {}

    bool eval(std::uint32_t id, std::uint64_t s)
    {
        if (auto hit = lookup(id, s)) {
            ++c_.stats_.cache_hits;
            return *hit;
        }
        ++c_.stats_.nodes_visited;
        const bool value = compute(id, s);
        store(id, s, value);
        return value;
    }

private:
    std::optional<bool> lookup(std::uint32_t id, std::uint64_t s) const
    {
        if (c_.flat_) {
            const auto& table = c_.flat_values_[id];
            if (table.empty() || table[s] < 0) return std::nullopt;
            return table[s] != 0;
        }
        const auto& table = c_.hashed_values_[id];
        if (auto it = table.find(s); it != table.end()) return it->second;
        return std::nullopt;
    }

    void store(std::uint32_t id, std::uint64_t s, bool value)
    {
        if (c_.flat_) {
            auto& table = c_.flat_values_[id];
            if (table.empty()) table.assign(std::size_t{1} << c_.model_->worlds, -1);
            table[s] = value ? 1 : 0;
        } else {
            c_.hashed_values_[id].emplace(s, value);
        }
        ++c_.entries_;
    }

    bool compute(std::uint32_t id, std::uint64_t s)
    {
        const MemoCache::NodeRec rec = c_.nodes_[id];
        const InformationModel& model = *c_.model_;
        switch (rec.op) {
        case Op::Bottom: return s == 0;
        case Op::Atom: return (s & ~model.valuation[rec.atom].bits()) == 0;
        case Op::And: return eval(rec.lhs, s) && eval(rec.rhs, s);
        case Op::IVee: return eval(rec.lhs, s) || eval(rec.rhs, s);
        case Op::Implies:
            return all_subsets(s, [&](std::uint64_t t) { return !eval(rec.lhs, t) || eval(rec.rhs, t); });
        case Op::Box:
            for (std::size_t i = 0; i < model.worlds; ++i) {
                if (((s >> i) & 1U) && !eval(rec.lhs, c_.sigma_unions_[i])) return false;
            }
            return true;
        case Op::WBox:
            for (std::size_t i = 0; i < model.worlds; ++i) {
                if (!((s >> i) & 1U)) continue;
                for (const InfoState& t : (*model.sigma)[i]) {
                    if (!eval(rec.lhs, t.bits())) return false;
                }
            }
            return true;
        }
        return false;
    }

    MemoCache& c_;
};

bool check_support_memo(const InformationModel& model, const InfoState& state, const Formula& formula,
                        MemoCache& cache)
{
    validate_query(model, state, formula);
    cache.bind(model, formula);
    return MemoEvaluator(cache).eval(cache.root_id_, state.bits());
}

} // namespace inqmc
