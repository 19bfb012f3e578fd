#pragma once

#include "inqmc/state.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace inqmc {

enum class ModelKind { InqB, InqM };

/// Finite information model.
///
/// `valuation[j]` is the extension V(p_j). When `sigma` is present the model
/// is an InqM model and `sigma[i]` lists the generator states of Σ(w_i); the
/// semantic Σ(w_i) is the downward closure of that list.
struct InformationModel {
    std::size_t worlds = 0;
    std::size_t atoms = 0;
    std::vector<InfoState> valuation;
    std::optional<std::vector<std::vector<InfoState>>> sigma;

    ModelKind kind() const noexcept { return sigma ? ModelKind::InqM : ModelKind::InqB; }

    /// m = sum of the generator counts k_i (0 for InqB models).
    std::size_t sigma_size() const noexcept;

    InfoState empty_state() const { return InfoState(worlds); }
    InfoState full_state() const { return InfoState::full(worlds); }

    friend bool operator==(const InformationModel&, const InformationModel&) = default;
};

/// Throws ValidationError naming the violated invariant.
void validate_model(const InformationModel& model);

struct ModelEncoding {
    std::string delta;
    std::vector<std::string> epsilons;  // empty for InqB models
};

/// Bit layout: delta[l*i + j] = 1 iff w_i in V(p_j); epsilon_i is
/// ('0' + n-bit generator)* followed by a terminating '1'.
ModelEncoding encode_model(const InformationModel& model);

/// Inverse of encode_model. Throws CodecError on malformed strings and
/// ValidationError when the decoded model breaks an invariant.
InformationModel decode_model(std::string_view delta, const std::vector<std::string>& epsilons, std::size_t worlds,
                              std::size_t atoms);

/// Union of the generators of Σ(w_i). Throws QueryError on InqB models.
InfoState sigma_union(const InformationModel& model, std::size_t world);

/// Generators of Σ(w_i) for every w_i in s, concatenated in world order
/// with later duplicates dropped. Throws QueryError on InqB models.
std::vector<InfoState> sigma_image(const InformationModel& model, const InfoState& state);

/// All subsets of the given states, ascending by bit pattern.
std::vector<InfoState> downward_closure(const std::vector<InfoState>& states);

/// The same model with each Σ(w) generator list replaced by its closure.
InformationModel close_sigma(const InformationModel& model);

// Text format: "inqmodel v1" header, atoms/worlds/delta lines, then one
// "epsilon <i> <bits>" line per world for InqM models.
std::string render_model(const InformationModel& model);
InformationModel parse_model(std::string_view text);

/// Deterministic random model. max_generators == 0 yields an InqB model;
/// otherwise each world receives between 1 and max_generators distinct
/// generators (fewer when n is too small to supply them).
InformationModel random_model(std::uint64_t seed, std::size_t worlds, std::size_t atoms, std::size_t max_generators);

} // namespace inqmc
