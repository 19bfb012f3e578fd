#include "inqmc/model.hpp"

#include "inqmc/error.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace inqmc {

namespace {

std::string world_name(std::size_t i) { return "w" + std::to_string(i); }

void require_inqm(const InformationModel& model, const char* what)
{
    if (model.kind() != ModelKind::InqM) {
        throw QueryError(std::string(what) + " requires an InqM model (the model has no inquisitive state map)");
    }
}

} // namespace

std::size_t InformationModel::sigma_size() const noexcept
{
    if (!sigma) return 0;
    std::size_t m = 0;
    for (const auto& gens : *sigma) m += gens.size();
    return m;
}

void validate_model(const InformationModel& model)
{
    if (model.worlds == 0) throw ValidationError("worlds: a model needs at least one world");
    if (model.worlds > kMaxWorlds) {
        throw ValidationError("worlds: " + std::to_string(model.worlds) + " exceeds the supported maximum of "
                              + std::to_string(kMaxWorlds));
    }
    if (model.valuation.size() != model.atoms) {
        throw ValidationError("valuation: expected " + std::to_string(model.atoms) + " atom extensions, found "
                              + std::to_string(model.valuation.size()));
    }
    for (std::size_t j = 0; j < model.atoms; ++j) {
        if (model.valuation[j].width() != model.worlds) {
            throw ValidationError("valuation: V(p" + std::to_string(j) + ") has width "
                                  + std::to_string(model.valuation[j].width()) + ", expected "
                                  + std::to_string(model.worlds));
        }
    }
    if (!model.sigma) return;

    const auto& sigma = *model.sigma;
    if (sigma.size() != model.worlds) {
        throw ValidationError("sigma: expected generator lists for " + std::to_string(model.worlds)
                              + " worlds, found " + std::to_string(sigma.size()));
    }
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (sigma[i].empty()) throw ValidationError("sigma: Σ(" + world_name(i) + ") is empty");
        std::set<std::uint64_t> seen;
        for (const auto& gen : sigma[i]) {
            if (gen.width() != model.worlds) {
                throw ValidationError("sigma: a generator of Σ(" + world_name(i) + ") has width "
                                      + std::to_string(gen.width()) + ", expected " + std::to_string(model.worlds));
            }
            if (!seen.insert(gen.bits()).second) {
                throw ValidationError("sigma: duplicate generator " + gen.to_string() + " in Σ(" + world_name(i)
                                      + ")");
            }
        }
    }
}

ModelEncoding encode_model(const InformationModel& model)
{
    ModelEncoding enc;
    enc.delta.assign(model.worlds * model.atoms, '0');
    for (std::size_t j = 0; j < model.atoms; ++j) {
        for (std::size_t i = 0; i < model.worlds; ++i) {
            if (model.valuation[j].contains(i)) enc.delta[model.atoms * i + j] = '1';
        }
    }
    if (model.sigma) {
        for (const auto& gens : *model.sigma) {
            std::string eps;
            eps.reserve((model.worlds + 1) * gens.size() + 1);
            for (const auto& gen : gens) {
                eps += '0';
                eps += gen.to_string();
            }
            eps += '1';
            enc.epsilons.push_back(std::move(eps));
        }
    }
    return enc;
}

InformationModel decode_model(std::string_view delta, const std::vector<std::string>& epsilons, std::size_t worlds,
                              std::size_t atoms)
{
    if (worlds > kMaxWorlds) {
        throw CodecError("worlds: " + std::to_string(worlds) + " exceeds the supported maximum of "
                         + std::to_string(kMaxWorlds));
    }
    if (delta.size() != worlds * atoms) {
        throw CodecError("length: delta has " + std::to_string(delta.size()) + " bits, expected n*l = "
                         + std::to_string(worlds * atoms));
    }
    InformationModel model;
    model.worlds = worlds;
    model.atoms = atoms;
    model.valuation.assign(atoms, InfoState(worlds));
    for (std::size_t k = 0; k < delta.size(); ++k) {
        const char c = delta[k];
        if (c != '0' && c != '1') {
            throw CodecError("delta: invalid character '" + std::string(1, c) + "' at bit " + std::to_string(k));
        }
        if (c == '1') model.valuation[k % atoms].insert(k / atoms);
    }

    if (!epsilons.empty()) {
        if (epsilons.size() != worlds) {
            throw CodecError("epsilon: expected " + std::to_string(worlds) + " strings, found "
                             + std::to_string(epsilons.size()));
        }
        const std::size_t block = worlds + 1;
        std::vector<std::vector<InfoState>> sigma(worlds);
        for (std::size_t i = 0; i < worlds; ++i) {
            const std::string& eps = epsilons[i];
            if (eps.empty() || (eps.size() - 1) % block != 0) {
                throw CodecError("epsilon " + std::to_string(i) + ": missing terminator layout, length "
                                 + std::to_string(eps.size()) + " is not of the form (n+1)k+1");
            }
            if (eps.back() != '1') {
                throw CodecError("epsilon " + std::to_string(i) + ": missing terminal '1'");
            }
            const std::size_t k = (eps.size() - 1) / block;
            for (std::size_t g = 0; g < k; ++g) {
                const std::size_t at = g * block;
                if (eps[at] != '0') {
                    throw CodecError("epsilon " + std::to_string(i) + ": separator bit " + std::to_string(at)
                                     + " is not '0'");
                }
                try {
                    sigma[i].push_back(InfoState::from_string(std::string_view(eps).substr(at + 1, worlds)));
                } catch (const CodecError& e) {
                    throw CodecError("epsilon " + std::to_string(i) + ": " + e.what());
                }
            }
        }
        model.sigma = std::move(sigma);
    }
    validate_model(model);
    return model;
}

InfoState sigma_union(const InformationModel& model, std::size_t world)
{
    require_inqm(model, "sigma_union");
    if (world >= model.worlds) throw QueryError("sigma_union: world index " + std::to_string(world) + " out of range");
    InfoState acc(model.worlds);
    for (const auto& gen : (*model.sigma)[world]) acc = acc | gen;
    return acc;
}

std::vector<InfoState> sigma_image(const InformationModel& model, const InfoState& state)
{
    require_inqm(model, "sigma_image");
    std::vector<InfoState> out;
    std::set<std::uint64_t> seen;
    for (std::size_t i = 0; i < model.worlds; ++i) {
        if (!state.contains(i)) continue;
        for (const auto& gen : (*model.sigma)[i]) {
            if (seen.insert(gen.bits()).second) out.push_back(gen);
        }
    }
    return out;
}

std::vector<InfoState> downward_closure(const std::vector<InfoState>& states)
{
    if (states.empty()) return {};
    const std::size_t width = states.front().width();
    std::set<std::uint64_t> all;
    for (const auto& s : states) {
        for_each_subset(s.bits(), [&all](std::uint64_t t) { all.insert(t); });
    }
    std::vector<InfoState> out;
    out.reserve(all.size());
    for (std::uint64_t bits : all) out.emplace_back(width, bits);
    return out;
}

InformationModel close_sigma(const InformationModel& model)
{
    InformationModel closed = model;
    if (closed.sigma) {
        for (auto& gens : *closed.sigma) gens = downward_closure(gens);
    }
    return closed;
}

InformationModel random_model(std::uint64_t seed, std::size_t worlds, std::size_t atoms, std::size_t max_generators)
{
    if (worlds == 0 || worlds > kMaxWorlds) {
        throw ValidationError("worlds: random models need 1.." + std::to_string(kMaxWorlds) + " worlds");
    }
    // Raw engine output only: distributions are not portable across standard libraries.
    std::mt19937_64 rng(seed);
    const std::uint64_t mask = low_mask(worlds);

    InformationModel model;
    model.worlds = worlds;
    model.atoms = atoms;
    for (std::size_t j = 0; j < atoms; ++j) model.valuation.emplace_back(worlds, rng() & mask);

    if (max_generators > 0) {
        const std::uint64_t distinct = worlds >= 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << worlds);
        const std::size_t cap = static_cast<std::size_t>(std::min<std::uint64_t>(max_generators, distinct));
        std::vector<std::vector<InfoState>> sigma(worlds);
        for (auto& gens : sigma) {
            const std::size_t k = 1 + static_cast<std::size_t>(rng() % cap);
            std::set<std::uint64_t> seen;
            while (gens.size() < k) {
                const std::uint64_t bits = rng() & mask;
                if (seen.insert(bits).second) gens.emplace_back(worlds, bits);
            }
        }
        model.sigma = std::move(sigma);
    }
    validate_model(model);
    return model;
}

} // namespace inqmc
