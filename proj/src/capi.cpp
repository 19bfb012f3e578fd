#include "inqmc/inqmc.h"

#include "inqmc/checker.hpp"
#include "inqmc/error.hpp"
#include "inqmc/formula.hpp"
#include "inqmc/model.hpp"
#include "inqmc/qbf.hpp"
#include "inqmc/reduction.hpp"

#include <cstring>
#include <new>
#include <string>

struct inqmc_model {
    inqmc::InformationModel value;
};

struct inqmc_formula {
    inqmc::Formula value;
};

struct inqmc_qbf {
    inqmc::Qbf value;
};

struct inqmc_instance {
    inqmc::ReductionInstance value;
};

namespace {

thread_local std::string g_last_error;
thread_local std::size_t g_last_offset = 0;

void set_error(std::string message, std::size_t offset = 0)
{
    g_last_error = std::move(message);
    g_last_offset = offset;
}

template <typename Fn>
inqmc_status guarded(Fn&& fn) noexcept
{
    try {
        set_error({});
        fn();
        return INQMC_OK;
    } catch (const inqmc::ParseError& e) {
        set_error(e.what(), e.offset());
        return INQMC_ERR_PARSE;
    } catch (const inqmc::ValidationError& e) {
        set_error(e.what());
        return INQMC_ERR_VALIDATION;
    } catch (const inqmc::CodecError& e) {
        set_error(e.what());
        return INQMC_ERR_CODEC;
    } catch (const inqmc::QueryError& e) {
        set_error(e.what());
        return INQMC_ERR_QUERY;
    } catch (const inqmc::ClosureError& e) {
        set_error(e.what());
        return INQMC_ERR_CLOSURE;
    } catch (const inqmc::ReductionError& e) {
        set_error(e.what());
        return INQMC_ERR_REDUCTION;
    } catch (const std::bad_alloc&) {
        set_error("out of memory");
        return INQMC_ERR_INTERNAL;
    } catch (const std::exception& e) {
        set_error(e.what());
        return INQMC_ERR_INTERNAL;
    } catch (...) {
        set_error("unknown error");
        return INQMC_ERR_INTERNAL;
    }
}


// Null checks happen before `guarded` runs, so they never reach the catch chain.
inqmc_status invalid(const char* what)
{
    set_error(std::string("invalid argument: ") + what);
    return INQMC_ERR_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s)
{
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

} // namespace

extern "C" {

const char* inqmc_version(void) { return "1.0.0"; }
const char* inqmc_last_error(void) { return g_last_error.c_str(); }
size_t inqmc_last_error_offset(void) { return g_last_offset; }

const char* inqmc_status_name(inqmc_status status)
{
    switch (status) {
    case INQMC_OK: return "ok";
    case INQMC_ERR_PARSE: return "parse error";
    case INQMC_ERR_VALIDATION: return "validation error";
    case INQMC_ERR_CODEC: return "codec error";
    case INQMC_ERR_QUERY: return "query error";
    case INQMC_ERR_CLOSURE: return "closure error";
    case INQMC_ERR_REDUCTION: return "reduction error";
    case INQMC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case INQMC_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void inqmc_string_free(char* s) { delete[] s; }

// Models ---------------------------------------------------------------------

inqmc_status inqmc_model_parse(const char* text, inqmc_model** out)
{
    if (!text || !out) return invalid("null pointer");
    return guarded([&] { *out = new inqmc_model{inqmc::parse_model(text)}; });
}

inqmc_status inqmc_model_decode(const char* delta, const char* const* epsilons, size_t epsilon_count, size_t worlds,
                                size_t atoms, inqmc_model** out)
{
    if (!delta || !out || (epsilon_count > 0 && !epsilons)) return invalid("null pointer");
    return guarded([&] {
        std::vector<std::string> eps;
        for (size_t i = 0; i < epsilon_count; ++i) {
            if (!epsilons[i]) throw inqmc::CodecError("epsilon " + std::to_string(i) + " is null");
            eps.emplace_back(epsilons[i]);
        }
        *out = new inqmc_model{inqmc::decode_model(delta, eps, worlds, atoms)};
    });
}

inqmc_status inqmc_model_random(uint64_t seed, size_t worlds, size_t atoms, size_t max_generators, inqmc_model** out)
{
    if (!out) return invalid("null pointer");
    return guarded([&] { *out = new inqmc_model{inqmc::random_model(seed, worlds, atoms, max_generators)}; });
}

inqmc_status inqmc_model_render(const inqmc_model* model, char** out)
{
    if (!model || !out) return invalid("null pointer");
    return guarded([&] { *out = dup_string(inqmc::render_model(model->value)); });
}

inqmc_status inqmc_model_delta(const inqmc_model* model, char** delta)
{
    if (!model || !delta) return invalid("null pointer");
    return guarded([&] { *delta = dup_string(inqmc::encode_model(model->value).delta); });
}

inqmc_status inqmc_model_epsilon(const inqmc_model* model, size_t world, char** epsilon)
{
    if (!model || !epsilon) return invalid("null pointer");
    if (!model->value.sigma) return invalid("model has no inquisitive state map");
    if (world >= model->value.worlds) return invalid("world index out of range");
    return guarded([&] { *epsilon = dup_string(inqmc::encode_model(model->value).epsilons.at(world)); });
}

size_t inqmc_model_worlds(const inqmc_model* model) { return model ? model->value.worlds : 0; }
size_t inqmc_model_atoms(const inqmc_model* model) { return model ? model->value.atoms : 0; }

int inqmc_model_is_modal(const inqmc_model* model)
{
    return model && model->value.kind() == inqmc::ModelKind::InqM ? 1 : 0;
}

void inqmc_model_free(inqmc_model* model) { delete model; }

// Formulas -------------------------------------------------------------------

inqmc_status inqmc_formula_parse(const char* text, inqmc_formula** out)
{
    if (!text || !out) return invalid("null pointer");
    return guarded([&] { *out = new inqmc_formula{inqmc::parse_formula(text)}; });
}

inqmc_status inqmc_formula_render(const inqmc_formula* formula, char** out)
{
    if (!formula || !out) return invalid("null pointer");
    return guarded([&] { *out = dup_string(inqmc::render_formula(formula->value)); });
}

size_t inqmc_formula_size(const inqmc_formula* formula) { return formula ? inqmc::formula_size(formula->value) : 0; }

int inqmc_formula_equal(const inqmc_formula* a, const inqmc_formula* b)
{
    return a && b && a->value == b->value ? 1 : 0;
}

void inqmc_formula_free(inqmc_formula* formula) { delete formula; }

// Checking -------------------------------------------------------------------

inqmc_status inqmc_check(const inqmc_model* model, const char* state, const inqmc_formula* formula, int use_memo,
                         int* supported, inqmc_check_stats* stats)
{
    if (!model || !state || !formula || !supported) return invalid("null pointer");
    return guarded([&] {
        const inqmc::InfoState s = inqmc::InfoState::from_string(state);
        inqmc::CheckStats counters;
        bool result = false;
        if (use_memo) {
            inqmc::MemoCache cache;
            result = inqmc::check_support_memo(model->value, s, formula->value, cache);
            counters = cache.stats();
        } else {
            result = inqmc::check_support(model->value, s, formula->value, &counters);
        }
        *supported = result ? 1 : 0;
        if (stats) *stats = {counters.nodes_visited, counters.cache_hits};
    });
}

// QBFs -----------------------------------------------------------------------

inqmc_status inqmc_qbf_parse(const char* text, int rename_variables, inqmc_qbf** out)
{
    if (!text || !out) return invalid("null pointer");
    return guarded([&] { *out = new inqmc_qbf{inqmc::parse_qbf(text, rename_variables != 0)}; });
}

inqmc_status inqmc_qbf_random(uint64_t seed, size_t vars, size_t matrix_nodes, inqmc_qbf** out)
{
    if (!out) return invalid("null pointer");
    return guarded([&] { *out = new inqmc_qbf{inqmc::random_qbf(seed, vars, matrix_nodes)}; });
}

inqmc_status inqmc_qbf_render(const inqmc_qbf* qbf, char** out)
{
    if (!qbf || !out) return invalid("null pointer");
    return guarded([&] { *out = dup_string(inqmc::render_qbf(qbf->value)); });
}

size_t inqmc_qbf_vars(const inqmc_qbf* qbf) { return qbf ? qbf->value.num_vars() : 0; }

inqmc_status inqmc_qbf_eval(const inqmc_qbf* qbf, int* value)
{
    if (!qbf || !value) return invalid("null pointer");
    return guarded([&] { *value = inqmc::eval_qbf(qbf->value) ? 1 : 0; });
}

void inqmc_qbf_free(inqmc_qbf* qbf) { delete qbf; }

// Reduction ------------------------------------------------------------------

inqmc_status inqmc_reduce(const inqmc_qbf* qbf, inqmc_instance** out)
{
    if (!qbf || !out) return invalid("null pointer");
    return guarded([&] { *out = new inqmc_instance{inqmc::reduce_tqbf(qbf->value)}; });
}

inqmc_status inqmc_instance_model(const inqmc_instance* instance, inqmc_model** out)
{
    if (!instance || !out) return invalid("null pointer");
    return guarded([&] { *out = new inqmc_model{instance->value.model.model}; });
}

inqmc_status inqmc_instance_state(const inqmc_instance* instance, char** out)
{
    if (!instance || !out) return invalid("null pointer");
    return guarded([&] { *out = dup_string(instance->value.state.to_string()); });
}

inqmc_status inqmc_instance_formula(const inqmc_instance* instance, inqmc_formula** out)
{
    if (!instance || !out) return invalid("null pointer");
    return guarded([&] { *out = new inqmc_formula{instance->value.formula}; });
}

inqmc_status inqmc_instance_size_report(const inqmc_instance* instance, double bound_constant, inqmc_size_report* out)
{
    if (!instance || !out) return invalid("null pointer");
    return guarded([&] {
        const double c = bound_constant > 0.0 ? bound_constant : inqmc::kDefaultSizeBoundConstant;
        const inqmc::SizeReport r = inqmc::size_report(instance->value, c);
        *out = {r.l, r.matrix_size, r.translated_size, r.ratio, r.bound_constant, r.violation ? 1 : 0};
    });
}

void inqmc_instance_free(inqmc_instance* instance) { delete instance; }

inqmc_status inqmc_verify(const inqmc_qbf* qbf, inqmc_verify_result* out)
{
    if (!qbf || !out) return invalid("null pointer");
    return guarded([&] {
        const bool oracle = inqmc::eval_qbf(qbf->value);
        const inqmc::ReductionInstance inst = inqmc::reduce_tqbf(qbf->value);
        inqmc::MemoCache cache;
        const bool checked = inqmc::check_support_memo(inst.model.model, inst.state, inst.formula, cache);
        out->qbf_value = oracle ? 1 : 0;
        out->model_check_value = checked ? 1 : 0;
        out->agree = oracle == checked ? 1 : 0;
        out->stats = {cache.stats().nodes_visited, cache.stats().cache_hits};
    });
}

} // extern "C"
