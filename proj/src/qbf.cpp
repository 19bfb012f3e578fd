#include "inqmc/qbf.hpp"

#include "inqmc/error.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <random>
#include <unordered_map>

namespace inqmc {

void validate_qbf(const Qbf& q)
{
    for (std::size_t i = 0; i < q.prefix.size(); ++i) {
        if (q.prefix[i].var != i) {
            throw ReductionError("quantifier " + std::to_string(i) + " binds x" + std::to_string(q.prefix[i].var)
                                 + "; the prefix must bind x0, x1, ... in order");
        }
    }
    const long long max_var = max_var_index(q.matrix);
    if (max_var >= static_cast<long long>(q.prefix.size())) {
        throw ClosureError("matrix variable x" + std::to_string(max_var) + " is not bound by the prefix");
    }
}

namespace {

enum class Tok { End, Colon, Tilde, Amp, Bar, LParen, RParen, Word };

struct Token {
    Tok kind;
    std::size_t offset;
    std::string_view text;
};

class QbfLexer {
public:
    explicit QbfLexer(std::string_view text) : text_(text) {}

    Token next()
    {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else {
                break;
            }
        }
        const std::size_t start = pos_;
        if (pos_ >= text_.size()) return {Tok::End, start, {}};
        const char c = text_[pos_];
        auto single = [&](Tok kind) {
            ++pos_;
            return Token{kind, start, text_.substr(start, 1)};
        };
        switch (c) {
        case ':': return single(Tok::Colon);
        case '~': return single(Tok::Tilde);
        case '&': return single(Tok::Amp);
        case '|': return single(Tok::Bar);
        case '(': return single(Tok::LParen);
        case ')': return single(Tok::RParen);
        default: break;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < text_.size()
                   && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            return {Tok::Word, start, text_.substr(start, pos_ - start)};
        }
        throw ParseError("unexpected character '" + std::string(1, c) + "'", start,
                         {":", "~", "&", "|", "(", ")", "identifier"});
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

std::optional<std::size_t> x_index(std::string_view w)
{
    if (w.size() < 2 || w[0] != 'x') return std::nullopt;
    for (std::size_t i = 1; i < w.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(w[i]))) return std::nullopt;
    }
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(w.data() + 1, w.data() + w.size(), value);
    if (ec != std::errc() || ptr != w.data() + w.size()) return std::nullopt;
    return value;
}

bool is_keyword(std::string_view w) { return w == "forall" || w == "exists"; }

class QbfParser {
public:
    QbfParser(std::string_view text, bool rename) : lexer_(text), rename_(rename) { advance(); }

    Qbf parse()
    {
        Qbf q;
        while (cur_.kind == Tok::Word && is_keyword(cur_.text)) {
            const Quantifier quant = cur_.text == "forall" ? Quantifier::ForAll : Quantifier::Exists;
            advance();
            if (cur_.kind != Tok::Word || is_keyword(cur_.text)) fail("expected a variable name", {"x<index>"});
            const std::size_t position = q.prefix.size();
            if (rename_) {
                if (!names_.emplace(std::string(cur_.text), position).second) {
                    fail("variable bound twice", {"fresh variable"});
                }
            } else {
                const auto index = x_index(cur_.text);
                if (!index) fail("expected a variable of the form x<index>", {"x" + std::to_string(position)});
                if (*index != position) {
                    fail("prefix must bind x0, x1, ... in order (use variable renaming for other names)",
                         {"x" + std::to_string(position)});
                }
            }
            q.prefix.push_back({quant, position});
            advance();
        }
        if (cur_.kind != Tok::Colon) fail("expected ':' after the quantifier prefix", {"forall", "exists", ":"});
        advance();
        BoolExpr matrix = disjunction();
        if (cur_.kind != Tok::End) fail("unexpected trailing input", {"&", "|", "end of input"});
        q.matrix = to_nnf(matrix);
        if (!unbound_.empty()) {
            throw ClosureError("matrix variable '" + unbound_ + "' is not bound by the prefix");
        }
        validate_qbf(q);
        return q;
    }

private:
    void advance() { cur_ = lexer_.next(); }

    [[noreturn]] void fail(const std::string& why, std::vector<std::string> expected) const
    {
        std::string msg = why;
        msg += cur_.kind == Tok::End ? " at end of input" : " at '" + std::string(cur_.text) + "'";
        throw ParseError(msg, cur_.offset, std::move(expected));
    }

    BoolExpr disjunction()
    {
        BoolExpr acc = conjunction();
        while (cur_.kind == Tok::Bar) {
            advance();
            acc = BoolExpr::disj(std::move(acc), conjunction());
        }
        return acc;
    }

    BoolExpr conjunction()
    {
        BoolExpr acc = negation();
        while (cur_.kind == Tok::Amp) {
            advance();
            acc = BoolExpr::conj(std::move(acc), negation());
        }
        return acc;
    }

    BoolExpr negation()
    {
        if (++depth_ > 10000) fail("matrix nested too deeply", {});
        BoolExpr out = BoolExpr::var(0);
        if (cur_.kind == Tok::Tilde) {
            advance();
            out = BoolExpr::negation(negation());
        } else {
            out = primary();
        }
        --depth_;
        return out;
    }

    BoolExpr primary()
    {
        if (cur_.kind == Tok::LParen) {
            advance();
            BoolExpr inner = disjunction();
            if (cur_.kind != Tok::RParen) fail("expected ')'", {")", "&", "|"});
            advance();
            return inner;
        }
        if (cur_.kind == Tok::Word && !is_keyword(cur_.text)) {
            const std::size_t index = resolve(cur_.text);
            advance();
            return BoolExpr::var(index);
        }
        fail("expected a variable, '~' or '('", {"x<index>", "~", "("});
    }

    std::size_t resolve(std::string_view name)
    {
        if (rename_) {
            if (auto it = names_.find(std::string(name)); it != names_.end()) return it->second;
            if (unbound_.empty()) unbound_ = std::string(name);
            return 0;
        }
        const auto index = x_index(name);
        if (!index) fail("expected a variable of the form x<index>", {"x<index>"});
        return *index;
    }

    QbfLexer lexer_;
    bool rename_;
    Token cur_{Tok::End, 0, {}};
    std::unordered_map<std::string, std::size_t> names_;
    std::string unbound_;
    std::size_t depth_ = 0;
};

bool expand(const Qbf& q, std::size_t depth, BoolValuation& v)
{
    if (depth == q.prefix.size()) return eval_prop(q.matrix, v);
    const bool exists = q.prefix[depth].quantifier == Quantifier::Exists;
    for (bool value : {false, true}) {
        v.values[depth] = value;
        const bool r = expand(q, depth + 1, v);
        if (exists && r) return true;
        if (!exists && !r) return false;
    }
    return !exists;
}

class MatrixGenerator {
public:
    MatrixGenerator(std::mt19937_64& rng, std::size_t vars) : rng_(rng), vars_(vars) {}

    PropFormula generate(std::size_t budget)
    {
        // Leaves when the budget cannot fit a binary node with two children,
        // and with probability 1/4 otherwise so small matrices also appear.
        if (budget < 3 || rng_() % 4 == 0) {
            const std::size_t var = static_cast<std::size_t>(rng_() % vars_);
            if (budget >= 2 && rng_() % 2 == 0) return PropFormula::neg_var(var);
            return PropFormula::var(var);
        }
        const std::size_t rest = budget - 1;
        const std::size_t left = 1 + static_cast<std::size_t>(rng_() % (rest - 1));
        PropFormula lhs = generate(left);
        PropFormula rhs = generate(rest - left);
        return rng_() % 2 == 0 ? PropFormula::conj(std::move(lhs), std::move(rhs))
                               : PropFormula::disj(std::move(lhs), std::move(rhs));
    }

private:
    std::mt19937_64& rng_;
    std::size_t vars_;
};

} // namespace

Qbf parse_qbf(std::string_view text, bool rename_variables)
{
    return QbfParser(text, rename_variables).parse();
}

std::string render_qbf(const Qbf& q)
{
    std::string out;
    for (const auto& qv : q.prefix) {
        out += qv.quantifier == Quantifier::ForAll ? "forall x" : "exists x";
        out += std::to_string(qv.var);
        out += ' ';
    }
    out += ": ";
    out += render_prop(q.matrix);
    return out;
}

bool eval_qbf(const Qbf& q)
{
    validate_qbf(q);
    BoolValuation v;
    v.values.assign(q.prefix.size(), false);
    return expand(q, 0, v);
}

Qbf random_qbf(std::uint64_t seed, std::size_t l, std::size_t matrix_nodes)
{
    if (l == 0) throw ReductionError("random_qbf needs l >= 1");
    if (matrix_nodes == 0) throw ReductionError("random_qbf needs room for at least one matrix node");
    std::mt19937_64 rng(seed);
    Qbf q;
    for (std::size_t i = 0; i < l; ++i) {
        q.prefix.push_back({rng() % 2 == 0 ? Quantifier::ForAll : Quantifier::Exists, i});
    }
    q.matrix = MatrixGenerator(rng, l).generate(matrix_nodes);
    return q;
}

} // namespace inqmc
