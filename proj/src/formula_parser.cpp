#include "inqmc/error.hpp"
#include "inqmc/formula.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <string>
#include <vector>

namespace inqmc {

namespace {

enum class Tok { End, Arrow, Amp, LParen, RParen, Question, Word };

struct Token {
    Tok kind;
    std::size_t offset;
    std::string_view text;
};

constexpr std::size_t kMaxNesting = 10000;

const std::vector<std::string> kOperandStart = {"bot", "p<digits>", "(", "not", "?", "box", "wbox"};

std::string quote(std::string_view s) { return "'" + std::string(s) + "'"; }

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next()
    {
        skip_blank();
        const std::size_t start = pos_;
        if (pos_ >= text_.size()) return {Tok::End, start, {}};
        const char c = text_[pos_];
        if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
            pos_ += 2;
            return {Tok::Arrow, start, text_.substr(start, 2)};
        }
        if (c == '&') return single(Tok::Amp);
        if (c == '(') return single(Tok::LParen);
        if (c == ')') return single(Tok::RParen);
        if (c == '?') return single(Tok::Question);
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < text_.size()
                   && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            return {Tok::Word, start, text_.substr(start, pos_ - start)};
        }
        throw ParseError("unexpected character " + quote(text_.substr(pos_, 1)), pos_,
                         {"->", "&", "(", ")", "?", "identifier"});
    }

private:
    Token single(Tok kind)
    {
        const std::size_t start = pos_++;
        return {kind, start, text_.substr(start, 1)};
    }

    void skip_blank()
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
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

bool is_word(const Token& t, std::string_view w) { return t.kind == Tok::Word && t.text == w; }

/// Returns the atom index of a `p<digits>` word.
std::optional<std::size_t> atom_word(std::string_view w)
{
    if (w.size() < 2 || w[0] != 'p') return std::nullopt;
    std::size_t value = 0;
    const auto* first = w.data() + 1;
    const auto* last = w.data() + w.size();
    for (const auto* it = first; it != last; ++it) {
        if (!std::isdigit(static_cast<unsigned char>(*it))) return std::nullopt;
    }
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) return std::nullopt;
    return value;
}

class Parser {
public:
    explicit Parser(std::string_view text) : lexer_(text) { advance(); }

    Formula parse()
    {
        Formula f = implication();
        if (cur_.kind != Tok::End) fail("unexpected trailing input", {"->", "ior", "or", "&", "end of input"});
        return f;
    }

private:
    void advance() { cur_ = lexer_.next(); }

    [[noreturn]] void fail(const std::string& why, std::vector<std::string> expected) const
    {
        std::string msg = why;
        if (cur_.kind == Tok::End) {
            msg += " at end of input";
        } else {
            msg += " at " + quote(cur_.text);
        }
        throw ParseError(msg, cur_.offset, std::move(expected));
    }

    struct DepthGuard {
        explicit DepthGuard(Parser& p) : parser(p)
        {
            if (++parser.depth_ > kMaxNesting) parser.fail("formula nested too deeply", {});
        }
        ~DepthGuard() { --parser.depth_; }
        Parser& parser;
    };

    Formula implication()
    {
        DepthGuard guard(*this);
        Formula lhs = disjunction();
        if (cur_.kind != Tok::Arrow) return lhs;
        advance();
        Formula rhs = implication();
        return Formula::implies(std::move(lhs), std::move(rhs));
    }

    Formula disjunction()
    {
        Formula acc = conjunction();
        std::string_view family;
        while (is_word(cur_, "ior") || is_word(cur_, "or")) {
            if (!family.empty() && cur_.text != family) {
                fail("'ior' and 'or' cannot be mixed without parentheses", {std::string(family), "->", ")"});
            }
            family = cur_.text;
            advance();
            Formula rhs = conjunction();
            acc = family == "ior" ? Formula::ivee(std::move(acc), std::move(rhs))
                                  : Formula::classical_or(std::move(acc), std::move(rhs));
        }
        return acc;
    }

    Formula conjunction()
    {
        Formula acc = unary();
        while (cur_.kind == Tok::Amp) {
            advance();
            acc = Formula::conj(std::move(acc), unary());
        }
        return acc;
    }

    Formula unary()
    {
        DepthGuard guard(*this);
        if (cur_.kind == Tok::Question) {
            advance();
            return Formula::question(unary());
        }
        if (is_word(cur_, "not")) {
            advance();
            return Formula::negation(unary());
        }
        if (is_word(cur_, "box")) {
            advance();
            return Formula::box(unary());
        }
        if (is_word(cur_, "wbox")) {
            advance();
            return Formula::wbox(unary());
        }
        return primary();
    }

    Formula primary()
    {
        if (cur_.kind == Tok::LParen) {
            advance();
            Formula inner = implication();
            if (cur_.kind != Tok::RParen) fail("expected ')'", {")", "->", "ior", "or", "&"});
            advance();
            return inner;
        }
        if (is_word(cur_, "bot")) {
            advance();
            return Formula::bottom();
        }
        if (cur_.kind == Tok::Word) {
            if (auto index = atom_word(cur_.text)) {
                advance();
                return Formula::atom(*index);
            }
            fail("unknown identifier", kOperandStart);
        }
        fail("expected a formula", kOperandStart);
    }

    Lexer lexer_;
    Token cur_{Tok::End, 0, {}};
    std::size_t depth_ = 0;
};

} // namespace

ParseError::ParseError(const std::string& what, std::size_t offset, std::vector<std::string> expected)
    : Error("offset " + std::to_string(offset) + ": " + what), offset_(offset), expected_(std::move(expected))
{
}

Formula parse_formula(std::string_view text)
{
    return Parser(text).parse();
}

} // namespace inqmc
