#include "inqmc/error.hpp"
#include "inqmc/model.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace inqmc {

namespace {

struct Line {
    std::size_t offset;  // byte offset of the first token
    std::vector<std::string_view> tokens;
    std::vector<std::size_t> token_offsets;
};

std::vector<Line> split_lines(std::string_view text)
{
    std::vector<Line> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);

        Line line{pos, {}, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
            const std::size_t start = i;
            while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
            if (i > start) {
                line.tokens.push_back(raw.substr(start, i - start));
                line.token_offsets.push_back(pos + start);
            }
        }
        if (!line.tokens.empty()) {
            line.offset = line.token_offsets.front();
            lines.push_back(std::move(line));
        }
        pos = end + 1;
    }
    return lines;
}

std::size_t parse_count(const Line& line, std::size_t index)
{
    const std::string_view tok = line.tokens[index];
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError("expected a non-negative integer, found '" + std::string(tok) + "'",
                         line.token_offsets[index], {"<integer>"});
    }
    return value;
}

const Line& expect_line(const std::vector<Line>& lines, std::size_t index, std::string_view keyword,
                        std::size_t arity, std::size_t eof_offset)
{
    if (index >= lines.size()) {
        throw ParseError("unexpected end of model file", eof_offset, {std::string(keyword)});
    }
    const Line& line = lines[index];
    if (line.tokens.front() != keyword) {
        throw ParseError("expected '" + std::string(keyword) + "' line, found '" + std::string(line.tokens.front())
                             + "'",
                         line.offset, {std::string(keyword)});
    }
    if (line.tokens.size() > arity + 1) {
        throw ParseError("too many fields on '" + std::string(keyword) + "' line", line.token_offsets[arity + 1],
                         {"end of line"});
    }
    return line;
}

} // namespace

std::string render_model(const InformationModel& model)
{
    const ModelEncoding enc = encode_model(model);
    std::ostringstream out;
    out << "inqmodel v1\n";
    out << "atoms " << model.atoms << '\n';
    out << "worlds " << model.worlds << '\n';
    out << "delta " << enc.delta << '\n';
    for (std::size_t i = 0; i < enc.epsilons.size(); ++i) out << "epsilon " << i << ' ' << enc.epsilons[i] << '\n';
    return out.str();
}

InformationModel parse_model(std::string_view text)
{
    const std::vector<Line> lines = split_lines(text);
    const std::size_t eof = text.size();

    if (lines.empty()) throw ParseError("empty model file", 0, {"inqmodel"});
    const Line& header = lines[0];
    if (header.tokens.size() != 2 || header.tokens[0] != "inqmodel" || header.tokens[1] != "v1") {
        throw ParseError("expected header 'inqmodel v1'", header.offset, {"inqmodel v1"});
    }

    const Line& atoms_line = expect_line(lines, 1, "atoms", 1, eof);
    if (atoms_line.tokens.size() != 2) throw ParseError("missing atom count", atoms_line.offset, {"<integer>"});
    const std::size_t atoms = parse_count(atoms_line, 1);

    const Line& worlds_line = expect_line(lines, 2, "worlds", 1, eof);
    if (worlds_line.tokens.size() != 2) throw ParseError("missing world count", worlds_line.offset, {"<integer>"});
    const std::size_t worlds = parse_count(worlds_line, 1);

    const Line& delta_line = expect_line(lines, 3, "delta", 1, eof);
    const std::string_view delta = delta_line.tokens.size() == 2 ? delta_line.tokens[1] : std::string_view{};

    std::vector<std::string> epsilons;
    for (std::size_t k = 4; k < lines.size(); ++k) {
        const Line& line = expect_line(lines, k, "epsilon", 2, eof);
        if (line.tokens.size() != 3) {
            throw ParseError("expected 'epsilon <i> <bitstring>'", line.offset, {"<integer>", "<bitstring>"});
        }
        const std::size_t index = parse_count(line, 1);
        if (index != epsilons.size()) {
            throw ParseError("epsilon lines must appear in ascending world order; expected index "
                                 + std::to_string(epsilons.size()),
                             line.token_offsets[1], {std::to_string(epsilons.size())});
        }
        epsilons.emplace_back(line.tokens[2]);
    }
    if (!epsilons.empty() && epsilons.size() != worlds) {
        throw ParseError("expected " + std::to_string(worlds) + " epsilon lines, found "
                             + std::to_string(epsilons.size()),
                         eof, {"epsilon"});
    }
    if (worlds == 0) throw ValidationError("worlds: a model needs at least one world");
    return decode_model(delta, epsilons, worlds, atoms);
}

} // namespace inqmc
