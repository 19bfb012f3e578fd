#include "inqmc/state.hpp"

#include "inqmc/error.hpp"

namespace inqmc {

InfoState::InfoState(std::size_t width, std::uint64_t bits) : width_(width), bits_(bits & low_mask(width))
{
    if (width > kMaxWorlds) {
        throw ValidationError("state width " + std::to_string(width) + " exceeds the supported maximum of "
                              + std::to_string(kMaxWorlds) + " worlds");
    }
}

InfoState InfoState::full(std::size_t width)
{
    return InfoState(width, low_mask(width));
}

InfoState InfoState::from_string(std::string_view text)
{
    if (text.size() > kMaxWorlds) {
        throw CodecError("state bitstring longer than " + std::to_string(kMaxWorlds) + " characters");
    }
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1') {
            bits |= std::uint64_t{1} << i;
        } else if (text[i] != '0') {
            throw CodecError("invalid character '" + std::string(1, text[i]) + "' at position " + std::to_string(i)
                             + " of state bitstring");
        }
    }
    return InfoState(text.size(), bits);
}

InfoState& InfoState::insert(std::size_t world)
{
    if (world < width_) bits_ |= std::uint64_t{1} << world;
    return *this;
}

InfoState& InfoState::erase(std::size_t world)
{
    if (world < width_) bits_ &= ~(std::uint64_t{1} << world);
    return *this;
}

std::string InfoState::to_string() const
{
    std::string out(width_, '0');
    for (std::size_t i = 0; i < width_; ++i) {
        if (contains(i)) out[i] = '1';
    }
    return out;
}

} // namespace inqmc
