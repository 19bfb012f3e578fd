#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace inqmc {

/// Largest supported world count. States are stored in a single machine word.
inline constexpr std::size_t kMaxWorlds = 64;

/// A set of worlds over a model with `width()` worlds. Bit i is world w_i.
///
/// The textual form is a bitstring whose leftmost character is world 0,
/// so {w0, w2} over three worlds reads "101".
class InfoState {
public:
    InfoState() = default;
    explicit InfoState(std::size_t width, std::uint64_t bits = 0);

    static InfoState full(std::size_t width);
    /// Throws CodecError on characters other than '0'/'1' or excess length.
    static InfoState from_string(std::string_view bits);

    std::size_t width() const noexcept { return width_; }
    std::uint64_t bits() const noexcept { return bits_; }

    bool contains(std::size_t world) const noexcept { return (bits_ >> world) & 1U; }
    std::size_t count() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
    bool empty() const noexcept { return bits_ == 0; }
    bool is_subset_of(const InfoState& other) const noexcept { return (bits_ & ~other.bits_) == 0; }

    InfoState& insert(std::size_t world);
    InfoState& erase(std::size_t world);

    InfoState with_bits(std::uint64_t bits) const { return InfoState(width_, bits); }

    friend InfoState operator|(const InfoState& a, const InfoState& b) { return InfoState(a.width_, a.bits_ | b.bits_); }
    friend InfoState operator&(const InfoState& a, const InfoState& b) { return InfoState(a.width_, a.bits_ & b.bits_); }
    friend bool operator==(const InfoState&, const InfoState&) = default;

    std::string to_string() const;

private:
    std::size_t width_ = 0;
    std::uint64_t bits_ = 0;
};

/// Mask with the low `width` bits set.
constexpr std::uint64_t low_mask(std::size_t width) noexcept
{
    return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

/// Calls `fn(t)` for every subset t of `set` (as raw bits), including `set`
/// itself and the empty set. Bits outside `set` are never produced.
template <typename Fn>
void for_each_subset(std::uint64_t set, Fn&& fn)
{
    std::uint64_t t = set;
    while (true) {
        fn(t);
        if (t == 0) break;
        t = (t - 1) & set;
    }
}

/// Short-circuiting variant: stops and returns false as soon as `pred`
/// returns false for some subset; returns true otherwise.
template <typename Pred>
bool all_subsets(std::uint64_t set, Pred&& pred)
{
    std::uint64_t t = set;
    while (true) {
        if (!pred(t)) return false;
        if (t == 0) return true;
        t = (t - 1) & set;
    }
}

} // namespace inqmc
