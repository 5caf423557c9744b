#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace stratolink {

/// Philox-4x64-10 counter-based block cipher (Salmon et al., SC'11).
/// Every (counter, key) pair maps to an independent block of four 64-bit
/// words, so any draw can be recomputed from its coordinates alone.
struct Philox4x64 {
    using Counter = std::array<std::uint64_t, 4>;
    using Key = std::array<std::uint64_t, 2>;

    static Counter generate(Counter counter, Key key) noexcept;
};

/// Top 53 bits of `bits` scaled into [0, 1).
constexpr double to_unit_interval(std::uint64_t bits) noexcept
{
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Sequential uniform random bit generator walking the Philox counter space
/// for a fixed key. Satisfies std::uniform_random_bit_generator.
class PhiloxStream {
public:
    using result_type = std::uint64_t;

    explicit PhiloxStream(std::uint64_t seed, std::uint64_t stream = 0) noexcept;

    result_type operator()() noexcept;

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

private:
    Philox4x64::Key key_;
    Philox4x64::Counter counter_{};
    Philox4x64::Counter block_{};
    unsigned used_ = 4;
};

/// Uniform draws addressed by (trial, hop) under a fixed (seed, stream) key.
/// Hops are packed four to a Philox block: hop h lives in lane h % 4 of the
/// block with counter {trial, h / 4, 0, 0}.
class TrialRandom {
public:
    TrialRandom(std::uint64_t seed, std::uint64_t stream) noexcept : key_{seed, stream} {}

    /// The four uniforms of block `block` for `trial`, covering hops 4*block .. 4*block+3.
    std::array<double, 4> block(std::uint64_t trial, std::uint64_t block) const noexcept;

    double uniform(std::uint64_t trial, std::uint64_t hop) const noexcept;

private:
    Philox4x64::Key key_;
};

}  // namespace stratolink
