#include "stratolink/random.hpp"

namespace stratolink {

namespace {

constexpr std::uint64_t kMultiplier0 = 0xD2E7470EE14C6C93ULL;
constexpr std::uint64_t kMultiplier1 = 0xCA5A826395121157ULL;
constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;
constexpr int kRounds = 10;

__extension__ typedef unsigned __int128 uint128;

inline void mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi, std::uint64_t& lo) noexcept
{
    const uint128 product = static_cast<uint128>(a) * b;
    hi = static_cast<std::uint64_t>(product >> 64);
    lo = static_cast<std::uint64_t>(product);
}

}  // namespace

Philox4x64::Counter Philox4x64::generate(Counter x, Key key) noexcept
{
    for (int round = 0; round < kRounds; ++round) {
        if (round > 0) {
            key[0] += kWeyl0;
            key[1] += kWeyl1;
        }
        std::uint64_t hi0, lo0, hi1, lo1;
        mulhilo(kMultiplier0, x[0], hi0, lo0);
        mulhilo(kMultiplier1, x[2], hi1, lo1);
        x = {hi1 ^ x[1] ^ key[0], lo1, hi0 ^ x[3] ^ key[1], lo0};
    }
    return x;
}

PhiloxStream::PhiloxStream(std::uint64_t seed, std::uint64_t stream) noexcept : key_{seed, stream} {}

PhiloxStream::result_type PhiloxStream::operator()() noexcept
{
    if (used_ == 4) {
        block_ = Philox4x64::generate(counter_, key_);
        // 256-bit counter increment
        for (auto& word : counter_) {
            if (++word != 0) {
                break;
            }
        }
        used_ = 0;
    }
    return block_[used_++];
}

std::array<double, 4> TrialRandom::block(std::uint64_t trial, std::uint64_t block) const noexcept
{
    const auto bits = Philox4x64::generate({trial, block, 0, 0}, key_);
    return {to_unit_interval(bits[0]), to_unit_interval(bits[1]), to_unit_interval(bits[2]),
            to_unit_interval(bits[3])};
}

double TrialRandom::uniform(std::uint64_t trial, std::uint64_t hop) const noexcept
{
    return block(trial, hop / 4)[hop % 4];
}

}  // namespace stratolink
