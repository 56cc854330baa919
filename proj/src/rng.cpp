#include "fdonsker/rng.hpp"

#include <cmath>
#include <numbers>

namespace fdonsker {

namespace {

constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;
constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
    const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(p >> 32);
    lo = static_cast<std::uint32_t>(p);
}

inline void philox_round(std::uint32_t c[4], const std::uint32_t k[2]) {
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kPhiloxM0, c[0], hi0, lo0);
    mulhilo(kPhiloxM1, c[2], hi1, lo1);
    const std::uint32_t n0 = hi1 ^ c[1] ^ k[0];
    const std::uint32_t n1 = lo1;
    const std::uint32_t n2 = hi0 ^ c[3] ^ k[1];
    const std::uint32_t n3 = lo0;
    c[0] = n0;
    c[1] = n1;
    c[2] = n2;
    c[3] = n3;
}

// Ten rounds of Philox 4x32 with the standard Weyl key schedule.
inline void philox10(std::uint32_t c[4], std::uint32_t k0, std::uint32_t k1) {
    std::uint32_t k[2] = {k0, k1};
    for (int r = 0; r < 10; ++r) {
        philox_round(c, k);
        k[0] += kPhiloxW0;
        k[1] += kPhiloxW1;
    }
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id) {}

void RngStream::refill() {
    std::uint32_t c[4] = {
        static_cast<std::uint32_t>(block_),
        static_cast<std::uint32_t>(block_ >> 32),
        static_cast<std::uint32_t>(stream_id_),
        static_cast<std::uint32_t>(stream_id_ >> 32),
    };
    philox10(c, static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32));
    buf_[0] = (static_cast<std::uint64_t>(c[1]) << 32) | c[0];
    buf_[1] = (static_cast<std::uint64_t>(c[3]) << 32) | c[2];
    buf_pos_ = 0;
    ++block_;
}

std::uint64_t RngStream::next_u64() {
    if (buf_pos_ >= 2) refill();
    return buf_[buf_pos_++];
}

double RngStream::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::next_open_double() {
    return 1.0 - next_double();
}

double RngStream::next_gaussian() {
    const double u1 = next_open_double();
    const double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace fdonsker
