#pragma once

#include <cstdint>

namespace fdonsker {

/// Counter-based random stream (Philox 4x32-10, Salmon et al. 2011).
///
/// A stream is addressed by (master seed, stream id). Distinct ids under the
/// same seed key disjoint counter blocks, so any number of streams can be
/// consumed concurrently and the values drawn from one stream never depend on
/// what other streams did. Copying an RngStream copies its position; replaying
/// a copy replays the same values.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

    std::uint64_t next_u64();

    /// Uniform on [0, 1), 53-bit resolution.
    double next_double();

    /// Uniform on (0, 1]; safe as a log() argument.
    double next_open_double();

    /// Standard normal via the trigonometric Box-Muller transform.
    /// Consumes exactly two uniforms per call (no pair caching), so the
    /// draw layout of a stream is a pure function of the call sequence.
    double next_gaussian();

private:
    void refill();

    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::uint64_t block_ = 0;   // counter, advances once per Philox block
    std::uint64_t buf_[2] = {0, 0};
    int buf_pos_ = 2;           // 2 -> buffer exhausted
};

/// Stream id reserved for pilot estimation runs; replicate ids stay below it.
inline constexpr std::uint64_t kPilotStreamId = 0x8000000000000000ULL;

}  // namespace fdonsker
