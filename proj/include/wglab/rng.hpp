#pragma once

#include <array>
#include <cstdint>

namespace wglab {

// Identifies one reproducible random stream. Streams with the same seed and
// different stream_id are independent; the same pair always replays the same
// sequence.
struct RngState {
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;

  friend bool operator==(const RngState&, const RngState&) = default;
};

// Philox4x32-10 block function. Exposed for known-answer tests.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

// Counter-based generator: the key is the seed, the upper half of the counter
// is the stream id and the lower half counts blocks. Normals come from
// Box-Muller on pairs of uniforms.
class RandomStream {
 public:
  explicit RandomStream(RngState state);

  // Uniform on the open interval (0, 1) with 53 random bits.
  double uniform();
  // Standard normal variate.
  double normal();

  const RngState& state() const noexcept { return state_; }

 private:
  std::uint64_t next_u64();

  RngState state_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  int buffered_words_ = 0;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace wglab
