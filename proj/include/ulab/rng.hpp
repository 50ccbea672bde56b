#pragma once

#include <cstdint>
#include <random>

namespace ulab {

/// SplitMix64 step. Bijective on uint64, so distinct inputs give distinct
/// outputs; used both as a seed scrambler and for derived-stream seeding.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Deterministic per-run seed for sweep cell (i, j), run r.
///
/// The cell index is folded into a single counter and passed through
/// splitmix64, which is a bijection: within one sweep (fixed base seed and
/// grid shape) all derived seeds are distinct by construction.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t i, std::uint64_t j,
                              std::uint64_t run, std::uint64_t runs_per_cell,
                              std::uint64_t cells_per_row) {
    const std::uint64_t counter = (i * cells_per_row + j) * runs_per_cell + run;
    return splitmix64(splitmix64(base) + counter);
}

/// Derive an independent sub-stream seed (e.g. matrix vs signal of one run).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
    return splitmix64(seed ^ splitmix64(salt));
}

/// Portable random stream.
///
/// Engine is std::mt19937_64, whose output sequence is pinned by the C++
/// standard. The standard *distributions* are not portable, so uniforms are
/// produced by the 53-bit shift conversion and normals by Box-Muller; both
/// reproduce bit-for-bit across platforms for a fixed seed.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on [0, 1).
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller; one pair per two uniforms, spare cached.
    double normal();

    /// Uniform integer in [0, bound) by rejection (unbiased).
    std::uint64_t below(std::uint64_t bound);

  private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace ulab
