#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace degsplit {

/// splitmix64 step; used to derive independent substream seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed for substream `index` of a master seed.  Every parallel or repeated
/// computation (trial k, sweep cell k) draws from stream(seed, k), so results
/// do not depend on scheduling or worker count.
constexpr std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed ^ splitmix64(index + 1));
}

/// Seeded generator with portable bounded sampling.  std::mt19937_64 output
/// is fully specified by the standard; bounded draws use rejection sampling
/// instead of std::uniform_int_distribution (whose mapping is
/// implementation-defined), so identical seeds reproduce identical instances
/// on every platform.
class rng {
  public:
    explicit rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    /// Uniform draw from [0, n).  Rejection-sampled, bias-free.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("rng::below: empty range");
        const std::uint64_t reject = (0 - n) % n;  // 2^64 mod n
        std::uint64_t x = gen_();
        while (x < reject) x = gen_();
        return x % n;
    }

    bool coin() { return (gen_() & 1ULL) != 0; }

  private:
    std::mt19937_64 gen_;
};

}  // namespace degsplit
