#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace orbint {

std::uint64_t splitmix64(std::uint64_t x);

/// Independent stream seed for sample `index` of a run seeded with `seed`.
inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(splitmix64(seed) ^ (index * 0x9E3779B97F4A7C15ULL + 0x632BE59BD9B4E019ULL));
}

/// Deterministic generator; draws do not depend on the standard library's
/// distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [lo, hi].
    long uniform(long lo, long hi);

    template <class T>
    const T& pick(const std::vector<T>& pool) {
        return pool[static_cast<std::size_t>(uniform(0, static_cast<long>(pool.size()) - 1))];
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace orbint
