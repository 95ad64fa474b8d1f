#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace gadgetforge {

// mt19937_64 plus integer draws that do not depend on the standard library's
// distribution implementations, so seeded outputs match across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, bound). bound must be positive.
    auto below(std::uint64_t bound) -> std::uint64_t
    {
        const auto limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    // Uniform in [lo, hi].
    auto between(std::uint64_t lo, std::uint64_t hi) -> std::uint64_t { return lo + below(hi - lo + 1); }

    template <typename T>
    void shuffle(std::vector<T> &items)
    {
        for (std::size_t i = items.size(); i > 1; --i)
            std::swap(items[i - 1], items[below(i)]);
    }

    // k distinct values from [0, n), sorted.
    auto sample(std::uint64_t n, std::uint64_t k) -> std::vector<std::uint64_t>;

private:
    std::mt19937_64 engine_;
};

} // namespace gadgetforge
