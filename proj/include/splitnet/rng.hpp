#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "splitnet/rational.hpp"

namespace splitnet {

// Deterministic across platforms: mt19937_64 plus hand-rolled draws,
// never std::uniform_int_distribution (implementation-defined sequences).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, bound). bound >= 1.
    std::uint64_t uniform(std::uint64_t bound) {
        const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
        std::uint64_t draw;
        do {
            draw = engine_();
        } while (draw >= limit);
        return draw % bound;
    }

    bool coin() { return (engine_() & 1) != 0; }

    // Uniform over {1/2, 1, 3/2, ..., max_halves/2}.
    Rat positive_rational(std::uint64_t max_halves = 8) {
        return Rat(BigInt(1 + uniform(max_halves)), BigInt(2));
    }

    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(uniform(i));
            std::swap(items[i - 1], items[j]);
        }
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace splitnet
