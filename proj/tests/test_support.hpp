#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "rsel/value_sequence.hpp"

namespace rsel::testing {

inline std::vector<std::int64_t> random_values(std::mt19937_64& rng, std::size_t n, std::int64_t alphabet) {
    std::uniform_int_distribution<std::int64_t> dist(0, alphabet - 1);
    std::vector<std::int64_t> values(n);
    for (auto& v : values)
        v = dist(rng);
    return values;
}

/// Calls f(values) for every array of length n over {0, .., alphabet - 1}.
template <typename F>
void for_each_array(std::size_t n, std::int64_t alphabet, F&& f) {
    std::vector<std::int64_t> values(n, 0);
    while (true) {
        f(values);
        std::size_t t = 0;
        while (t < n && ++values[t] == alphabet)
            values[t++] = 0;
        if (t == n)
            return;
    }
}

}  // namespace rsel::testing
