#pragma once

#include <cstdint>
#include <stdexcept>

namespace catlat {

/// n-th Catalan number, C_n = binom(2n, n) / (n + 1). Exact in 64 bits for
/// n <= 30; every intermediate product below stays integral.
inline std::int64_t catalan_number(int n) {
    if (n < 0 || n > 30) throw std::out_of_range("catalan_number: n must be in [0, 30]");
    std::int64_t c = 1;
    for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

}  // namespace catlat
