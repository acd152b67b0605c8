#ifndef DOTWEB_BINOMIAL_HPP
#define DOTWEB_BINOMIAL_HPP

#include <cmath>
#include <cstdint>

namespace dotweb {

// Binomial coefficient C(x, y) with the extended convention
//   C(x, y) = 0  when y < 0, y > x, or x < 0,
// which the shifted indices (n-k-1, m-2+j) of the closed-form
// coefficients rely on.  Integer-exact via 128-bit accumulation for
// x <= 64; log-gamma beyond that.
inline double binom(long long x, long long y) {
    if (x < 0 || y < 0 || y > x) return 0.0;
    if (y > x - y) y = x - y;
    if (y == 0) return 1.0;
    if (x <= 64) {
        unsigned __int128 acc = 1;
        for (long long i = 1; i <= y; ++i) {
            acc = acc * static_cast<unsigned __int128>(x - y + i);
            acc /= static_cast<unsigned __int128>(i);
        }
        return static_cast<double>(static_cast<std::uint64_t>(acc));
    }
    return std::round(std::exp(std::lgamma(static_cast<double>(x) + 1.0)
                               - std::lgamma(static_cast<double>(y) + 1.0)
                               - std::lgamma(static_cast<double>(x - y) + 1.0)));
}

} // namespace dotweb

#endif
