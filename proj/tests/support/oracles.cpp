// SPDX-License-Identifier: Apache-2.0
#include "support/oracles.hpp"

#include <vector>

namespace qinv::oracles {

namespace {

// reduce v mod squares of p so that val_p(v) is 0 or 1
i64 strip_square_p(i64 v, i64 p) {
    while (v % (p * p) == 0) v /= p * p;
    return v;
}

i64 ipow(i64 b, int e) {
    i64 r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace

bool hensel_solubility(i64 a, i64 b, i64 p) {
    a = strip_square_p(a, p);
    b = strip_square_p(b, p);
    // After reduction the coefficient valuations are <= 1, so any primitive
    // solution mod p^k has a gradient entry of valuation <= 2 (p = 2) or <= 1
    // (p odd); k = 8 resp. 3 leaves room for the 2t+1 lifting bound, and a
    // Q_p-point conversely scales to a primitive solution mod p^k.
    const int k = p == 2 ? 8 : 3;
    const i64 M = ipow(p, k);
    std::vector<char> is_square(std::size_t(M), 0), is_unit_square(std::size_t(M), 0);
    for (i64 z = 0; z < M; ++z) {
        i64 w = (z * z) % M;
        is_square[std::size_t(w)] = 1;
        if (z % p != 0) is_unit_square[std::size_t(w)] = 1;
    }
    auto md = [&](i64 v) { return ((v % M) + M) % M; };
    for (i64 x = 0; x < M; ++x)
        for (i64 y = 0; y < M; ++y) {
            i64 w = md(a * x * x + b * y * y);
            if (x % p != 0 || y % p != 0) {
                if (is_square[std::size_t(w)]) return true;  // (x,y) already primitive
            } else {
                if (is_unit_square[std::size_t(w)]) return true;  // primitivity via unit z
            }
        }
    return false;
}

bool real_solubility(i64 a, i64 b) { return a > 0 || b > 0; }

bool has_small_rational_zero(const std::vector<i64>& coeffs, i64 height) {
    const std::size_t n = coeffs.size();
    std::vector<i64> x(n, -height);
    while (true) {
        i64 v = 0;
        bool nonzero = false;
        for (std::size_t i = 0; i < n; ++i) {
            v += coeffs[i] * x[i] * x[i];
            if (x[i] != 0) nonzero = true;
        }
        if (nonzero && v == 0) return true;
        std::size_t pos = 0;
        while (pos < n && ++x[pos] > height) x[pos++] = -height;
        if (pos == n) return false;
    }
}

}  // namespace qinv::oracles
