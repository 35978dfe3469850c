// SPDX-License-Identifier: Apache-2.0
#ifndef QINV_NUMERIC_HPP
#define QINV_NUMERIC_HPP

#include <cstdint>
#include <numeric>
#include <vector>

#include "qinv/errors.hpp"

namespace qinv {

using i64 = std::int64_t;
using i128 = __int128;

bool is_prime(i64 n);

/// a^e mod m, m > 0, e >= 0.
i64 mod_pow(i64 a, i64 e, i64 m);

/// Legendre symbol (a|p), p an odd prime (checked).
int legendre(i64 a, i64 p);

/// Kronecker symbol (a|n) for any n (including n <= 0 and n even).
int kronecker(i64 a, i64 n);

/// Sign and sorted distinct prime factors of the squarefree part of a nonzero
/// rational num/den.  Trial division up to `bound`; a single leftover cofactor
/// in (bound, bound^2] is provably prime and accepted, anything beyond throws
/// ResourceLimit.
struct SquarefreePart {
    int sign = 1;
    std::vector<i64> primes;  // sorted, distinct
};
SquarefreePart squarefree_part(i64 num, i64 den = 1, i64 bound = 1000000);

/// Exact rational on checked 64-bit arithmetic.  Intermediates use __int128;
/// results that do not fit 64 bits throw ResourceLimit.
struct Frac {
    i64 num = 0;
    i64 den = 1;

    Frac() = default;
    Frac(i64 n) : num(n), den(1) {}
    Frac(i64 n, i64 d);

    bool is_zero() const { return num == 0; }
    bool is_integer() const { return den == 1; }

    Frac operator-() const { return Frac(-num, den); }
    Frac operator+(const Frac& o) const;
    Frac operator-(const Frac& o) const;
    Frac operator*(const Frac& o) const;
    Frac operator/(const Frac& o) const;
    bool operator==(const Frac& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Frac& o) const { return !(*this == o); }
};

/// Exact determinant of an integer matrix (fraction-free Bareiss elimination,
/// __int128 intermediates with overflow checks).
i128 integer_determinant(std::vector<std::vector<i64>> m);

}  // namespace qinv

#endif
