// SPDX-License-Identifier: Apache-2.0
#include "qinv/numeric.hpp"

#include <algorithm>
#include <cstdlib>

namespace qinv {

bool is_prime(i64 n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (i64 d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

i64 mod_pow(i64 a, i64 e, i64 m) {
    if (m <= 0) throw DomainError("mod_pow: modulus must be positive");
    a %= m;
    if (a < 0) a += m;
    i64 r = 1;
    while (e > 0) {
        if (e & 1) r = i64((i128(r) * a) % m);
        a = i64((i128(a) * a) % m);
        e >>= 1;
    }
    return r;
}

int legendre(i64 a, i64 p) {
    if (p == 2 || !is_prime(p)) throw DomainError("legendre: p must be an odd prime");
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    return mod_pow(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

int kronecker(i64 a, i64 n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    // strip factors of 2 from n; (a|2) = 0, +-1 by a mod 8
    while (n % 2 == 0) {
        n /= 2;
        if (a % 2 == 0) return 0;
        i64 r = a % 8;
        if (r < 0) r += 8;
        if (r == 3 || r == 5) result = -result;
    }
    // now n odd positive: Jacobi symbol by reciprocity
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            i64 r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

SquarefreePart squarefree_part(i64 num, i64 den, i64 bound) {
    if (num == 0 || den == 0) throw DegenerateInput("squarefree_part: zero value");
    if (num == INT64_MIN || den == INT64_MIN)
        throw ResourceLimit("squarefree_part: magnitude out of range");
    SquarefreePart out;
    if (num < 0) { out.sign = -out.sign; num = -num; }
    if (den < 0) { out.sign = -out.sign; den = -den; }
    auto absorb = [&](i64 v) {
        for (i64 d = 2; d * d <= v && d <= bound; d == 2 ? d++ : d += 2) {
            if (v % d) continue;
            int e = 0;
            while (v % d == 0) { v /= d; ++e; }
            if (e & 1) {
                auto it = std::find(out.primes.begin(), out.primes.end(), d);
                if (it == out.primes.end()) out.primes.push_back(d);
                else out.primes.erase(it);
            }
        }
        if (v > 1) {
            // no prime factor <= bound, so v <= bound^2 forces v prime
            if (v > bound * bound)
                throw ResourceLimit("squarefree_part: cofactor exceeds factorization bound");
            auto it = std::find(out.primes.begin(), out.primes.end(), v);
            if (it == out.primes.end()) out.primes.push_back(v);
            else out.primes.erase(it);
        }
    };
    absorb(num);
    absorb(den);  // 1/q and q lie in the same square class
    std::sort(out.primes.begin(), out.primes.end());
    return out;
}

namespace {

i64 checked_i64(i128 v, const char* what) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN)) throw ResourceLimit(what);
    return i64(v);
}

Frac make_frac(i128 n, i128 d) {
    if (d == 0) throw DegenerateInput("Frac: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    i128 a = n < 0 ? -n : n, b = d;
    while (b) { i128 t = a % b; a = b; b = t; }
    if (a == 0) a = 1;
    Frac f;
    f.num = checked_i64(n / a, "Frac: numerator overflow");
    f.den = checked_i64(d / a, "Frac: denominator overflow");
    return f;
}

}  // namespace

Frac::Frac(i64 n, i64 d) { *this = make_frac(n, d); }

Frac Frac::operator+(const Frac& o) const {
    return make_frac(i128(num) * o.den + i128(o.num) * den, i128(den) * o.den);
}
Frac Frac::operator-(const Frac& o) const {
    return make_frac(i128(num) * o.den - i128(o.num) * den, i128(den) * o.den);
}
Frac Frac::operator*(const Frac& o) const {
    return make_frac(i128(num) * o.num, i128(den) * o.den);
}
Frac Frac::operator/(const Frac& o) const {
    if (o.num == 0) throw DegenerateInput("Frac: division by zero");
    return make_frac(i128(num) * o.den, i128(den) * o.num);
}

i128 integer_determinant(std::vector<std::vector<i64>> m) {
    const std::size_t n = m.size();
    std::vector<std::vector<i128>> a(n, std::vector<i128>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw ValidationError("integer_determinant: matrix not square");
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    }
    i128 sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return n == 0 ? 1 : sign * a[n - 1][n - 1];
}

}  // namespace qinv
