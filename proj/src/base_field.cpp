// SPDX-License-Identifier: Apache-2.0
#include "qinv/base_field.hpp"

#include <algorithm>
#include <cassert>

namespace qinv {

FieldDescriptor FieldDescriptor::rationals() {
    return FieldDescriptor{FieldKind::Rationals, 0, 0, true, true};
}

FieldDescriptor FieldDescriptor::reals() {
    return FieldDescriptor{FieldKind::Reals, 0, 0, true, true};
}

FieldDescriptor FieldDescriptor::padic(i64 p) { return padic(p, least_nonresidue(p)); }

FieldDescriptor FieldDescriptor::padic(i64 p, i64 epsilon_override) {
    if (p == 2 || !is_prime(p)) throw DomainError("padic: p must be an odd prime");
    if (epsilon_override % p == 0 || legendre(epsilon_override, p) != -1)
        throw DomainError("padic: epsilon must be a non-residue unit mod p");
    return FieldDescriptor{FieldKind::Padic, p, epsilon_override, true, true};
}

FieldDescriptor FieldDescriptor::padic2() {
    return FieldDescriptor{FieldKind::Padic2, 2, 0, true, true};
}

std::vector<Ordering> FieldDescriptor::orderings() const {
    if (formally_real()) return {Ordering{}};
    return {};
}

std::string FieldDescriptor::spec_string() const {
    switch (kind) {
        case FieldKind::Rationals: return "Q";
        case FieldKind::Reals: return "R";
        case FieldKind::Padic: return "Qp:" + std::to_string(p);
        case FieldKind::Padic2: return "Q2";
    }
    return {};
}

i64 least_nonresidue(i64 p) {
    for (i64 a = 2; a < p; ++a)
        if (legendre(a, p) == -1) return a;
    throw DomainError("least_nonresidue: no non-residue found");
}

std::string Place::token() const {
    std::string base = kind == Kind::Real ? "inf" : std::to_string(p);
    if (slot) base += "." + std::to_string(slot);
    return base;
}

Place unique_place(const FieldDescriptor& field) {
    switch (field.kind) {
        case FieldKind::Reals: return Place::real();
        case FieldKind::Padic:
        case FieldKind::Padic2: return Place::finite(field.p);
        case FieldKind::Rationals: break;
    }
    throw DomainError("unique_place: Q has infinitely many places");
}

SquareClass SquareClass::one(const FieldDescriptor& field) {
    SquareClass c;
    c.base = field;
    return c;
}

bool SquareClass::is_trivial() const {
    switch (base.kind) {
        case FieldKind::Rationals: return sign == 1 && primes.empty();
        case FieldKind::Reals: return sign == 1;
        case FieldKind::Padic: return !eps && !pi;
        case FieldKind::Padic2: break;
    }
    throw DomainError("SquareClass: Q2 carries no square-class arithmetic here");
}

SquareClass SquareClass::times(const SquareClass& o) const {
    if (base != o.base) throw DomainError("SquareClass::times: mixed base fields");
    SquareClass r;
    r.base = base;
    switch (base.kind) {
        case FieldKind::Rationals: {
            r.sign = sign * o.sign;
            std::set_symmetric_difference(primes.begin(), primes.end(), o.primes.begin(),
                                          o.primes.end(), std::back_inserter(r.primes));
            return r;
        }
        case FieldKind::Reals:
            r.sign = sign * o.sign;
            return r;
        case FieldKind::Padic:
            r.eps = eps != o.eps;
            r.pi = pi != o.pi;
            return r;
        case FieldKind::Padic2: break;
    }
    throw DomainError("SquareClass::times: unsupported field");
}

i64 SquareClass::repr() const {
    switch (base.kind) {
        case FieldKind::Rationals: {
            i128 v = sign;
            for (i64 q : primes) {
                v *= q;
                if (v > INT64_MAX || v < INT64_MIN)
                    throw ResourceLimit("SquareClass::repr: overflow");
            }
            return i64(v);
        }
        case FieldKind::Reals: return sign;
        case FieldKind::Padic: {
            i64 v = 1;
            if (eps) v *= base.epsilon;
            if (pi) v *= base.p;
            return v;
        }
        case FieldKind::Padic2: break;
    }
    throw DomainError("SquareClass::repr: unsupported field");
}

std::string SquareClass::token() const {
    switch (base.kind) {
        case FieldKind::Rationals: return std::to_string(repr());
        case FieldKind::Reals: return sign == 1 ? "1" : "-1";
        case FieldKind::Padic: {
            if (eps && pi) return "ep";
            if (eps) return "e";
            if (pi) return "p";
            return "1";
        }
        case FieldKind::Padic2: break;
    }
    throw DomainError("SquareClass::token: unsupported field");
}

bool SquareClass::operator==(const SquareClass& o) const {
    if (base != o.base) return false;
    switch (base.kind) {
        case FieldKind::Rationals: return sign == o.sign && primes == o.primes;
        case FieldKind::Reals: return sign == o.sign;
        case FieldKind::Padic: return eps == o.eps && pi == o.pi;
        case FieldKind::Padic2: return true;
    }
    return false;
}

bool SquareClass::operator<(const SquareClass& o) const {
    if (sign != o.sign) return sign > o.sign;
    if (eps != o.eps) return !eps;
    if (pi != o.pi) return !pi;
    return primes < o.primes;
}

SquareClass square_class(const FieldDescriptor& field, i64 value) {
    return square_class(field, value, 1);
}

SquareClass square_class(const FieldDescriptor& field, i64 num, i64 den) {
    if (num == 0 || den == 0) throw DegenerateInput("square_class: zero value");
    SquareClass c;
    c.base = field;
    switch (field.kind) {
        case FieldKind::Rationals: {
            auto sf = squarefree_part(num, den);
            c.sign = sf.sign;
            c.primes = std::move(sf.primes);
            return c;
        }
        case FieldKind::Reals:
            c.sign = (num < 0) != (den < 0) ? -1 : 1;
            return c;
        case FieldKind::Padic: {
            const i64 p = field.p;
            int val = 0;
            i64 u_num = num, u_den = den;
            while (u_num % p == 0) { u_num /= p; ++val; }
            while (u_den % p == 0) { u_den /= p; --val; }
            c.pi = (val % 2) != 0;
            // the unit residue of num/den is a square iff legendre(u_num*u_den) = 1
            i64 un = u_num % p, ud = u_den % p;
            c.eps = legendre(i64((i128(un) * ud) % p), p) == -1;
            return c;
        }
        case FieldKind::Padic2: break;
    }
    throw DomainError("square_class: Q2 square classes are not modeled (symbol-only field)");
}

namespace {

// valuation/unit data of a square class at a place of Q
struct LocalShape {
    int val = 0;     // 0 or 1 (squarefree)
    i64 unit = 1;    // unit part reduced mod m (m = p or 8), sign included
};

LocalShape local_shape(const SquareClass& a, i64 p, i64 m) {
    LocalShape s;
    i64 u = a.sign < 0 ? m - 1 : 1;
    for (i64 q : a.primes) {
        if (q == p) { s.val = 1; continue; }
        u = i64((i128(u) * (q % m)) % m);
    }
    s.unit = u;
    return s;
}

int hilbert_at_odd_prime(i64 p, int alpha, i64 u, int beta, i64 v) {
    int e = 0;
    if (alpha && beta && legendre(-1, p) == -1) e ^= 1;
    if (beta && legendre(u, p) == -1) e ^= 1;
    if (alpha && legendre(v, p) == -1) e ^= 1;
    return e ? -1 : 1;
}

int eps4(i64 u) { return int(((u - 1) / 2) & 1); }          // u odd
int omega8(i64 u) { i64 r = ((u % 8) + 8) % 8; return (r == 3 || r == 5) ? 1 : 0; }

int hilbert_at_two(int alpha, i64 u, int beta, i64 v) {
    // u, v odd residues mod 8 (positive)
    int e = (eps4(u) & eps4(v)) ^ (alpha & omega8(v)) ^ (beta & omega8(u));
    return e ? -1 : 1;
}

}  // namespace

int hilbert_symbol(const Place& v, const SquareClass& a, const SquareClass& b) {
    if (a.base != b.base) throw DomainError("hilbert_symbol: mixed base fields");
    if (a.base.kind != FieldKind::Rationals)
        throw DomainError("hilbert_symbol: place form expects classes over Q");
    if (v.slot != 0) throw DomainError("hilbert_symbol: not a place of Q");
    if (v.kind == Place::Kind::Real) return (a.sign < 0 && b.sign < 0) ? -1 : 1;
    if (v.p == 2) {
        auto sa = local_shape(a, 2, 8);
        auto sb = local_shape(b, 2, 8);
        return hilbert_at_two(sa.val, sa.unit, sb.val, sb.unit);
    }
    if (!is_prime(v.p)) throw DomainError("hilbert_symbol: place must be prime or inf");
    auto sa = local_shape(a, v.p, v.p);
    auto sb = local_shape(b, v.p, v.p);
    return hilbert_at_odd_prime(v.p, sa.val, sa.unit, sb.val, sb.unit);
}

int hilbert_symbol(const Place& v, i64 a, i64 b) {
    if (a == 0 || b == 0) throw DegenerateInput("hilbert_symbol: zero argument");
    auto Q = FieldDescriptor::rationals();
    return hilbert_symbol(v, square_class(Q, a), square_class(Q, b));
}

int hilbert_symbol(const FieldDescriptor& local_field, i64 a, i64 b) {
    if (a == 0 || b == 0) throw DegenerateInput("hilbert_symbol: zero argument");
    switch (local_field.kind) {
        case FieldKind::Reals: return (a < 0 && b < 0) ? -1 : 1;
        case FieldKind::Padic: {
            const i64 p = local_field.p;
            int alpha = 0, beta = 0;
            while (a % p == 0) { a /= p; alpha ^= 1; }
            while (b % p == 0) { b /= p; beta ^= 1; }
            return hilbert_at_odd_prime(p, alpha, ((a % p) + p) % p, beta, ((b % p) + p) % p);
        }
        case FieldKind::Padic2: {
            int alpha = 0, beta = 0;
            while (a % 2 == 0) { a /= 2; alpha ^= 1; }
            while (b % 2 == 0) { b /= 2; beta ^= 1; }
            return hilbert_at_two(alpha, ((a % 8) + 8) % 8, beta, ((b % 8) + 8) % 8);
        }
        case FieldKind::Rationals: break;
    }
    throw DomainError("hilbert_symbol: over Q a place is required");
}

int hilbert_symbol(const FieldDescriptor& local_field, const SquareClass& a, const SquareClass& b) {
    if (local_field.kind == FieldKind::Padic) {
        if (a.base != local_field || b.base != local_field)
            throw DomainError("hilbert_symbol: class/field mismatch");
        int alpha = a.pi ? 1 : 0, beta = b.pi ? 1 : 0;
        int e = 0;
        if (alpha && beta && legendre(-1, local_field.p) == -1) e ^= 1;
        if (beta && a.eps) e ^= 1;
        if (alpha && b.eps) e ^= 1;
        return e ? -1 : 1;
    }
    return hilbert_symbol(local_field, a.repr(), b.repr());
}

std::set<Place> hilbert_reciprocity_defect(const SquareClass& a, const SquareClass& b) {
    if (a.base.kind != FieldKind::Rationals || b.base.kind != FieldKind::Rationals)
        throw DomainError("hilbert_reciprocity_defect: classes over Q required");
    std::set<Place> support{Place::real(), Place::finite(2)};
    for (i64 q : a.primes) support.insert(Place::finite(q));
    for (i64 q : b.primes) support.insert(Place::finite(q));
    std::set<Place> defect;
    for (const Place& v : support)
        if (hilbert_symbol(v, a, b) == -1) defect.insert(v);
    assert(defect.size() % 2 == 0 && "Hilbert product formula violated");
    return defect;
}

std::set<Place> hilbert_reciprocity_defect(i64 a, i64 b) {
    auto Q = FieldDescriptor::rationals();
    return hilbert_reciprocity_defect(square_class(Q, a), square_class(Q, b));
}

}  // namespace qinv
