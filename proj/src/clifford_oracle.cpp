// SPDX-License-Identifier: Apache-2.0
#include "qinv/clifford_oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

namespace qinv {

namespace {

// Sparse element of the Clifford algebra: monomial mask -> coefficient.
using Elem = std::vector<std::pair<unsigned, Frac>>;

struct CliffordTable {
    int d;
    std::vector<i64> a;

    // e_S * e_T = sign * (prod of a_i over S cap T) * e_{S xor T}
    std::pair<Frac, unsigned> mono_mul(unsigned s, unsigned t) const {
        int swaps = 0;
        for (int i = 0; i < d; ++i) {
            if (!(t & (1u << i))) continue;
            unsigned higher = s >> (i + 1);
            swaps += std::popcount(higher);
        }
        i64 scalar = 1;
        unsigned common = s & t;
        for (int i = 0; i < d; ++i)
            if (common & (1u << i)) scalar *= a[std::size_t(i)];
        Frac c(swaps % 2 ? -scalar : scalar);
        return {c, s ^ t};
    }

    Elem mul(const Elem& x, const Elem& y) const {
        std::map<unsigned, Frac> acc;
        for (const auto& [ms, cs] : x)
            for (const auto& [mt, ct] : y) {
                auto [f, m] = mono_mul(ms, mt);
                auto it = acc.find(m);
                Frac v = cs * ct * f;
                if (it == acc.end())
                    acc.emplace(m, v);
                else
                    it->second = it->second + v;
            }
        Elem out;
        for (auto& [m, c] : acc)
            if (!c.is_zero()) out.emplace_back(m, c);
        return out;
    }

    Elem sub(const Elem& x, const Elem& y) const {
        std::map<unsigned, Frac> acc;
        for (const auto& [m, c] : x) acc[m] = acc.count(m) ? acc[m] + c : c;
        for (const auto& [m, c] : y) acc[m] = acc.count(m) ? acc[m] - c : -c;
        Elem out;
        for (auto& [m, c] : acc)
            if (!c.is_zero()) out.emplace_back(m, c);
        return out;
    }

    bool is_zero(const Elem& x) const { return x.empty(); }
    bool commute(const Elem& x, const Elem& y) const { return is_zero(sub(mul(x, y), mul(y, x))); }
    bool anticommute(const Elem& x, const Elem& y) const {
        auto s = mul(x, y);
        auto t = mul(y, x);
        std::map<unsigned, Frac> acc;
        for (const auto& [m, c] : s) acc[m] = acc.count(m) ? acc[m] + c : c;
        for (const auto& [m, c] : t) acc[m] = acc.count(m) ? acc[m] + c : c;
        for (auto& [m, c] : acc)
            if (!c.is_zero()) return false;
        return true;
    }
    // scalar content if x = c * e_0, else nullopt
    std::optional<Frac> as_scalar(const Elem& x) const {
        if (x.empty()) return Frac(0);
        if (x.size() == 1 && x[0].first == 0) return x[0].second;
        return std::nullopt;
    }
};

Elem monomial(unsigned mask, Frac c = Frac(1)) { return Elem{{mask, c}}; }

std::optional<i64> exact_sqrt(i64 v) {
    if (v < 0) return std::nullopt;
    i64 r = i64(std::sqrt(double(v)));
    for (i64 c = std::max<i64>(0, r - 2); c <= r + 2; ++c)
        if (c * c == v) return c;
    return std::nullopt;
}

}  // namespace

CliffordOracleReport clifford_oracle(const QuadraticForm& q) {
    if (q.base.kind != FieldKind::Rationals)
        throw DomainError("clifford_oracle: expects a form over Q");
    const int d = q.dim();
    if (d > 6) throw ResourceLimit("clifford_oracle: dim > 6");
    if (d < 1) throw DegenerateInput("clifford_oracle: empty form");

    CliffordTable T;
    T.d = d;
    for (const auto& c : q.coeffs) {
        i64 r = c.repr();
        if (std::abs(r) > 1000)
            throw ResourceLimit("clifford_oracle: coefficient representative too large");
        T.a.push_back(r);
    }

    CliffordOracleReport rep;
    rep.dim = d;
    rep.base_class = BrauerClass2::trivial(q.base);

    // generators of C0: adjacent products e_i e_{i+1}
    std::vector<Elem> c0_gens;
    for (int i = 0; i + 1 < d; ++i) c0_gens.push_back(monomial((1u << i) | (1u << (i + 1))));

    // center by commutation equations: an even monomial is central iff its
    // commutator with every generator vanishes; the commutator of monomials
    // lands on a single basis monomial, so this solves the linear system
    std::vector<unsigned> center_masks;
    for (unsigned m = 0; m < (1u << d); ++m) {
        if (std::popcount(m) % 2) continue;
        bool central = true;
        for (const auto& g : c0_gens)
            if (!T.commute(g, monomial(m))) { central = false; break; }
        if (central) center_masks.push_back(m);
    }
    rep.center_dim = int(center_masks.size());
    if (d == 1) {  // C0 = k
        rep.center_dim = 1;
        rep.factor_count = 1;
        rep.factor_classes = {rep.base_class};
        return rep;
    }
    if (!((d % 2 == 1 && rep.center_dim == 1) || (d % 2 == 0 && rep.center_dim == 2)))
        throw ValidationError("clifford_oracle: unexpected center dimension");

    // peel quaternion subalgebras from the generators u_i = e_i e_d
    std::vector<Elem> gens;
    for (int i = 0; i + 1 < d; ++i) gens.push_back(monomial((1u << i) | (1u << (d - 1))));
    auto scalar_square = [&](const Elem& x) -> i64 {
        auto sq = T.as_scalar(T.mul(x, x));
        if (!sq || !sq->is_integer())
            throw ValidationError("clifford_oracle: generator square is not an integer scalar");
        return sq->num;
    };
    while (gens.size() >= 2) {
        Elem g0 = gens[0], g1 = gens[1];
        if (!T.anticommute(g0, g1))
            throw ValidationError("clifford_oracle: quaternion generators fail to anticommute");
        i64 s0 = scalar_square(g0), s1 = scalar_square(g1);
        if (s0 == 0 || s1 == 0) throw ValidationError("clifford_oracle: degenerate generator");
        rep.quaternion_generators.emplace_back(s0, s1);
        rep.base_class = rep.base_class.plus(quaternion_class(q.base, s0, s1));
        std::vector<Elem> next;
        for (std::size_t j = 2; j < gens.size(); ++j) {
            Elem w = T.mul(T.mul(g0, g1), gens[j]);
            if (!T.commute(w, g0) || !T.commute(w, g1))
                throw ValidationError("clifford_oracle: peeled generator not in the commutant");
            next.push_back(w);
        }
        for (std::size_t i = 0; i < next.size(); ++i)
            for (std::size_t j = i + 1; j < next.size(); ++j)
                if (!T.anticommute(next[i], next[j]))
                    throw ValidationError("clifford_oracle: commutant generators fail relations");
        gens = std::move(next);
    }

    if (d % 2 == 1) {
        if (!gens.empty()) throw ValidationError("clifford_oracle: leftover generator, odd dim");
        rep.factor_count = 1;
        rep.factor_classes = {rep.base_class};
    } else {
        if (gens.size() != 1) throw ValidationError("clifford_oracle: expected one leftover");
        Elem w = gens[0];
        for (const auto& g : c0_gens)
            if (!T.commute(w, g)) throw ValidationError("clifford_oracle: leftover not central");
        if (w.size() != 1 || std::popcount(w[0].first) != d)
            throw ValidationError("clifford_oracle: leftover is not the volume monomial");
        // z^2 gives the center discriminant; must match the signed discriminant
        auto zsq = T.as_scalar(T.mul(w, w));
        if (!zsq) throw ValidationError("clifford_oracle: volume square not scalar");
        SquareClass disc = square_class(q.base, zsq->num, zsq->den);
        rep.center_disc = disc;
        if (!(disc == signed_discriminant(q)))
            throw ValidationError("clifford_oracle: center discriminant mismatch");
        if (disc.is_trivial()) {
            rep.center_split = true;
            // idempotents (1 +- w/lambda)/2 with lambda an exact square root
            Frac c = w[0].second;
            Frac zsq_over_c2 = *zsq / (c * c);
            if (!zsq_over_c2.is_integer())
                throw ValidationError("clifford_oracle: non-integral discriminant");
            auto root = exact_sqrt(zsq_over_c2.num);
            if (!root) throw ValidationError("clifford_oracle: trivial class without square root");
            Frac lambda = c * Frac(*root);
            Elem half = monomial(0, Frac(1, 2));
            Elem wl;
            for (auto& [m, cc] : w) wl.emplace_back(m, cc / lambda * Frac(1, 2));
            Elem p_plus = half;
            p_plus.insert(p_plus.end(), wl.begin(), wl.end());
            std::sort(p_plus.begin(), p_plus.end(),
                      [](auto& x, auto& y) { return x.first < y.first; });
            if (!T.is_zero(T.sub(T.mul(p_plus, p_plus), p_plus)))
                throw ValidationError("clifford_oracle: idempotent check failed");
            rep.factor_count = 2;
            rep.factor_classes = {rep.base_class, rep.base_class};
        } else {
            rep.center_split = false;
            rep.factor_count = 1;
            auto ext = EtaleQuadratic::field(disc);
            rep.factor_classes = {restrict_class(rep.base_class, ext)};
        }
    }

    for (const Place& v : rep.base_class.ram) rep.division_at[v.token()] = 1;
    return rep;
}

}  // namespace qinv
