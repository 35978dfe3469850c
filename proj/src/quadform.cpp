// SPDX-License-Identifier: Apache-2.0
#include "qinv/quadform.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace qinv {

QuadraticForm QuadraticForm::from_values(const FieldDescriptor& field,
                                         const std::vector<i64>& values) {
    if (values.empty()) throw DegenerateInput("QuadraticForm: empty coefficient list");
    QuadraticForm q;
    q.base = field;
    for (i64 v : values) {
        if (v == 0) throw DegenerateInput("QuadraticForm: zero coefficient (degenerate form)");
        q.coeffs.push_back(square_class(field, v));
    }
    return q;
}

QuadraticForm QuadraticForm::from_classes(const FieldDescriptor& field,
                                          std::vector<SquareClass> classes) {
    QuadraticForm q;
    q.base = field;
    for (auto& c : classes)
        if (c.base != field) throw DomainError("QuadraticForm: coefficient over a different field");
    q.coeffs = std::move(classes);
    return q;
}

QuadraticForm QuadraticForm::scaled(const SquareClass& lambda) const {
    QuadraticForm r = *this;
    for (auto& c : r.coeffs) c = c.times(lambda);
    return r;
}

QuadraticForm QuadraticForm::orthogonal_sum(const QuadraticForm& other) const {
    if (base != other.base) throw DomainError("orthogonal_sum: mixed base fields");
    QuadraticForm r = *this;
    r.coeffs.insert(r.coeffs.end(), other.coeffs.begin(), other.coeffs.end());
    return r;
}

QuadraticForm QuadraticForm::plus_hyperbolic(int n) const {
    QuadraticForm r = *this;
    auto one = SquareClass::one(base);
    auto minus_one = square_class(base, -1);
    for (int i = 0; i < n; ++i) {
        r.coeffs.push_back(one);
        r.coeffs.push_back(minus_one);
    }
    return r;
}

std::string QuadraticForm::literal() const {
    std::string s = "diag:";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) s += ",";
        s += coeffs[i].token();
    }
    return s + "@" + base.spec_string();
}

EvenCliffordDescriptor EvenCliffordDescriptor::over_base(BrauerClass2 cls) {
    EvenCliffordDescriptor d;
    d.center = Center::Base;
    d.classes = {std::move(cls)};
    return d;
}

EvenCliffordDescriptor EvenCliffordDescriptor::over_quadratic(SquareClass delta, BrauerClass2 cls) {
    if (delta.is_trivial())
        throw ValidationError("EvenCliffordDescriptor: quadratic center needs nontrivial delta");
    EvenCliffordDescriptor d;
    d.center = Center::QuadraticField;
    d.delta = std::move(delta);
    d.classes = {std::move(cls)};
    return d;
}

EvenCliffordDescriptor EvenCliffordDescriptor::split_pair(BrauerClass2 a, BrauerClass2 b) {
    EvenCliffordDescriptor d;
    d.center = Center::Split;
    if (b < a) std::swap(a, b);  // unordered pair, canonical order
    d.classes = {std::move(a), std::move(b)};
    return d;
}

std::string EvenCliffordDescriptor::token() const {
    switch (center) {
        case Center::Base: return "base:" + classes[0].token();
        case Center::QuadraticField: return "sqrt(" + delta->token() + "):" + classes[0].token();
        case Center::Split: return "split:{" + classes[0].token() + "," + classes[1].token() + "}";
    }
    return {};
}

bool EvenCliffordDescriptor::operator==(const EvenCliffordDescriptor& o) const {
    if (center != o.center || classes != o.classes) return false;
    if (center == Center::QuadraticField && !(*delta == *o.delta)) return false;
    return true;
}

SquareClass signed_discriminant(const QuadraticForm& q) {
    const int d = q.dim();
    SquareClass r = SquareClass::one(q.base);
    for (const auto& c : q.coeffs) r = r.times(c);
    if (((i64(d) * (d - 1) / 2) % 2) != 0) r = r.times(square_class(q.base, -1));
    return r;
}

int hasse_invariant(const QuadraticForm& q, const Place& v) {
    int s = 1;
    for (std::size_t i = 0; i < q.coeffs.size(); ++i)
        for (std::size_t j = i + 1; j < q.coeffs.size(); ++j) {
            if (q.base.kind == FieldKind::Rationals)
                s *= hilbert_symbol(v, q.coeffs[i], q.coeffs[j]);
            else
                s *= hilbert_symbol(q.base, q.coeffs[i], q.coeffs[j]);
        }
    return s;
}

int hasse_invariant(const QuadraticForm& q) {
    return hasse_invariant(q, unique_place(q.base));
}

int signature(const QuadraticForm& q, const Ordering& ordering) {
    if (!q.base.formally_real())
        throw DomainError("signature: base field is not formally real");
    if (ordering != Ordering{})
        throw DomainError("signature: unknown ordering for this field");
    int s = 0;
    for (const auto& c : q.coeffs) s += c.sign;
    return s;
}

std::set<Place> relevant_places(const QuadraticForm& q) {
    if (q.base.is_local()) return {unique_place(q.base)};
    std::set<Place> places{Place::finite(2), Place::real()};
    for (const auto& c : q.coeffs)
        for (i64 p : c.primes)
            if (p != 2) places.insert(Place::finite(p));
    return places;
}

namespace {

// determinant as a square class (unsigned, unlike signed_discriminant)
SquareClass determinant_class(const QuadraticForm& q) {
    SquareClass r = SquareClass::one(q.base);
    for (const auto& c : q.coeffs) r = r.times(c);
    return r;
}

bool square_in_completion(const SquareClass& c, const Place& v) {
    // c is a class over Q; decide triviality in Q_v
    if (v.kind == Place::Kind::Real) return c.sign > 0;
    const i64 p = v.p;
    const bool odd_val = std::binary_search(c.primes.begin(), c.primes.end(), p);
    if (odd_val) return false;
    if (p == 2) {
        i64 r = c.sign < 0 ? 7 : 1;
        for (i64 q : c.primes) r = (r * (q % 8)) % 8;
        return r == 1;
    }
    i64 r = c.sign < 0 ? p - 1 : 1;
    for (i64 q : c.primes) r = i64((i128(r) * (q % p)) % p);
    return legendre(r, p) == 1;
}

int hilbert_minus_one_minus_one(const QuadraticForm& q, const Place& v) {
    auto m = square_class(q.base, -1);
    if (q.base.kind == FieldKind::Rationals) return hilbert_symbol(v, m, m);
    return hilbert_symbol(q.base, m, m);
}

// local isotropy from (dim, det, hasse) at the completion of Q at v, or over a
// local/real base with v its unique place
bool locally_isotropic_impl(const QuadraticForm& q, const Place& v) {
    const int d = q.dim();
    const bool over_q = q.base.kind == FieldKind::Rationals;
    if (d <= 1) return false;
    if (q.base.kind == FieldKind::Reals || (over_q && v.kind == Place::Kind::Real)) {
        bool pos = false, neg = false;
        for (const auto& c : q.coeffs) (c.sign > 0 ? pos : neg) = true;
        return pos && neg;
    }
    if (d >= 5) return true;  // u(Q_p) = 4 at every finite completion
    auto det = determinant_class(q);
    auto minus_det = det.times(square_class(q.base, -1));
    const int s = hasse_invariant(q, v);
    auto symbol = [&](const SquareClass& a, const SquareClass& b) {
        return over_q ? hilbert_symbol(v, a, b) : hilbert_symbol(q.base, a, b);
    };
    auto triv_locally = [&](const SquareClass& c) {
        return over_q ? square_in_completion(c, v) : c.is_trivial();
    };
    switch (d) {
        case 2: return triv_locally(minus_det);  // <a,b> isotropic iff -ab is a square
        case 3: return s == symbol(square_class(q.base, -1), minus_det);
        case 4:
            if (!triv_locally(det)) return true;
            return s == hilbert_minus_one_minus_one(q, v);
        default: return true;
    }
}

}  // namespace

bool is_locally_isotropic(const QuadraticForm& q, const Place& v) {
    if (q.base.kind != FieldKind::Rationals)
        throw DomainError("is_locally_isotropic: expects a form over Q");
    return locally_isotropic_impl(q, v);
}

bool is_isotropic(const QuadraticForm& q) {
    const int d = q.dim();
    if (d <= 1) return false;
    switch (q.base.kind) {
        case FieldKind::Reals:
        case FieldKind::Padic: return locally_isotropic_impl(q, unique_place(q.base));
        case FieldKind::Rationals: {
            if (d == 2) return determinant_class(q).times(square_class(q.base, -1)).is_trivial();
            if (d >= 5) {
                // Meyer: indefinite of rank >= 5 is isotropic (finite places are
                // automatic since every completion has u-invariant 4)
                return locally_isotropic_impl(q, Place::real());
            }
            for (const Place& v : relevant_places(q))
                if (!locally_isotropic_impl(q, v)) return false;
            return true;
        }
        case FieldKind::Padic2: break;
    }
    throw DomainError("is_isotropic: unsupported base field");
}

bool equivalent(const QuadraticForm& q, const QuadraticForm& r) {
    if (q.base != r.base) throw DomainError("equivalent: mixed base fields");
    if (q.dim() != r.dim()) return false;
    switch (q.base.kind) {
        case FieldKind::Reals: return signature(q) == signature(r);
        case FieldKind::Padic:
            return signed_discriminant(q) == signed_discriminant(r) &&
                   hasse_invariant(q) == hasse_invariant(r);
        case FieldKind::Rationals: {
            if (!(signed_discriminant(q) == signed_discriminant(r))) return false;
            if (signature(q) != signature(r)) return false;
            auto places = relevant_places(q);
            auto more = relevant_places(r);
            places.insert(more.begin(), more.end());
            for (const Place& v : places)
                if (hasse_invariant(q, v) != hasse_invariant(r, v)) return false;
            return true;
        }
        case FieldKind::Padic2: break;
    }
    throw DomainError("equivalent: unsupported base field");
}

namespace {

std::vector<SquareClass> scaling_candidates(const QuadraticForm& q, const QuadraticForm& r) {
    const auto& field = q.base;
    switch (field.kind) {
        case FieldKind::Reals:
            return {square_class(field, 1), square_class(field, -1)};
        case FieldKind::Padic: {
            std::vector<SquareClass> cs;
            for (int e = 0; e < 2; ++e)
                for (int f = 0; f < 2; ++f) {
                    SquareClass c = SquareClass::one(field);
                    c.eps = e;
                    c.pi = f;
                    cs.push_back(c);
                }
            return cs;
        }
        case FieldKind::Rationals: {
            std::set<i64> support{2};
            for (const auto& c : q.coeffs) support.insert(c.primes.begin(), c.primes.end());
            for (const auto& c : r.coeffs) support.insert(c.primes.begin(), c.primes.end());
            std::vector<i64> ps(support.begin(), support.end());
            std::vector<SquareClass> cs;
            for (std::size_t mask = 0; mask < (std::size_t(1) << ps.size()); ++mask)
                for (int sg : {1, -1}) {
                    SquareClass c = SquareClass::one(field);
                    c.sign = sg;
                    for (std::size_t i = 0; i < ps.size(); ++i)
                        if (mask & (std::size_t(1) << i)) c.primes.push_back(ps[i]);
                    cs.push_back(c);
                }
            return cs;
        }
        case FieldKind::Padic2: break;
    }
    throw DomainError("similar: unsupported base field");
}

}  // namespace

bool similar(const QuadraticForm& q, const QuadraticForm& r) {
    if (q.base != r.base) throw DomainError("similar: mixed base fields");
    if (q.dim() != r.dim()) return false;
    for (const auto& lambda : scaling_candidates(q, r))
        if (equivalent(q.scaled(lambda), r)) return true;
    return false;
}

namespace {

// Hasse invariant as a Brauer class: sum of the coefficient-pair quaternion
// classes.
BrauerClass2 hasse_class(const QuadraticForm& q) {
    BrauerClass2 s = BrauerClass2::trivial(q.base);
    for (std::size_t i = 0; i < q.coeffs.size(); ++i)
        for (std::size_t j = i + 1; j < q.coeffs.size(); ++j)
            s = s.plus(quaternion_class(q.base, q.coeffs[i], q.coeffs[j]));
    return s;
}

}  // namespace

BrauerClass2 witt_clifford_invariant(const QuadraticForm& q) {
    // c(q) = s(q) corrected by (-1,-1) / (-1,+-det) factors depending on
    // dim mod 8 (validated against the structure-constant oracle)
    BrauerClass2 c = hasse_class(q);
    auto det = determinant_class(q);
    auto minus_one = square_class(q.base, -1);
    switch (q.dim() % 8) {
        case 1: case 2: break;
        case 3: case 4:
            c = c.plus(quaternion_class(q.base, minus_one, det.times(minus_one)));
            break;
        case 5: case 6:
            c = c.plus(quaternion_class(q.base, minus_one, minus_one));
            break;
        case 7: case 0:
            c = c.plus(quaternion_class(q.base, minus_one, det));
            break;
    }
    return c;
}

EvenCliffordDescriptor even_clifford(const QuadraticForm& q) {
    BrauerClass2 c = witt_clifford_invariant(q);
    if (q.dim() % 2 == 1) return EvenCliffordDescriptor::over_base(c);
    auto delta = signed_discriminant(q);
    if (delta.is_trivial()) return EvenCliffordDescriptor::split_pair(c, c);
    auto ext = EtaleQuadratic::field(delta);
    return EvenCliffordDescriptor::over_quadratic(delta, restrict_class(c, ext));
}

namespace {

// Candidate kernel coefficients over Q: square classes supported on the
// coefficient primes of q plus {2}, optionally extended by one auxiliary
// small prime; ordered simple-first.
std::vector<SquareClass> kernel_entry_candidates(const QuadraticForm& q, i64 extra_prime) {
    std::set<i64> support{2};
    for (const auto& c : q.coeffs) support.insert(c.primes.begin(), c.primes.end());
    if (extra_prime) support.insert(extra_prime);
    std::vector<i64> ps(support.begin(), support.end());
    std::vector<SquareClass> cs;
    for (std::size_t mask = 0; mask < (std::size_t(1) << ps.size()); ++mask)
        for (int sg : {1, -1}) {
            SquareClass c = SquareClass::one(q.base);
            c.sign = sg;
            for (std::size_t i = 0; i < ps.size(); ++i)
                if (mask & (std::size_t(1) << i)) c.primes.push_back(ps[i]);
            cs.push_back(c);
        }
    std::sort(cs.begin(), cs.end(), [](const SquareClass& a, const SquareClass& b) {
        if (a.primes.size() != b.primes.size()) return a.primes.size() < b.primes.size();
        return a < b;
    });
    return cs;
}

// Prescribed invariants of a diagonal form to be constructed.
struct FormTarget {
    int rank = 0;
    SquareClass det;
    std::map<Place, int> hasse;  // at every finite relevant place
    int sgn = 0;
};

// Builds a diagonal form with the given invariants by peeling one entry at a
// time.  For rank >= 3 every finite local datum is realizable, so the only
// filters needed are the real-place ones (signature window and the Hasse
// value it forces) and the rank-2 existence condition; those filters are
// complete, which keeps the search from backtracking in practice.
std::optional<std::vector<SquareClass>> build_with_invariants(
    const FormTarget& t, const std::vector<SquareClass>& cands) {
    const auto& field = t.det.base;
    auto real_hasse_for = [](int rank, int sgn) {
        int neg = (rank - sgn) / 2;
        return (neg * (neg - 1) / 2) % 2 ? -1 : 1;
    };
    if (std::abs(t.sgn) > t.rank || (t.rank - t.sgn) % 2 != 0) return std::nullopt;
    if (t.rank == 0) {
        if (!t.det.is_trivial() || t.sgn != 0) return std::nullopt;
        for (auto& [v, s] : t.hasse)
            if (s != 1) return std::nullopt;
        return std::vector<SquareClass>{};
    }
    if (t.rank == 1) {
        if (t.det.sign != t.sgn) return std::nullopt;
        for (auto& [v, s] : t.hasse)
            if (s != 1) return std::nullopt;
        return std::vector<SquareClass>{t.det};
    }
    if (t.rank == 2) {
        // complete local feasibility: the symbol is pinned to +1 wherever
        // -det is a local square, and the signature pins the determinant sign
        SquareClass minus_det = t.det.times(square_class(field, -1));
        for (auto& [v, s] : t.hasse) {
            bool pinned = v.kind == Place::Kind::Real ? minus_det.sign > 0
                                                      : square_in_completion(minus_det, v);
            if (pinned && s != 1) return std::nullopt;
        }
        if (t.det.sign != (std::abs(t.sgn) == 2 ? 1 : -1)) return std::nullopt;
        // a support-only witness may not exist; one auxiliary prime always
        // suffices and is searched here, with the symbol at the new place
        // required to stay trivial
        auto try_entry = [&](const SquareClass& a,
                             std::optional<Place> aux) -> std::optional<std::vector<SquareClass>> {
            SquareClass b = t.det.times(a);
            if (a.sign + b.sign != t.sgn) return std::nullopt;
            for (auto& [v, s] : t.hasse)
                if (hilbert_symbol(v, a, b) != s) return std::nullopt;
            if (aux && hilbert_symbol(*aux, a, b) != 1) return std::nullopt;
            return std::vector<SquareClass>{a, b};
        };
        for (const auto& a : cands)
            if (auto found = try_entry(a, std::nullopt)) return found;
        for (i64 r = 3; r < 5000; r += 2) {
            if (!is_prime(r)) continue;
            SquareClass rc = square_class(field, r);
            if (std::binary_search(t.det.primes.begin(), t.det.primes.end(), r)) continue;
            for (const auto& a : cands)
                if (auto found = try_entry(a.times(rc), Place::finite(r))) return found;
        }
        return std::nullopt;
    }
    for (const auto& a : cands) {
        FormTarget rest;
        rest.rank = t.rank - 1;
        rest.det = t.det.times(a);
        rest.sgn = t.sgn - a.sign;
        if (std::abs(rest.sgn) > rest.rank) continue;
        // s(<a> + g) = s(g) * (a, det g) at every place
        bool feasible = true;
        for (auto& [v, s] : t.hasse) rest.hasse[v] = s * hilbert_symbol(v, a, rest.det);
        // the real Hasse value is forced by the signature
        auto it = rest.hasse.find(Place::real());
        if (it != rest.hasse.end() && it->second != real_hasse_for(rest.rank, rest.sgn))
            feasible = false;
        if (!feasible) continue;
        if (auto tail = build_with_invariants(rest, cands)) {
            tail->insert(tail->begin(), a);
            return tail;
        }
    }
    return std::nullopt;
}

std::optional<QuadraticForm> find_kernel_q(const QuadraticForm& q, int d0) {
    const int n = (q.dim() - d0) / 2;
    const int sgn = signature(q);
    if (std::abs(sgn) > d0) return std::nullopt;
    if (d0 > 4 && std::abs(sgn) != d0) return std::nullopt;  // Meyer: indefinite anisotropic
                                                             // rational forms have dim <= 4
    auto certify = [&](const QuadraticForm& k) {
        return (k.dim() == 0 || !is_isotropic(k)) && equivalent(k.plus_hyperbolic(n), q);
    };
    if (d0 == 0) {
        QuadraticForm empty = QuadraticForm{q.base, {}};
        if (equivalent(empty.plus_hyperbolic(n), q)) return empty;
        return std::nullopt;
    }
    // target invariants of the kernel: q = k + nH determines them
    FormTarget t;
    t.rank = d0;
    t.det = determinant_class(q);
    if (n % 2 == 1) t.det = t.det.times(square_class(q.base, -1));
    t.sgn = sgn;
    auto minus_one = square_class(q.base, -1);
    const i64 hyperbolic_pairs = i64(n) * (n - 1) / 2;
    for (const Place& v : relevant_places(q)) {
        int s = hasse_invariant(q, v);
        if (hyperbolic_pairs % 2 != 0) s *= hilbert_symbol(v, minus_one, minus_one);
        if (n % 2 != 0) s *= hilbert_symbol(v, t.det, minus_one);
        t.hasse[v] = s;
    }
    auto cands = kernel_entry_candidates(q, 0);
    if (auto entries = build_with_invariants(t, cands)) {
        QuadraticForm k = QuadraticForm::from_classes(q.base, *entries);
        if (certify(k)) return k;
    }
    return std::nullopt;
}

}  // namespace

WittDecomposition witt_decompose(const QuadraticForm& q) {
    if (!is_isotropic(q)) return WittDecomposition{0, q};
    switch (q.base.kind) {
        case FieldKind::Reals: {
            const int sgn = signature(q);
            const int d0 = std::abs(sgn);
            QuadraticForm kernel{q.base, {}};
            auto entry = square_class(q.base, sgn >= 0 ? 1 : -1);
            for (int i = 0; i < d0; ++i) kernel.coeffs.push_back(entry);
            return WittDecomposition{(q.dim() - d0) / 2, kernel};
        }
        case FieldKind::Padic: {
            // complete search over class representatives, certified by Witt
            // cancellation: an anisotropic k with k + nH ~ q is the kernel
            std::vector<SquareClass> reps;
            for (int e = 0; e < 2; ++e)
                for (int f = 0; f < 2; ++f) {
                    SquareClass c = SquareClass::one(q.base);
                    c.eps = e;
                    c.pi = f;
                    reps.push_back(c);
                }
            for (int d0 = q.dim() % 2; d0 <= 4; d0 += 2) {
                const int n = (q.dim() - d0) / 2;
                std::vector<int> idx(std::size_t(d0), 0);
                while (true) {
                    QuadraticForm k{q.base, {}};
                    for (int i = 0; i < d0; ++i) k.coeffs.push_back(reps[std::size_t(idx[std::size_t(i)])]);
                    if ((d0 == 0 || !is_isotropic(k)) && equivalent(k.plus_hyperbolic(n), q))
                        return WittDecomposition{n, k};
                    int pos = d0 - 1;
                    while (pos >= 0 && ++idx[std::size_t(pos)] == 4) idx[std::size_t(pos--)] = 0;
                    if (pos < 0) break;
                }
            }
            throw ResourceLimit("witt_decompose: no p-adic kernel found (unreachable)");
        }
        case FieldKind::Rationals: {
            for (int d0 = q.dim() % 2; d0 < q.dim(); d0 += 2) {
                if (auto k = find_kernel_q(q, d0)) return WittDecomposition{(q.dim() - d0) / 2, *k};
            }
            throw ResourceLimit("witt_decompose: kernel search exhausted its candidate space");
        }
        case FieldKind::Padic2: break;
    }
    throw DomainError("witt_decompose: unsupported base field");
}

}  // namespace qinv
