// SPDX-License-Identifier: Apache-2.0
#ifndef QINV_BASE_FIELD_HPP
#define QINV_BASE_FIELD_HPP

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qinv/numeric.hpp"

namespace qinv {

enum class FieldKind { Rationals, Reals, Padic, Padic2 };

/// An ordering of a formally real field.  Q and R each carry exactly one.
struct Ordering {
    std::string id = "inf";
    bool operator==(const Ordering&) const = default;
};

/// Base field descriptor.  Padic requires an odd prime and carries a fixed
/// non-residue e (canonically the least positive one, overridable); Padic2 is
/// symbol-only.  The flags record the Witt-ring hypotheses under which the
/// class deciders are complete.
struct FieldDescriptor {
    FieldKind kind = FieldKind::Rationals;
    i64 p = 0;        // Padic only
    i64 epsilon = 0;  // Padic only: fixed non-residue unit representative
    bool i3_torsion_free = true;
    bool hasse_number_finite = true;

    static FieldDescriptor rationals();
    static FieldDescriptor reals();
    static FieldDescriptor padic(i64 p);
    static FieldDescriptor padic(i64 p, i64 epsilon_override);
    static FieldDescriptor padic2();

    bool formally_real() const { return kind == FieldKind::Rationals || kind == FieldKind::Reals; }
    bool is_local() const { return kind != FieldKind::Rationals; }
    std::vector<Ordering> orderings() const;
    std::string spec_string() const;  // "Q", "R", "Qp:5", "Q2"

    /// Field identity ignores the epsilon presentation choice and the flags.
    bool operator==(const FieldDescriptor& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const FieldDescriptor& o) const { return !(*this == o); }
};

/// A place of the base field.  For Q: a finite prime or the real place.  For
/// R / Q_p the unique place.  `slot` distinguishes the two places above a
/// rational place that splits in a quadratic etale extension; it is 0 for
/// places of the base field itself.
struct Place {
    enum class Kind { Finite, Real };
    Kind kind = Kind::Finite;
    i64 p = 0;
    int slot = 0;

    static Place finite(i64 prime) { return Place{Kind::Finite, prime, 0}; }
    static Place real() { return Place{Kind::Real, 0, 0}; }
    Place with_slot(int s) const { return Place{kind, p, s}; }

    std::string token() const;  // "3", "inf", "3.1"
    auto operator<=>(const Place&) const = default;
};

/// The unique place of a local/real field descriptor.
Place unique_place(const FieldDescriptor& field);

/// An element of k^x/(k^x)^2 with a canonical representative:
///   Q:   sign and sorted distinct primes of the squarefree representative;
///   R:   sign;
///   Q_p: (eps, pi) flags over {1, e, p, ep}.
struct SquareClass {
    FieldDescriptor base;
    int sign = 1;              // Q, R
    std::vector<i64> primes;   // Q
    bool eps = false;          // Q_p
    bool pi = false;           // Q_p

    static SquareClass one(const FieldDescriptor& field);

    bool is_trivial() const;
    SquareClass times(const SquareClass& o) const;

    /// Canonical integer representative (Q: sign * prod of primes; R: +-1;
    /// Q_p: eps^[eps] * p^[pi]).  Throws ResourceLimit on 64-bit overflow.
    i64 repr() const;
    /// Token for the CLI grammar: integers for Q; 1|-1 for R; 1|e|p|ep for Q_p.
    std::string token() const;

    bool operator==(const SquareClass& o) const;
    bool operator!=(const SquareClass& o) const { return !(*this == o); }
    bool operator<(const SquareClass& o) const;  // canonical order for multisets
};

SquareClass square_class(const FieldDescriptor& field, i64 value);
SquareClass square_class(const FieldDescriptor& field, i64 num, i64 den);

/// Hilbert symbol (a,b)_v at a place of Q; +1 iff the quaternion algebra (a,b)
/// splits over the completion.
int hilbert_symbol(const Place& v, i64 a, i64 b);
int hilbert_symbol(const Place& v, const SquareClass& a, const SquareClass& b);

/// Hilbert symbol over a local/real field descriptor (R, Q_p, Q_2).
int hilbert_symbol(const FieldDescriptor& local_field, i64 a, i64 b);
int hilbert_symbol(const FieldDescriptor& local_field, const SquareClass& a, const SquareClass& b);

/// Places of Q where (a,b)_v = -1.  Always of even cardinality (product
/// formula); asserted.
std::set<Place> hilbert_reciprocity_defect(i64 a, i64 b);
std::set<Place> hilbert_reciprocity_defect(const SquareClass& a, const SquareClass& b);

/// Least positive non-residue mod an odd prime.
i64 least_nonresidue(i64 p);

}  // namespace qinv

#endif
