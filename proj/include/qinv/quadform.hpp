// SPDX-License-Identifier: Apache-2.0
#ifndef QINV_QUADFORM_HPP
#define QINV_QUADFORM_HPP

#include <optional>
#include <string>
#include <vector>

#include "qinv/brauer.hpp"

namespace qinv {

/// A diagonal non-degenerate quadratic form over a base field, held as the
/// square classes of its diagonal entries (every invariant in scope depends
/// only on those).
struct QuadraticForm {
    FieldDescriptor base;
    std::vector<SquareClass> coeffs;

    static QuadraticForm from_values(const FieldDescriptor& field, const std::vector<i64>& values);
    static QuadraticForm from_classes(const FieldDescriptor& field,
                                      std::vector<SquareClass> classes);

    int dim() const { return int(coeffs.size()); }
    QuadraticForm scaled(const SquareClass& lambda) const;
    QuadraticForm orthogonal_sum(const QuadraticForm& other) const;
    /// q perp n copies of the hyperbolic plane <1,-1>.
    QuadraticForm plus_hyperbolic(int n) const;

    std::string literal() const;  // "diag:1,-1,-1,ep@Qp:5"
    bool operator==(const QuadraticForm& o) const { return base == o.base && coeffs == o.coeffs; }
};

/// Computable avatar of the even Clifford algebra C0(q): its center together
/// with the Brauer class(es) of its simple factor(s).
struct EvenCliffordDescriptor {
    enum class Center { Base, QuadraticField, Split };
    Center center = Center::Base;
    std::optional<SquareClass> delta;  // QuadraticField case: the nontrivial center discriminant
    std::vector<BrauerClass2> classes; // 1 class (Base / QuadraticField), 2 classes (Split, sorted)

    static EvenCliffordDescriptor over_base(BrauerClass2 cls);
    static EvenCliffordDescriptor over_quadratic(SquareClass delta, BrauerClass2 cls);
    static EvenCliffordDescriptor split_pair(BrauerClass2 a, BrauerClass2 b);

    std::string token() const;
    bool operator==(const EvenCliffordDescriptor& o) const;
    bool operator!=(const EvenCliffordDescriptor& o) const { return !(*this == o); }
};

struct WittDecomposition {
    int witt_index = 0;
    QuadraticForm kernel;  // anisotropic; dim 0 permitted here (and only here)
};

/// Signed discriminant (-1)^{d(d-1)/2} * det as a square class.
SquareClass signed_discriminant(const QuadraticForm& q);

/// Product of Hilbert symbols over coefficient pairs at a place.
int hasse_invariant(const QuadraticForm& q, const Place& v);
/// Hasse invariant at the unique place of a local/real base field.
int hasse_invariant(const QuadraticForm& q);

int signature(const QuadraticForm& q, const Ordering& ordering = Ordering{});

bool is_isotropic(const QuadraticForm& q);
/// Local isotropy of a form over Q at a place (completion criteria).
bool is_locally_isotropic(const QuadraticForm& q, const Place& v);

WittDecomposition witt_decompose(const QuadraticForm& q);

bool equivalent(const QuadraticForm& q, const QuadraticForm& r);
/// Whether some square class lambda makes lambda*q equivalent to r.
bool similar(const QuadraticForm& q, const QuadraticForm& r);

/// The classical Witt invariant c(q): Brauer class of the full Clifford
/// algebra for even dim, of the even Clifford algebra for odd dim.  Pinned by
/// the structure-constant oracle (see clifford_oracle.hpp); the dim mod 8
/// table is validated against it, not trusted.
BrauerClass2 witt_clifford_invariant(const QuadraticForm& q);

EvenCliffordDescriptor even_clifford(const QuadraticForm& q);

/// Places of Q where any invariant of q can be nontrivial: {2, inf} plus the
/// odd primes dividing a coefficient.  For local fields: the unique place.
std::set<Place> relevant_places(const QuadraticForm& q);

}  // namespace qinv

#endif
