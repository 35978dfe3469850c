// SPDX-License-Identifier: Apache-2.0
#ifndef QINV_NCMOT_HPP
#define QINV_NCMOT_HPP

#include <array>
#include <optional>

#include "qinv/brauer.hpp"
#include "qinv/motive.hpp"

namespace qinv {

/// U(A) for a central simple algebra over the base field or over a quadratic
/// field extension of it.  `ind_hint` is the index: derived (1 iff the class
/// is trivial) over local/real bases, taken on trust over Q, always a power
/// of 2.
struct MotiveObject {
    FieldDescriptor base;
    std::optional<EtaleQuadratic> center;  // nullopt: base-field center
    BrauerClass2 cls;
    i64 ind_hint = 1;

    static MotiveObject over_base(BrauerClass2 cls, std::optional<i64> ind = std::nullopt);
    static MotiveObject over_quadratic(const EtaleQuadratic& center, BrauerClass2 cls,
                                       std::optional<i64> ind = std::nullopt);
    void validate() const;
    bool same_center(const MotiveObject& o) const;
    std::string token() const;
};

enum class Coeff { Integers, Rationals, F2 };

/// A hom module Hom(U(M), U(N)) as G-invariant maps on the product of coset
/// spaces: the entries live on the orbits, and round-trip composition is
/// weighted by ind(M^op x N)^2.
struct HomModule {
    Coeff coeff = Coeff::Integers;
    MotiveObject src, dst;
    std::vector<std::string> orbits;  // labels, "diag"/"off" for endo-shaped modules
    i64 weight = 1;                   // ind^2 composition multiplier
};

HomModule hom_module(const MotiveObject& M, const MotiveObject& N, Coeff coeff);

struct HomElement {
    HomModule mod;
    std::vector<Frac> entries;  // one per orbit
};

HomElement hom_element(const HomModule& mod, std::vector<Frac> entries);
HomElement identity_hom(const MotiveObject& M, Coeff coeff);

/// g after f.  Supported shapes: endomorphism factors (plain orbit
/// convolution) and round trips M -> N -> M (convolution weighted by the
/// module's ind^2).  Mixed three-object chains are outside the modeled
/// compositum bookkeeping.
HomElement compose(const HomElement& g, const HomElement& f);

/// U(M) iso U(N) for base-field centers: Brauer class equality.
bool u_iso_base(const MotiveObject& M, const MotiveObject& N);

/// U(M) iso U(N) for a shared quadratic field center: class equality over the
/// center, certified by the solvability of the weighted unit equations.
bool u_iso_quadratic_center(const MotiveObject& M, const MotiveObject& N);

/// U(l) iso U(l') with rational coefficients iff l iso l'.
bool u_l_iso(const EtaleQuadratic& l, const EtaleQuadratic& l2);

/// Rank of Hom(U(B), U(A)) in the F2-linear radical quotient, B over the base
/// field and A over a quadratic extension.  Recomputed from the pairing
/// annihilation (2 * alpha * beta * ind^2 = 0 mod 2), not hardcoded.
int nrad_hom_f2(const MotiveObject& B, const MotiveObject& A);

/// Direct sums of base-center motives match iff the class multisets agree.
bool sum_match(std::vector<MotiveObject> Ms, std::vector<MotiveObject> Ns);

/// The unit equations of the rank-1 hom pairing (2ab = 1, 2ab = 0): returns
/// the contradiction derivation (empty when solvable, which never happens).
bool system_distinct_centers_solvable();

/// Integer solvability of {(a+ b+ + a- b-) w^2 = 1, (a+ b- + a- b+) w^2 = 0}
/// with w = ind, searched exhaustively over the given box.
std::optional<std::array<i64, 4>> solve_endomorphism_system(i64 ind, i64 box);

/// Block matrix of an F2-parity argument: n x n grid of (a+, a-) with odd
/// diagonal a+, even off-diagonal a+, even a-.
struct ParityMatrix {
    int n = 0;
    std::vector<std::array<i64, 2>> entries;  // row-major, n*n pairs
    void validate() const;
};

enum class Parity { Odd, Even };

/// Parity of the determinant of the 2n x 2n expansion with diagonal blocks
/// diag(a+ + a-, a+ - a-).  Odd for every valid input.
Parity parity_determinant(const ParityMatrix& m);

/// Decision content of the cancellation theorem: given that the ambient sums
/// match, U(A) iso U(A') must hold; decided through the etale-center
/// comparison and the weighted unit equations.
Decision cancellation_check(const std::vector<MotiveObject>& ambient,
                            const std::vector<MotiveObject>& Bs,
                            const std::vector<MotiveObject>& Bs2, const MotiveObject& A,
                            const MotiveObject& A2);

}  // namespace qinv

#endif
