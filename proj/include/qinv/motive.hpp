// SPDX-License-Identifier: Apache-2.0
#ifndef QINV_MOTIVE_HPP
#define QINV_MOTIVE_HPP

#include <map>

#include "qinv/quadform.hpp"

namespace qinv {

/// The invariants of a quadric preserved by scissor relations: dimension of
/// the form, triviality of the signed discriminant, even Clifford descriptor,
/// and absolute signatures per ordering.
struct QuadricFingerprint {
    int dim_q = 0;
    bool delta_trivial = false;
    EvenCliffordDescriptor clifford;
    std::map<std::string, int> abs_signatures;  // ordering id -> |sgn|

    bool operator==(const QuadricFingerprint& o) const;
    bool operator!=(const QuadricFingerprint& o) const { return !(*this == o); }
};

/// Descriptor of a central simple algebra with orthogonal involution, at the
/// level of its isomorphism invariants.  `star` certifies: deg = 4, trivial
/// discriminant, split algebra.
struct InvolutionDescriptor {
    FieldDescriptor base;
    int deg = 0;
    BrauerClass2 algebra_class;
    std::optional<SquareClass> delta;  // even deg only
    EvenCliffordDescriptor clifford;
    std::map<std::string, int> signatures;  // ordering id -> sgn >= 0
    bool star = false;

    /// Throws ValidationError on any violated invariant; descriptors whose
    /// Brauer relations demand genuine 4-torsion are rejected as out of
    /// representable scope.
    void validate() const;
    bool delta_trivial() const { return !delta || delta->is_trivial(); }
    std::string literal() const;
};

enum class Verdict { Equal, NotEqual, Inconclusive };

struct Decision {
    Verdict verdict = Verdict::Inconclusive;
    std::string reason;  // machine-readable token
    std::vector<std::pair<std::string, std::string>> evidence;

    static Decision equal(std::string reason = "invariants-and-theorem");
    static Decision not_equal(std::string reason, std::string key, std::string left,
                              std::string right);
    static Decision inconclusive(std::string reason);
};

/// Integer polynomial in the Lefschetz class L, plus an optional symbolic
/// kernel term [Q_kernel] * L^shift (kept symbolic when the anisotropic
/// kernel has dim >= 2).
struct LPolynomial {
    std::vector<i64> coeff;  // coeff[i] multiplies L^i
    struct KernelTerm {
        QuadraticForm kernel;
        QuadricFingerprint fingerprint;
        int shift = 0;
    };
    std::optional<KernelTerm> kernel_term;

    void add_monomial(int power, i64 c = 1);
    std::string pretty() const;
};

/// Equality per the pinned convention: polynomial parts match and kernel
/// terms have equal shifts with similar kernels.
bool lpoly_equal(const LPolynomial& a, const LPolynomial& b);

QuadricFingerprint quadric_fingerprint(const QuadraticForm& q);

/// Quadric isomorphism = similarity of the forms.
bool quadrics_isomorphic(const QuadraticForm& q, const QuadraticForm& r);

Decision grothendieck_equal_quadrics(const QuadraticForm& q, const QuadraticForm& r);

Decision involution_isomorphic(const InvolutionDescriptor& a, const InvolutionDescriptor& b);

Decision grothendieck_equal_involutions(const InvolutionDescriptor& a,
                                        const InvolutionDescriptor& b);

/// [Q_q] via Witt decomposition: with q = kernel + n*H,
///   (1 + L + ... + L^{n-1}) + [Q_kernel]*L^n + L^{dim kernel}*(L^{n-1} + ... + L^{2(n-1)}),
/// the kernel term expanded away when dim(kernel) <= 1.
LPolynomial motivic_class(const QuadraticForm& q);

/// One hyperbolic extension step applied symbolically:
/// [Q_{q+H}] = 1 + [Q_q]*L + L^{dim q}.  Used to cross-check motivic_class.
LPolynomial lpoly_hyperbolic_step(const LPolynomial& cls, int dim_q);

/// One form per similarity class of quadrics in P^n (forms of dimension n+1).
std::vector<QuadraticForm> enumerate_quadrics(const FieldDescriptor& field, int n);

/// The nine degree-4 orthogonal-involution descriptors of dimension-2
/// involution varieties over Q_p (p odd), via quaternion algebras over the
/// quadratic etale extensions.
std::vector<InvolutionDescriptor> enumerate_involutions_dim2(const FieldDescriptor& field);

/// Split-algebra descriptor attached to a quadratic form.
InvolutionDescriptor involution_from_form(const QuadraticForm& q);

}  // namespace qinv

#endif
