// SPDX-License-Identifier: Apache-2.0
#include "qinv/motive.hpp"

#include <algorithm>

namespace qinv {

bool QuadricFingerprint::operator==(const QuadricFingerprint& o) const {
    return dim_q == o.dim_q && delta_trivial == o.delta_trivial && clifford == o.clifford &&
           abs_signatures == o.abs_signatures;
}

Decision Decision::equal(std::string reason) {
    return Decision{Verdict::Equal, std::move(reason), {}};
}

Decision Decision::not_equal(std::string reason, std::string key, std::string left,
                             std::string right) {
    Decision d{Verdict::NotEqual, std::move(reason), {}};
    d.evidence.emplace_back(std::move(key), left + " vs " + right);
    return d;
}

Decision Decision::inconclusive(std::string reason) {
    return Decision{Verdict::Inconclusive, std::move(reason), {}};
}

QuadricFingerprint quadric_fingerprint(const QuadraticForm& q) {
    if (q.dim() < 2) throw DegenerateInput("quadric_fingerprint: dim(q) >= 2 required");
    QuadricFingerprint fp;
    fp.dim_q = q.dim();
    // the discriminant enters the fingerprint for even dimension only: for
    // odd dimension it is not a similarity invariant (scaling by lambda moves
    // it through every class), so it is recorded as neutral
    fp.delta_trivial = q.dim() % 2 == 0 ? signed_discriminant(q).is_trivial() : true;
    fp.clifford = even_clifford(q);
    for (const Ordering& P : q.base.orderings())
        fp.abs_signatures[P.id] = std::abs(signature(q, P));
    return fp;
}

bool quadrics_isomorphic(const QuadraticForm& q, const QuadraticForm& r) {
    return similar(q, r);
}

namespace {

bool theorem_flags_hold(const FieldDescriptor& k, bool even_dim) {
    if (!k.i3_torsion_free) return false;
    if (k.formally_real() && even_dim && !k.hasse_number_finite) return false;
    return true;
}

}  // namespace

Decision grothendieck_equal_quadrics(const QuadraticForm& q, const QuadraticForm& r) {
    if (q.base != r.base) throw DomainError("grothendieck_equal_quadrics: mixed base fields");
    if (q.dim() < 2 || r.dim() < 2)
        throw DegenerateInput("grothendieck_equal_quadrics: dim >= 2 required");
    auto fq = quadric_fingerprint(q);
    auto fr = quadric_fingerprint(r);
    // unconditionally necessary invariants
    if (fq.dim_q != fr.dim_q)
        return Decision::not_equal("dimension-differs", "dim", std::to_string(fq.dim_q),
                                   std::to_string(fr.dim_q));
    if (fq.delta_trivial != fr.delta_trivial)
        return Decision::not_equal("discriminant-triviality-differs", "delta_trivial",
                                   fq.delta_trivial ? "trivial" : "nontrivial",
                                   fr.delta_trivial ? "trivial" : "nontrivial");
    if (!(fq.clifford == fr.clifford))
        return Decision::not_equal("clifford-differs", "clifford", fq.clifford.token(),
                                   fr.clifford.token());
    if (fq.abs_signatures != fr.abs_signatures) {
        auto render = [](const std::map<std::string, int>& m) {
            std::string s;
            for (auto& [k, v] : m) s += k + ":" + std::to_string(v) + ";";
            return s;
        };
        return Decision::not_equal("signature-differs", "abs_signature", render(fq.abs_signatures),
                                   render(fr.abs_signatures));
    }
    const bool low_dim = q.dim() <= 4;
    if (low_dim || theorem_flags_hold(q.base, q.dim() % 2 == 0)) {
        if (similar(q, r)) return Decision::equal(low_dim ? "low-dimension" : "witt-ring-flags");
        return Decision::not_equal("not-similar", "similarity", q.literal(), r.literal());
    }
    return Decision::inconclusive("field-flags");
}

void InvolutionDescriptor::validate() const {
    if (deg < 2) throw ValidationError("InvolutionDescriptor: deg >= 2 required");
    if (algebra_class.field != base || algebra_class.ext)
        throw ValidationError("InvolutionDescriptor: algebra class must live over the base field");
    if (!base.formally_real() && !signatures.empty())
        throw ValidationError("InvolutionDescriptor: signatures on a non-real field");
    for (auto& [id, v] : signatures)
        if (v < 0 || v > deg)
            throw ValidationError("InvolutionDescriptor: signature out of range");
    if (deg % 2 == 1) {
        if (!algebra_class.is_trivial())
            throw ValidationError(
                "InvolutionDescriptor: odd degree requires a split algebra "
                "(orthogonal involutions exist only on split algebras)");
        if (delta) throw ValidationError("InvolutionDescriptor: delta is defined for even degree");
        if (clifford.center != EvenCliffordDescriptor::Center::Base)
            throw ValidationError("InvolutionDescriptor: odd degree has a base-field Clifford center");
        return;
    }
    if (!delta) throw ValidationError("InvolutionDescriptor: even degree requires delta");
    if (delta->is_trivial()) {
        if (clifford.center != EvenCliffordDescriptor::Center::Split)
            throw ValidationError("InvolutionDescriptor: trivial delta requires a split center");
        const auto& cp = clifford.classes[0];
        const auto& cm = clifford.classes[1];
        if (deg % 4 == 0) {
            if (!(cp.plus(cm) == algebra_class))
                throw ValidationError(
                    "InvolutionDescriptor: [C+] + [C-] = [A] fails (deg = 0 mod 4)");
        } else {
            // 2[C+] = [A] with 2-torsion classes forces [A] trivial and the
            // relation 3[C+] = [C-] collapses to [C+] = [C-]; anything else
            // would need genuine 4-torsion
            if (!algebra_class.is_trivial() || !(cp == cm))
                throw ValidationError(
                    "InvolutionDescriptor: deg = 2 mod 4 with trivial delta demands 4-torsion "
                    "classes, outside the representable scope");
        }
    } else {
        if (clifford.center != EvenCliffordDescriptor::Center::QuadraticField ||
            !(*clifford.delta == *delta))
            throw ValidationError("InvolutionDescriptor: nontrivial delta must match the center");
    }
    if (star && !(deg == 4 && delta_trivial() && algebra_class.is_trivial()))
        throw ValidationError("InvolutionDescriptor: star requires deg 4, trivial delta, split A");
}

std::string InvolutionDescriptor::literal() const {
    std::string s = "iv:deg=" + std::to_string(deg) + ";A=" + algebra_class.token();
    if (delta) s += ";delta=" + delta->token();
    s += ";C0=" + clifford.token();
    if (!signatures.empty()) {
        s += ";sgn=";
        bool first = true;
        for (auto& [id, v] : signatures) {
            if (!first) s += ",";
            s += std::to_string(v);
            first = false;
        }
    }
    s += ";star=";
    s += star ? "1" : "0";
    return s + "@" + base.spec_string();
}

namespace {

std::optional<Decision> involution_necessary_checks(const InvolutionDescriptor& a,
                                                    const InvolutionDescriptor& b,
                                                    bool gate_on_star) {
    if (a.deg != b.deg)
        return Decision::not_equal("degree-differs", "deg", std::to_string(a.deg),
                                   std::to_string(b.deg));
    if (a.deg % 2 == 0 && a.delta_trivial() != b.delta_trivial())
        return Decision::not_equal("discriminant-triviality-differs", "delta_trivial",
                                   a.delta_trivial() ? "trivial" : "nontrivial",
                                   b.delta_trivial() ? "trivial" : "nontrivial");
    const bool star_case = a.deg == 4 && a.deg % 2 == 0 && a.delta_trivial();
    if (gate_on_star && star_case && !(a.star && b.star))
        return std::nullopt;  // the deeper invariants are not necessary without (*)
    if (!(a.clifford == b.clifford))
        return Decision::not_equal("clifford-differs", "clifford", a.clifford.token(),
                                   b.clifford.token());
    if (!(a.algebra_class == b.algebra_class))
        return Decision::not_equal("algebra-differs", "algebra_class", a.algebra_class.token(),
                                   b.algebra_class.token());
    if (a.signatures != b.signatures) {
        auto render = [](const std::map<std::string, int>& m) {
            std::string s;
            for (auto& [k, v] : m) s += k + ":" + std::to_string(v) + ";";
            return s;
        };
        return Decision::not_equal("signature-differs", "signature", render(a.signatures),
                                   render(b.signatures));
    }
    return std::nullopt;
}

std::vector<std::pair<std::string, std::string>> invariant_differences(
    const InvolutionDescriptor& a, const InvolutionDescriptor& b) {
    std::vector<std::pair<std::string, std::string>> out;
    if (!(a.clifford == b.clifford))
        out.emplace_back("clifford", a.clifford.token() + " vs " + b.clifford.token());
    if (!(a.algebra_class == b.algebra_class))
        out.emplace_back("algebra_class", a.algebra_class.token() + " vs " + b.algebra_class.token());
    if (a.signatures != b.signatures) {
        auto render = [](const std::map<std::string, int>& m) {
            std::string s;
            for (auto& [k, v] : m) s += k + ":" + std::to_string(v) + ";";
            return s;
        };
        out.emplace_back("signature", render(a.signatures) + " vs " + render(b.signatures));
    }
    return out;
}

}  // namespace

Decision involution_isomorphic(const InvolutionDescriptor& a, const InvolutionDescriptor& b) {
    a.validate();
    b.validate();
    if (a.base != b.base) throw DomainError("involution_isomorphic: mixed base fields");
    // every carried invariant is an isomorphism invariant, so differences decide
    if (auto d = involution_necessary_checks(a, b, /*gate_on_star=*/false)) return *d;
    if (a.deg <= 4) {
        // the even Clifford algebra determines the involution in degree <= 4
        // (degree 4 via the etale-quadratic correspondence; lower degrees via
        // the quaternion / discriminant correspondences)
        return Decision::equal("clifford-correspondence");
    }
    if (theorem_flags_hold(a.base, a.deg % 2 == 0))
        return Decision::equal("clifford-and-signature-classification");
    return Decision::inconclusive("field-flags");
}

Decision grothendieck_equal_involutions(const InvolutionDescriptor& a,
                                        const InvolutionDescriptor& b) {
    a.validate();
    b.validate();
    if (a.base != b.base) throw DomainError("grothendieck_equal_involutions: mixed base fields");
    if (auto d = involution_necessary_checks(a, b, /*gate_on_star=*/true)) return *d;
    const bool kollar_case = a.deg == 4 && a.delta_trivial();
    if (kollar_case && !(a.star && b.star)) {
        // products of two conics: class equality is span equality of the
        // quaternion pairs in the Brauer group
        const auto& pa = a.clifford.classes;
        const auto& pb = b.clifford.classes;
        bool eq = subgroup_equal(pa, pb);
        Decision d = eq ? Decision::equal("kollar-span")
                        : Decision::not_equal("kollar-span-differs", "quaternion_span",
                                              "<" + pa[0].token() + "," + pa[1].token() + ">",
                                              "<" + pb[0].token() + "," + pb[1].token() + ">");
        for (auto& diff : invariant_differences(a, b)) d.evidence.push_back(diff);
        return d;
    }
    return involution_isomorphic(a, b);
}

void LPolynomial::add_monomial(int power, i64 c) {
    if (power < 0) throw DomainError("LPolynomial: negative power");
    if (coeff.size() <= std::size_t(power)) coeff.resize(std::size_t(power) + 1, 0);
    coeff[std::size_t(power)] += c;
}

std::string LPolynomial::pretty() const {
    std::string s;
    for (std::size_t i = 0; i < coeff.size(); ++i) {
        if (!coeff[i]) continue;
        if (!s.empty()) s += " + ";
        if (i == 0) s += std::to_string(coeff[i]);
        else {
            if (coeff[i] != 1) s += std::to_string(coeff[i]) + "*";
            s += "L";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    if (kernel_term) {
        if (!s.empty()) s += " + ";
        s += "[Q(" + kernel_term->kernel.literal() + ")]";
        if (kernel_term->shift == 1) s += "*L";
        else if (kernel_term->shift > 1) s += "*L^" + std::to_string(kernel_term->shift);
    }
    if (s.empty()) s = "0";
    return s;
}

bool lpoly_equal(const LPolynomial& a, const LPolynomial& b) {
    auto trimmed = [](const std::vector<i64>& v) {
        auto w = v;
        while (!w.empty() && w.back() == 0) w.pop_back();
        return w;
    };
    if (trimmed(a.coeff) != trimmed(b.coeff)) return false;
    if (a.kernel_term.has_value() != b.kernel_term.has_value()) return false;
    if (!a.kernel_term) return true;
    if (a.kernel_term->shift != b.kernel_term->shift) return false;
    return similar(a.kernel_term->kernel, b.kernel_term->kernel);
}

LPolynomial motivic_class(const QuadraticForm& q) {
    if (q.dim() < 2) throw DegenerateInput("motivic_class: dim(q) >= 2 required");
    auto wd = witt_decompose(q);
    const int n = wd.witt_index;
    const int dk = wd.kernel.dim();
    LPolynomial out;
    for (int i = 0; i < n; ++i) out.add_monomial(i);                    // 1 + L + ... + L^{n-1}
    for (int i = 0; i < n; ++i) out.add_monomial(dk + n - 1 + i);       // L^{dim k}*(L^{n-1}+...+L^{2(n-1)})
    if (dk >= 2) {
        LPolynomial::KernelTerm kt{wd.kernel, quadric_fingerprint(wd.kernel), n};
        out.kernel_term = kt;
    }
    // dim <= 1 kernels bound empty quadrics: [Q_kernel] = 0
    return out;
}

LPolynomial lpoly_hyperbolic_step(const LPolynomial& cls, int dim_q) {
    LPolynomial out;
    out.add_monomial(0);
    out.add_monomial(dim_q);
    for (std::size_t i = 0; i < cls.coeff.size(); ++i)
        if (cls.coeff[i]) out.add_monomial(int(i) + 1, cls.coeff[i]);
    if (cls.kernel_term) {
        auto kt = *cls.kernel_term;
        kt.shift += 1;
        out.kernel_term = kt;
    }
    return out;
}

std::vector<QuadraticForm> enumerate_quadrics(const FieldDescriptor& field, int n) {
    if (n < 1) throw DomainError("enumerate_quadrics: n >= 1 required");
    const int d = n + 1;
    switch (field.kind) {
        case FieldKind::Reals: {
            std::vector<QuadraticForm> out;
            // x_1^2 + ... + x_i^2 - ... with i from ceil(d/2) to d
            for (int i = (d + 1) / 2; i <= d; ++i) {
                std::vector<i64> vals(std::size_t(d), -1);
                std::fill(vals.begin(), vals.begin() + i, 1);
                out.push_back(QuadraticForm::from_values(field, vals));
            }
            return out;
        }
        case FieldKind::Padic: {
            if (d <= 4) {
                // exhaustive diagonal forms over the class representatives,
                // deduplicated by similarity
                std::vector<SquareClass> reps;
                for (int e = 0; e < 2; ++e)
                    for (int f = 0; f < 2; ++f) {
                        SquareClass c = SquareClass::one(field);
                        c.eps = e;
                        c.pi = f;
                        reps.push_back(c);
                    }
                std::vector<QuadraticForm> out;
                std::vector<int> idx(std::size_t(d), 0);
                while (true) {
                    std::vector<SquareClass> entries;
                    for (int i = 0; i < d; ++i) entries.push_back(reps[std::size_t(idx[std::size_t(i)])]);
                    QuadraticForm q = QuadraticForm::from_classes(field, entries);
                    bool fresh = std::none_of(out.begin(), out.end(),
                                              [&](const QuadraticForm& r) { return similar(q, r); });
                    if (fresh) out.push_back(q);
                    int pos = d - 1;
                    while (pos >= 0 && ++idx[std::size_t(pos)] == 4) idx[std::size_t(pos--)] = 0;
                    if (pos < 0) break;
                }
                return out;
            }
            // u(Q_p) = 4: every similarity class of dimension d >= 5 is a
            // lower-dimensional class plus a hyperbolic plane
            auto lower = enumerate_quadrics(field, n - 2);
            std::vector<QuadraticForm> out;
            for (const auto& q : lower) out.push_back(q.plus_hyperbolic(1));
            return out;
        }
        case FieldKind::Rationals:
            throw DomainError("enumerate_quadrics: infinitely many classes over Q");
        case FieldKind::Padic2: break;
    }
    throw DomainError("enumerate_quadrics: unsupported field");
}

InvolutionDescriptor involution_from_form(const QuadraticForm& q) {
    if (q.dim() < 2) throw DegenerateInput("involution_from_form: dim >= 2 required");
    InvolutionDescriptor d;
    d.base = q.base;
    d.deg = q.dim();
    d.algebra_class = BrauerClass2::trivial(q.base);
    if (q.dim() % 2 == 0) d.delta = signed_discriminant(q);
    d.clifford = even_clifford(q);
    for (const Ordering& P : q.base.orderings())
        d.signatures[P.id] = std::abs(signature(q, P));
    d.star = d.deg == 4 && d.delta_trivial();
    d.validate();
    return d;
}

std::vector<InvolutionDescriptor> enumerate_involutions_dim2(const FieldDescriptor& field) {
    if (field.kind != FieldKind::Padic)
        throw DomainError("enumerate_involutions_dim2: requires Q_p with p odd");
    const Place w = unique_place(field);
    const BrauerClass2 triv = BrauerClass2::trivial(field);
    const BrauerClass2 div = BrauerClass2::from_ram(field, {w});

    std::vector<InvolutionDescriptor> out;
    auto push = [&](InvolutionDescriptor d) {
        d.validate();
        out.push_back(std::move(d));
    };

    // split etale center: unordered pairs of quaternion classes {B1, B2};
    // A = B1 (x) B2 has class [B1] + [B2]
    const std::vector<std::pair<BrauerClass2, BrauerClass2>> pairs = {
        {triv, triv}, {triv, div}, {div, div}};
    for (const auto& [b1, b2] : pairs) {
        InvolutionDescriptor d;
        d.base = field;
        d.deg = 4;
        d.delta = SquareClass::one(field);
        d.clifford = EvenCliffordDescriptor::split_pair(b1, b2);
        d.algebra_class = b1.plus(b2);
        d.star = d.algebra_class.is_trivial();
        push(d);
    }
    // quadratic field centers: Br(l)[2] = {0, 1/2} for each of the three
    // quadratic extensions; [A] is the corestriction, which preserves the
    // local invariant
    for (auto [use_eps, use_pi] :
         std::initializer_list<std::pair<bool, bool>>{{true, false}, {false, true}, {true, true}}) {
        SquareClass dclass = SquareClass::one(field);
        dclass.eps = use_eps;
        dclass.pi = use_pi;
        auto ext = EtaleQuadratic::field(dclass);
        for (bool nontrivial : {false, true}) {
            InvolutionDescriptor d;
            d.base = field;
            d.deg = 4;
            d.delta = dclass;
            BrauerClass2 c0 = nontrivial
                                  ? BrauerClass2::from_ram(ext, {w})
                                  : BrauerClass2::trivial_over(ext);
            d.clifford = EvenCliffordDescriptor::over_quadratic(dclass, c0);
            d.algebra_class = nontrivial ? div : triv;
            d.star = false;
            push(d);
        }
    }
    return out;
}

}  // namespace qinv
