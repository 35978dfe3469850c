// SPDX-License-Identifier: Apache-2.0
#ifndef QINV_BRAUER_HPP
#define QINV_BRAUER_HPP

#include <optional>
#include <set>
#include <vector>

#include "qinv/base_field.hpp"

namespace qinv {

/// A quadratic etale algebra over the base field: k x k or k(sqrt(d)) with d
/// a nontrivial square class.
struct EtaleQuadratic {
    FieldDescriptor base;
    bool split = false;
    std::optional<SquareClass> d;  // field case only, nontrivial

    static EtaleQuadratic split_algebra(const FieldDescriptor& base);
    static EtaleQuadratic field(const SquareClass& d);

    std::string token() const;  // "split", "sqrt(ep)", "sqrt(-1)"
    bool operator==(const EtaleQuadratic& o) const;
    bool operator!=(const EtaleQuadratic& o) const { return !(*this == o); }
};

/// A 2-torsion Brauer class given by its set of ramified places (local
/// invariant 1/2).  The class may live over the base field itself or over a
/// quadratic etale extension of it; in the etale case the places carry the
/// rational place below plus a slot distinguishing the places above a split
/// rational place (field case) or the two direct factors (split case).
struct BrauerClass2 {
    FieldDescriptor field;               // the underlying base field
    std::optional<EtaleQuadratic> ext;   // nullopt: class over the base field
    std::set<Place> ram;

    static BrauerClass2 trivial(const FieldDescriptor& field);
    static BrauerClass2 trivial_over(const EtaleQuadratic& ext);
    static BrauerClass2 from_ram(const FieldDescriptor& field, std::set<Place> ram);
    static BrauerClass2 from_ram(const EtaleQuadratic& ext, std::set<Place> ram);

    bool is_trivial() const { return ram.empty(); }
    /// Group law: symmetric difference of ramification sets (every class is
    /// its own inverse).
    BrauerClass2 plus(const BrauerClass2& o) const;

    bool same_base(const BrauerClass2& o) const;
    std::string token() const;  // "ram{3,inf}"
    bool operator==(const BrauerClass2& o) const;
    bool operator!=(const BrauerClass2& o) const { return !(*this == o); }
    bool operator<(const BrauerClass2& o) const;  // canonical order
};

/// Class of the quaternion algebra (a,b) over the given field.
BrauerClass2 quaternion_class(const FieldDescriptor& field, i64 a, i64 b);
BrauerClass2 quaternion_class(const FieldDescriptor& field, const SquareClass& a,
                              const SquareClass& b);

/// How a rational place behaves in Q(sqrt(d)) (d a nontrivial class over Q).
enum class SplittingType { Split, Inert, Ramified };
SplittingType splitting_in_quadratic(const SquareClass& d, const Place& v);

/// Restriction of scalars Br(k) -> Br(l) along a quadratic etale extension.
/// Split algebra: the class is copied into both factors (slots 0 and 1).
/// Field extension: at each ramified place v of the class, the local degree
/// rule applies -- v split in l keeps invariant 1/2 at both places above v,
/// v inert or ramified has local degree 2 and the invariant dies.
BrauerClass2 restrict_class(const BrauerClass2& cls, const EtaleQuadratic& ext);

/// Extract the slot-i component of a class over a split etale algebra.
BrauerClass2 split_component(const BrauerClass2& cls, int slot);

/// Whether the F2-spans of the two generator lists coincide.
bool subgroup_equal(const std::vector<BrauerClass2>& gens,
                    const std::vector<BrauerClass2>& gens2);

}  // namespace qinv

#endif
