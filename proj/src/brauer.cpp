// SPDX-License-Identifier: Apache-2.0
#include "qinv/brauer.hpp"

#include <algorithm>

namespace qinv {

EtaleQuadratic EtaleQuadratic::split_algebra(const FieldDescriptor& base) {
    EtaleQuadratic e;
    e.base = base;
    e.split = true;
    return e;
}

EtaleQuadratic EtaleQuadratic::field(const SquareClass& d) {
    if (d.is_trivial())
        throw ValidationError("EtaleQuadratic::field: d must be a nontrivial square class");
    EtaleQuadratic e;
    e.base = d.base;
    e.split = false;
    e.d = d;
    return e;
}

std::string EtaleQuadratic::token() const {
    return split ? "split" : "sqrt(" + d->token() + ")";
}

bool EtaleQuadratic::operator==(const EtaleQuadratic& o) const {
    if (base != o.base || split != o.split) return false;
    return split || *d == *o.d;
}

namespace {

void check_ram(const FieldDescriptor& field, const std::optional<EtaleQuadratic>& ext,
               const std::set<Place>& ram) {
    const bool local = field.is_local();
    for (const Place& v : ram) {
        if (v.slot != 0 && v.slot != 1)
            throw ValidationError("BrauerClass2: place slot must be 0 or 1");
        if (!ext && v.slot != 0)
            throw ValidationError("BrauerClass2: slots are reserved for etale extensions");
        if (ext && !ext->split && v.slot == 1) {
            // a second place above v exists only when v splits in the field
            if (local || splitting_in_quadratic(*ext->d, v.with_slot(0)) != SplittingType::Split)
                throw ValidationError("BrauerClass2: slot 1 at a non-split place");
        }
        if (local) {
            Place base = v.with_slot(0);
            if (base != unique_place(field))
                throw ValidationError("BrauerClass2: support must lie over the unique place");
        } else if (v.kind == Place::Kind::Finite && !is_prime(v.p)) {
            throw ValidationError("BrauerClass2: finite places of Q must be prime");
        }
    }
    // reciprocity over global bases: total invariant must be an integer
    if (!local) {
        if (!ext) {
            if (ram.size() % 2 != 0)
                throw ValidationError("BrauerClass2: odd ramification set over Q");
        } else if (!ext->split) {
            if (ram.size() % 2 != 0)
                throw ValidationError("BrauerClass2: odd ramification set over a quadratic field");
        } else {
            std::size_t c0 = 0, c1 = 0;
            for (const Place& v : ram) (v.slot == 0 ? c0 : c1)++;
            if (c0 % 2 || c1 % 2)
                throw ValidationError("BrauerClass2: odd ramification in a split factor");
        }
    }
}

}  // namespace

BrauerClass2 BrauerClass2::trivial(const FieldDescriptor& field) {
    BrauerClass2 c;
    c.field = field;
    return c;
}

BrauerClass2 BrauerClass2::trivial_over(const EtaleQuadratic& ext) {
    BrauerClass2 c;
    c.field = ext.base;
    c.ext = ext;
    return c;
}

BrauerClass2 BrauerClass2::from_ram(const FieldDescriptor& field, std::set<Place> ram) {
    check_ram(field, std::nullopt, ram);
    BrauerClass2 c;
    c.field = field;
    c.ram = std::move(ram);
    return c;
}

BrauerClass2 BrauerClass2::from_ram(const EtaleQuadratic& ext, std::set<Place> ram) {
    check_ram(ext.base, ext, ram);
    BrauerClass2 c;
    c.field = ext.base;
    c.ext = ext;
    c.ram = std::move(ram);
    return c;
}

bool BrauerClass2::same_base(const BrauerClass2& o) const {
    if (field != o.field || ext.has_value() != o.ext.has_value()) return false;
    return !ext || *ext == *o.ext;
}

BrauerClass2 BrauerClass2::plus(const BrauerClass2& o) const {
    if (!same_base(o)) throw DomainError("BrauerClass2::plus: mixed bases");
    BrauerClass2 r = *this;
    r.ram.clear();
    std::set_symmetric_difference(ram.begin(), ram.end(), o.ram.begin(), o.ram.end(),
                                  std::inserter(r.ram, r.ram.begin()));
    return r;
}

std::string BrauerClass2::token() const {
    std::string s = "ram{";
    bool first = true;
    for (const Place& v : ram) {
        if (!first) s += ",";
        s += v.token();
        first = false;
    }
    return s + "}";
}

bool BrauerClass2::operator==(const BrauerClass2& o) const {
    return same_base(o) && ram == o.ram;
}

bool BrauerClass2::operator<(const BrauerClass2& o) const {
    return std::lexicographical_compare(ram.begin(), ram.end(), o.ram.begin(), o.ram.end());
}

BrauerClass2 quaternion_class(const FieldDescriptor& field, const SquareClass& a,
                              const SquareClass& b) {
    if (field.kind == FieldKind::Rationals)
        return BrauerClass2::from_ram(field, hilbert_reciprocity_defect(a, b));
    std::set<Place> ram;
    if (hilbert_symbol(field, a, b) == -1) ram.insert(unique_place(field));
    return BrauerClass2::from_ram(field, std::move(ram));
}

BrauerClass2 quaternion_class(const FieldDescriptor& field, i64 a, i64 b) {
    if (a == 0 || b == 0) throw DegenerateInput("quaternion_class: zero slot");
    if (field.kind == FieldKind::Rationals)
        return BrauerClass2::from_ram(field, hilbert_reciprocity_defect(a, b));
    std::set<Place> ram;
    if (hilbert_symbol(field, a, b) == -1) ram.insert(unique_place(field));
    return BrauerClass2::from_ram(field, std::move(ram));
}

SplittingType splitting_in_quadratic(const SquareClass& d, const Place& v) {
    if (d.base.kind != FieldKind::Rationals)
        throw DomainError("splitting_in_quadratic: d must be a class over Q");
    if (d.is_trivial()) throw ValidationError("splitting_in_quadratic: d must be nontrivial");
    if (v.kind == Place::Kind::Real) {
        if (d.sign > 0) return SplittingType::Split;
        return SplittingType::Ramified;  // complex place above inf: local degree 2
    }
    const i64 p = v.p;
    const bool divides = std::binary_search(d.primes.begin(), d.primes.end(), p);
    if (p == 2) {
        if (divides) return SplittingType::Ramified;
        i64 r = d.sign < 0 ? 7 : 1;
        for (i64 q : d.primes) r = (r * (q % 8)) % 8;
        if (r == 1) return SplittingType::Split;
        if (r == 5) return SplittingType::Inert;
        return SplittingType::Ramified;  // d = 3, 7 mod 8: 2 ramifies in Q(sqrt(d))
    }
    if (divides) return SplittingType::Ramified;
    i64 r = d.sign < 0 ? p - 1 : 1;
    for (i64 q : d.primes) r = i64((i128(r) * (q % p)) % p);
    return legendre(r, p) == 1 ? SplittingType::Split : SplittingType::Inert;
}

BrauerClass2 restrict_class(const BrauerClass2& cls, const EtaleQuadratic& ext) {
    if (cls.ext) throw DomainError("restrict_class: class already lives over an extension");
    if (ext.base != cls.field) throw DomainError("restrict_class: extension over a different base");
    if (ext.split) {
        std::set<Place> ram;
        for (const Place& v : cls.ram) {
            ram.insert(v.with_slot(0));
            ram.insert(v.with_slot(1));
        }
        return BrauerClass2::from_ram(ext, std::move(ram));
    }
    switch (cls.field.kind) {
        case FieldKind::Reals:
        case FieldKind::Padic:
            // the unique quaternion division algebra over a local or real field
            // is split by every quadratic field extension (local degree 2)
            return BrauerClass2::trivial_over(ext);
        case FieldKind::Rationals: {
            std::set<Place> ram;
            for (const Place& v : cls.ram) {
                switch (splitting_in_quadratic(*ext.d, v)) {
                    case SplittingType::Split:
                        // two places above v, local degree 1: invariant survives at both
                        ram.insert(v.with_slot(0));
                        ram.insert(v.with_slot(1));
                        break;
                    case SplittingType::Inert:
                    case SplittingType::Ramified:
                        // one place above v, local degree 2: the invariant dies
                        break;
                }
            }
            return BrauerClass2::from_ram(ext, std::move(ram));
        }
        case FieldKind::Padic2: break;
    }
    throw DomainError("restrict_class: unsupported base field");
}

BrauerClass2 split_component(const BrauerClass2& cls, int slot) {
    if (!cls.ext || !cls.ext->split)
        throw DomainError("split_component: class does not live over a split algebra");
    std::set<Place> ram;
    for (const Place& v : cls.ram)
        if (v.slot == slot) ram.insert(v.with_slot(0));
    return BrauerClass2::from_ram(cls.field, std::move(ram));
}

bool subgroup_equal(const std::vector<BrauerClass2>& gens, const std::vector<BrauerClass2>& gens2) {
    for (const auto& g : gens)
        for (const auto& h : gens2)
            if (!g.same_base(h)) throw DomainError("subgroup_equal: mixed bases");

    std::set<Place> support;
    for (const auto& g : gens) support.insert(g.ram.begin(), g.ram.end());
    for (const auto& g : gens2) support.insert(g.ram.begin(), g.ram.end());
    std::vector<Place> coords(support.begin(), support.end());

    auto to_vec = [&](const BrauerClass2& c) {
        std::vector<char> v(coords.size(), 0);
        for (std::size_t i = 0; i < coords.size(); ++i) v[i] = c.ram.count(coords[i]) ? 1 : 0;
        return v;
    };
    // F2 row echelon basis of a span
    auto reduce = [](std::vector<std::vector<char>> rows) {
        std::vector<std::vector<char>> basis;
        for (auto& r : rows) {
            for (const auto& b : basis) {
                std::size_t lead = 0;
                while (lead < b.size() && !b[lead]) ++lead;
                if (lead < b.size() && r[lead])
                    for (std::size_t i = 0; i < r.size(); ++i) r[i] ^= b[i];
            }
            if (std::any_of(r.begin(), r.end(), [](char x) { return x != 0; })) basis.push_back(r);
        }
        return basis;
    };
    auto in_span = [](const std::vector<std::vector<char>>& basis, std::vector<char> v) {
        for (const auto& b : basis) {
            std::size_t lead = 0;
            while (lead < b.size() && !b[lead]) ++lead;
            if (lead < b.size() && v[lead])
                for (std::size_t i = 0; i < v.size(); ++i) v[i] ^= b[i];
        }
        return std::none_of(v.begin(), v.end(), [](char x) { return x != 0; });
    };

    std::vector<std::vector<char>> rows1, rows2;
    for (const auto& g : gens) rows1.push_back(to_vec(g));
    for (const auto& g : gens2) rows2.push_back(to_vec(g));
    auto b1 = reduce(rows1), b2 = reduce(rows2);
    for (const auto& r : rows1)
        if (!in_span(b2, r)) return false;
    for (const auto& r : rows2)
        if (!in_span(b1, r)) return false;
    return true;
}

}  // namespace qinv
