// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qinv/brauer.hpp"

using namespace qinv;

namespace {
const auto Q = FieldDescriptor::rationals();
const auto R = FieldDescriptor::reals();
}  // namespace

TEST_CASE("quaternion classes") {
    auto H = quaternion_class(R, -1, -1);
    CHECK(H.ram == std::set<Place>{Place::real()});
    CHECK(quaternion_class(R, 1, -1).is_trivial());
    CHECK(quaternion_class(Q, 1, 12345).is_trivial());
    auto c = quaternion_class(Q, -1, -3);
    CHECK(c.ram == std::set<Place>{Place::finite(3), Place::real()});
    CHECK_THROWS_AS(quaternion_class(Q, 0, 3), DegenerateInput);
}

TEST_CASE("class validation") {
    CHECK_THROWS_AS(BrauerClass2::from_ram(Q, {Place::finite(3)}), ValidationError);
    CHECK_THROWS_AS(BrauerClass2::from_ram(Q, {Place::finite(4), Place::real()}), ValidationError);
    CHECK_NOTHROW(BrauerClass2::from_ram(Q, {Place::finite(3), Place::real()}));
    CHECK_THROWS_AS(BrauerClass2::from_ram(R, {Place::finite(3)}), ValidationError);
    CHECK_NOTHROW(BrauerClass2::from_ram(FieldDescriptor::padic(5), {Place::finite(5)}));
}

TEST_CASE("group laws") {
    // exhaustive over the local groups
    auto F5 = FieldDescriptor::padic(5);
    auto triv = BrauerClass2::trivial(F5);
    auto div = BrauerClass2::from_ram(F5, {Place::finite(5)});
    for (const auto& a : {triv, div})
        for (const auto& b : {triv, div}) {
            CHECK(a.plus(b) == b.plus(a));
            CHECK(a.plus(a).is_trivial());
            CHECK(a.plus(triv) == a);
            for (const auto& c : {triv, div}) CHECK(a.plus(b.plus(c)) == a.plus(b).plus(c));
        }
    // randomized over Q with small prime supports
    std::mt19937 rng(3);
    std::vector<i64> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
    auto random_class = [&]() {
        std::set<Place> ram;
        int k = int(rng() % 3) * 2;  // even size
        while (int(ram.size()) < k) ram.insert(Place::finite(primes[rng() % primes.size()]));
        return BrauerClass2::from_ram(Q, ram);
    };
    for (int i = 0; i < 200; ++i) {
        auto a = random_class(), b = random_class(), c = random_class();
        CHECK(a.plus(b) == b.plus(a));
        CHECK(a.plus(b).plus(c) == a.plus(b.plus(c)));
        CHECK(a.plus(a).is_trivial());
        CHECK(a.plus(b).ram.size() % 2 == 0);
    }
}

TEST_CASE("quaternion symmetry and hyperbolicity") {
    std::mt19937 rng(9);
    std::uniform_int_distribution<i64> d(-20, 20);
    for (int i = 0; i < 150; ++i) {
        i64 a = d(rng), b = d(rng);
        if (!a || !b) continue;
        CHECK(quaternion_class(Q, a, b) == quaternion_class(Q, b, a));
        CHECK(quaternion_class(Q, a, -a).is_trivial());
        CHECK(quaternion_class(Q, a, a * b * b) == quaternion_class(Q, a, b * b).plus(
                  quaternion_class(Q, a, a)));
    }
}

TEST_CASE("splitting types in quadratic extensions") {
    auto d5 = square_class(Q, 5);
    // 5 = 1 mod 4: disc 5; 2 is inert in Q(sqrt 5) since 5 = 5 mod 8
    CHECK(splitting_in_quadratic(d5, Place::finite(2)) == SplittingType::Inert);
    CHECK(splitting_in_quadratic(d5, Place::finite(5)) == SplittingType::Ramified);
    CHECK(splitting_in_quadratic(d5, Place::real()) == SplittingType::Split);
    CHECK(splitting_in_quadratic(d5, Place::finite(11)) == SplittingType::Split);   // 5 = 4^2 mod 11
    CHECK(splitting_in_quadratic(d5, Place::finite(3)) == SplittingType::Inert);
    auto dm1 = square_class(Q, -1);
    CHECK(splitting_in_quadratic(dm1, Place::real()) == SplittingType::Ramified);
    CHECK(splitting_in_quadratic(dm1, Place::finite(5)) == SplittingType::Split);
    CHECK(splitting_in_quadratic(dm1, Place::finite(3)) == SplittingType::Inert);
    CHECK(splitting_in_quadratic(dm1, Place::finite(2)) == SplittingType::Ramified);
    auto d17 = square_class(Q, 17);  // 17 = 1 mod 8: 2 splits
    CHECK(splitting_in_quadratic(d17, Place::finite(2)) == SplittingType::Split);
}

TEST_CASE("restriction: local classes die in quadratic extensions") {
    auto F5 = FieldDescriptor::padic(5);
    auto div = BrauerClass2::from_ram(F5, {Place::finite(5)});
    for (const char* tok : {"e", "p", "ep"}) {
        SquareClass d = SquareClass::one(F5);
        d.eps = tok[0] == 'e';
        d.pi = tok[0] == 'p' || tok[1] == 'p';
        auto ext = EtaleQuadratic::field(d);
        CHECK(restrict_class(div, ext).is_trivial());
    }
    auto H = quaternion_class(R, -1, -1);
    CHECK(restrict_class(H, EtaleQuadratic::field(square_class(R, -1))).is_trivial());
}

TEST_CASE("restriction to the split algebra mirrors the class") {
    auto c = quaternion_class(Q, -1, -3);
    auto res = restrict_class(c, EtaleQuadratic::split_algebra(Q));
    CHECK(split_component(res, 0) == c);
    CHECK(split_component(res, 1) == c);
}

TEST_CASE("restriction along Q(sqrt d)/Q follows the local degrees") {
    // {3, inf} restricted to Q(i): 3 inert (dies), inf complex (dies)
    auto c = quaternion_class(Q, -1, -3);
    auto resi = restrict_class(c, EtaleQuadratic::field(square_class(Q, -1)));
    CHECK(resi.is_trivial());
    // {3, inf} restricted to Q(sqrt 3): 3 ramifies (dies), inf splits (two
    // real places, both keep the invariant)
    auto res3 = restrict_class(c, EtaleQuadratic::field(square_class(Q, 3)));
    CHECK(res3.ram == std::set<Place>{Place::real().with_slot(0), Place::real().with_slot(1)});
    // restriction is a homomorphism
    std::mt19937 rng(21);
    std::uniform_int_distribution<i64> dd(-15, 15);
    auto ext = EtaleQuadratic::field(square_class(Q, 6));
    for (int i = 0; i < 100; ++i) {
        i64 a = dd(rng), b = dd(rng), u = dd(rng), v = dd(rng);
        if (!a || !b || !u || !v) continue;
        auto x = quaternion_class(Q, a, b), y = quaternion_class(Q, u, v);
        CHECK(restrict_class(x.plus(y), ext) == restrict_class(x, ext).plus(restrict_class(y, ext)));
    }
}

TEST_CASE("the kernel of restriction contains the classes split by the extension") {
    // (d, t) dies over Q(sqrt d): classical relative Brauer group fact, and a
    // strong consistency check of the splitting rule
    std::mt19937 rng(31);
    std::uniform_int_distribution<i64> dd(-20, 20);
    for (i64 d : {-1, 2, 3, 5, -6, 10}) {
        auto ext = EtaleQuadratic::field(square_class(Q, d));
        for (int i = 0; i < 60; ++i) {
            i64 t = dd(rng);
            if (!t) continue;
            CHECK(restrict_class(quaternion_class(Q, d, t), ext).is_trivial());
        }
    }
}

TEST_CASE("restriction output satisfies reciprocity over the extension") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<i64> dd(-20, 20);
    for (i64 d : {-1, 2, 5, -6}) {
        auto ext = EtaleQuadratic::field(square_class(Q, d));
        for (int i = 0; i < 80; ++i) {
            i64 a = dd(rng), b = dd(rng);
            if (!a || !b) continue;
            auto res = restrict_class(quaternion_class(Q, a, b), ext);
            CHECK(res.ram.size() % 2 == 0);
        }
    }
}

TEST_CASE("subgroup comparison") {
    auto H = quaternion_class(R, -1, -1);
    auto triv = BrauerClass2::trivial(R);
    CHECK(subgroup_equal({H, triv}, {H, H}));
    auto F5 = FieldDescriptor::padic(5);
    auto D = BrauerClass2::from_ram(F5, {Place::finite(5)});
    auto t5 = BrauerClass2::trivial(F5);
    CHECK(subgroup_equal({D, D}, {D, t5}));
    auto c23 = quaternion_class(Q, -1, -3).plus(quaternion_class(Q, -1, -1));  // ram {2,3}
    auto c25 = quaternion_class(Q, 2, 5);
    CHECK(!subgroup_equal({c23}, {c25}));
    CHECK_THROWS_AS(subgroup_equal({H}, {t5}), DomainError);
}

TEST_CASE("subgroup comparison is a basis-invariant equivalence") {
    std::mt19937 rng(55);
    std::vector<i64> primes{2, 3, 5, 7, 11};
    auto random_class = [&]() {
        std::set<Place> ram;
        int k = int(rng() % 3) * 2;
        while (int(ram.size()) < k) ram.insert(Place::finite(primes[rng() % primes.size()]));
        return BrauerClass2::from_ram(Q, ram);
    };
    for (int i = 0; i < 100; ++i) {
        auto a = random_class(), b = random_class(), c = random_class();
        std::vector<BrauerClass2> g1{a, b}, g2{b, a}, g3{a.plus(b), b}, g4{a, c};
        CHECK(subgroup_equal(g1, g1));
        CHECK(subgroup_equal(g1, g2));
        CHECK(subgroup_equal(g1, g3));  // row operations preserve the span
        if (subgroup_equal(g1, g4) && subgroup_equal(g4, g3)) CHECK(subgroup_equal(g1, g3));
    }
}
