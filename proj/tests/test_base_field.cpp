// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qinv/base_field.hpp"
#include "support/oracles.hpp"

using namespace qinv;

TEST_CASE("legendre symbol basics") {
    CHECK(legendre(2, 5) == -1);  // squares mod 5 are {1,4}
    CHECK(legendre(1, 7) == 1);
    CHECK(legendre(5, 5) == 0);
    CHECK(legendre(-1, 13) == 1);
    CHECK(legendre(-1, 7) == -1);
    CHECK_THROWS_AS(legendre(3, 9), DomainError);
    CHECK_THROWS_AS(legendre(3, 2), DomainError);
}

TEST_CASE("kronecker symbol against legendre and mod-8 rules") {
    for (i64 p : {3, 5, 7, 11, 13})
        for (i64 a = -20; a <= 20; ++a) CHECK(kronecker(a, p) == legendre(a, p));
    CHECK(kronecker(2, 2) == 0);
    CHECK(kronecker(7, 2) == 1);   // 7 = -1 mod 8
    CHECK(kronecker(3, 2) == -1);  // 3, 5 mod 8
    CHECK(kronecker(5, 2) == -1);
}

TEST_CASE("field descriptors") {
    auto F = FieldDescriptor::padic(5);
    CHECK(F.epsilon == 2);
    CHECK(FieldDescriptor::padic(7).epsilon == 3);
    CHECK_THROWS_AS(FieldDescriptor::padic(2), DomainError);
    CHECK_THROWS_AS(FieldDescriptor::padic(15), DomainError);
    CHECK_THROWS_AS(FieldDescriptor::padic(5, 4), DomainError);  // 4 is a residue
    CHECK(FieldDescriptor::padic(5, 3).epsilon == 3);
    CHECK(FieldDescriptor::rationals().orderings().size() == 1);
    CHECK(FieldDescriptor::padic(5).orderings().empty());
    CHECK(FieldDescriptor::reals().i3_torsion_free);
    CHECK(FieldDescriptor::reals().hasse_number_finite);
}

TEST_CASE("square classes over Q") {
    auto Q = FieldDescriptor::rationals();
    CHECK(square_class(Q, 18).repr() == 2);  // 18 = 9*2
    CHECK(square_class(Q, -12).repr() == -3);
    CHECK(square_class(Q, 1, 2).repr() == 2);  // 1/2 ~ 2
    CHECK_THROWS_AS(square_class(Q, 0), DegenerateInput);
    // canonicalization is idempotent and multiplicative
    std::mt19937 rng(42);
    std::uniform_int_distribution<i64> d(-300, 300);
    for (int i = 0; i < 400; ++i) {
        i64 a = d(rng), b = d(rng);
        if (a == 0 || b == 0) continue;
        auto ca = square_class(Q, a), cb = square_class(Q, b);
        CHECK(square_class(Q, ca.repr()) == ca);
        CHECK(ca.times(cb) == square_class(Q, a * b));
        CHECK(ca.times(ca).is_trivial());
        CHECK(square_class(Q, a * a * b) == cb);
    }
}

TEST_CASE("square classes over R and Q_p") {
    auto R = FieldDescriptor::reals();
    CHECK(square_class(R, -7).repr() == -1);
    CHECK(square_class(R, 3).is_trivial());
    auto F5 = FieldDescriptor::padic(5);
    // 50 = 2 * 25: the 25 is a square, leaving the non-residue unit 2 = e
    auto c = square_class(F5, 50);
    CHECK(c.token() == "e");
    CHECK(square_class(F5, 10).token() == "ep");
    CHECK(square_class(F5, 4).token() == "1");
    CHECK(square_class(F5, 5).token() == "p");
    CHECK(square_class(F5, 1, 5).token() == "p");
    // -1 is a square mod 5 but not mod 3
    CHECK(square_class(F5, -1).is_trivial());
    CHECK(square_class(FieldDescriptor::padic(3), -1).token() == "e");
    // every class squares to the trivial class
    for (i64 v : {1, 2, 5, 10, -1, -2, 50, 75})
        CHECK(square_class(F5, v * v).is_trivial());
    CHECK_THROWS_AS(square_class(FieldDescriptor::padic2(), 3), DomainError);
}

TEST_CASE("hilbert symbol goldens") {
    CHECK(hilbert_symbol(Place::real(), -1, -1) == -1);  // Hamilton quaternions
    auto F5 = FieldDescriptor::padic(5);
    CHECK(hilbert_symbol(F5, F5.epsilon, 5) == -1);  // the division conic data
    CHECK(hilbert_symbol(F5, 1, 7) == 1);
    CHECK(hilbert_symbol(Place::finite(3), -1, -3) == -1);
    CHECK(hilbert_symbol(Place::finite(2), -1, -3) == 1);
    CHECK(hilbert_symbol(Place::real(), -1, -3) == -1);
    for (const Place& v : {Place::real(), Place::finite(2), Place::finite(5)})
        CHECK(hilbert_symbol(v, 1, 17) == 1);
    // (a, -a) = 1 always
    for (i64 a : {-10, -3, 2, 6, 15})
        for (const Place& v : {Place::real(), Place::finite(2), Place::finite(3), Place::finite(5)})
            CHECK(hilbert_symbol(v, a, -a) == 1);
}

TEST_CASE("reciprocity defects") {
    std::set<Place> want{Place::finite(3), Place::real()};
    CHECK(hilbert_reciprocity_defect(-1, -3) == want);
    CHECK(hilbert_reciprocity_defect(1, 12345).empty());
    std::set<Place> minus{Place::finite(2), Place::real()};
    CHECK(hilbert_reciprocity_defect(-1, -1) == minus);
    for (i64 a = -12; a <= 12; ++a)
        for (i64 b = -12; b <= 12; ++b) {
            if (a == 0 || b == 0) continue;
            CHECK(hilbert_reciprocity_defect(a, b).size() % 2 == 0);
        }
}

TEST_CASE("bimultiplicativity of the symbol") {
    // exhaustive over Q_p square classes
    for (i64 p : {3, 5, 7}) {
        auto F = FieldDescriptor::padic(p);
        std::vector<i64> reps{1, F.epsilon, p, F.epsilon * p};
        for (i64 a : reps)
            for (i64 b : reps)
                for (i64 c : reps) {
                    CHECK(hilbert_symbol(F, a * c * c, b) == hilbert_symbol(F, a, b));
                    CHECK(hilbert_symbol(F, a * b, c) ==
                          hilbert_symbol(F, a, c) * hilbert_symbol(F, b, c));
                    CHECK(hilbert_symbol(F, a, b) == hilbert_symbol(F, b, a));
                }
    }
    // randomized over small squarefree integers at places of Q
    std::mt19937 rng(7);
    std::uniform_int_distribution<i64> d(-30, 30);
    std::vector<Place> places{Place::real(), Place::finite(2), Place::finite(3), Place::finite(5),
                              Place::finite(7)};
    for (int i = 0; i < 300; ++i) {
        i64 a = d(rng), b = d(rng), c = d(rng);
        if (!a || !b || !c) continue;
        for (const Place& v : places) {
            CHECK(hilbert_symbol(v, a * c * c, b) == hilbert_symbol(v, a, b));
            CHECK(hilbert_symbol(v, a * b, c) == hilbert_symbol(v, a, c) * hilbert_symbol(v, b, c));
        }
    }
}

TEST_CASE("symbol agrees with the Hensel solubility oracle") {
    // smaller sweep here; the full p <= 13 sweep runs in the acceptance suite
    for (i64 p : {2, 3, 5}) {
        for (i64 a = -6; a <= 6; ++a)
            for (i64 b = -6; b <= 6; ++b) {
                if (!a || !b) continue;
                int sym = p == 2 ? hilbert_symbol(FieldDescriptor::padic2(), a, b)
                                 : hilbert_symbol(FieldDescriptor::padic(p), a, b);
                CHECK(sym == (oracles::hensel_solubility(a, b, p) ? 1 : -1));
            }
    }
    for (i64 a = -6; a <= 6; ++a)
        for (i64 b = -6; b <= 6; ++b) {
            if (!a || !b) continue;
            int sym = hilbert_symbol(Place::real(), a, b);
            CHECK(sym == (oracles::real_solubility(a, b) ? 1 : -1));
        }
}
