#include <doctest.h>

#include "parityq/generate.hpp"
#include "parityq/global.hpp"

using namespace parityq;

TEST_CASE("relevant places") {
    RationalCubic f(Rational(0), Rational(1), Rational(1));  // L = -9, delta = -31
    auto places = relevant_places(f);
    std::set<Place> s(places.begin(), places.end());
    CHECK(s == std::set<Place>{Place::real(), Place::padic(2), Place::padic(3),
                               Place::padic(31)});

    auto g = RationalCubic::from_roots(Rational(17), Rational(1), Rational(2));
    auto pg = relevant_places(g);
    CHECK(std::count(pg.begin(), pg.end(), Place::padic(17)) == 1);

    // conservative: primes of b are included even when only b sees them
    auto h = RationalCubic::from_roots(Rational(1), Rational(2), Rational(3));  // b = 11
    auto ph = relevant_places(h);
    std::set<Place> sh(ph.begin(), ph.end());
    CHECK(sh.count(Place::real()) == 1);
    CHECK(sh.count(Place::padic(2)) == 1);
    CHECK(sh.count(Place::padic(3)) == 1);
    CHECK(sh.count(Place::padic(11)) == 1);

    CHECK_THROWS_AS(relevant_places(RationalCubic(Rational(Int(1), Int(2)), Rational(1),
                                                  Rational(1))),
                    NotIntegral);
}

TEST_CASE("global product of the error term") {
    CHECK(global_product_H(RationalCubic(Rational(0), Rational(1), Rational(1))).first == 1);
    auto g = RationalCubic::from_roots(Rational(17), Rational(1), Rational(2));
    auto [prod, entries] = global_product_H(g);
    CHECK(prod == 1);
    for (const auto& [v, h] : entries)
        if (v.is_padic() && v.p() == 17) CHECK(h == 1);

    Rng rng(3);
    for (int i = 0; i < 100; ++i)
        CHECK(global_product_H(rand_integral_cubic(rng, 500)).first == 1);
}

TEST_CASE("global identity modes") {
    auto f = RationalCubic::from_roots(Rational(1), Rational(2), Rational(3));
    CHECK_THROWS_AS(global_identity(f, GlobalMode::Strict), StrictModeUnsupported);
    try {
        global_identity(f, GlobalMode::Strict);
    } catch (const StrictModeUnsupported& e) {
        CHECK(std::count(e.places.begin(), e.places.end(), "2") == 1);
    }

    auto g = RationalCubic::from_roots(Rational(17), Rational(1), Rational(2));
    GlobalReport rep = global_identity(g, GlobalMode::Inferred);
    CHECK(rep.all_identities);
    CHECK(rep.product_H == 1);
    CHECK(rep.product_lambda == rep.product_w);
    CHECK(rep.any_inferred);
    bool two_inferred = false;
    for (const auto& v : rep.inferred_places) two_inferred |= (v.is_padic() && v.p() == 2);
    CHECK(two_inferred);

    Rng rng(8);
    for (int i = 0; i < 60; ++i) {
        RationalCubic h = (i % 2 == 0) ? rand_integral_cubic(rng, 60) : rand_split_cubic(rng, 60);
        GlobalReport r = global_identity(h, GlobalMode::Inferred);
        CHECK(r.all_identities);
    }
}

TEST_CASE("support bound is idempotent") {
    // places beyond the computed support carry trivial data
    auto f = RationalCubic::from_roots(Rational(17), Rational(1), Rational(2));
    for (long p : {7L, 11L, 23L, 101L}) {
        LocalParityReport rep = local_report(f, Place::padic(p));
        REQUIRE(rep.supported);
        CHECK(rep.H == 1);
        CHECK(*rep.lambda == 1);
        CHECK(rep.ww() == 1);
        CHECK(rep.padic_data->type.row == ReductionRow::Good);
    }
}
