#include <doctest.h>

#include "parityq/generate.hpp"
#include "parityq/mobius.hpp"
#include "parityq/verify.hpp"

using namespace parityq;
using parityq::checks::mobius_identities_ok;
using parityq::shifted_partner_roots;

TEST_CASE("pinned matchings") {
    RootTriple a{Rational(1), Rational(2), Rational(3)};

    // identity: B = C = 0, A = D
    MobiusMatch id = mobius_match(a, a);
    CHECK(id.A == id.D);
    CHECK(id.B.is_zero());
    CHECK(id.C.is_zero());
    CHECK(id.branch == MobiusBranch::QuadraticTwist);
    RationalCubic g1 = RationalCubic::from_roots(a[0], a[1], a[2]);
    NormalForm nf = normal_form(id, g1);
    CHECK(nf.d == Rational(1));

    // translation: C = 0
    RootTriple b{Rational(2), Rational(3), Rational(4)};
    MobiusMatch tr = mobius_match(a, b);
    CHECK(tr.C.is_zero());
    CHECK(tr.branch == MobiusBranch::QuadraticTwist);
    CHECK(tr.apply(Rational(1)) == Rational(2));
    CHECK(normal_form(tr, g1).d == Rational(1));

    // planted A = 0
    RootTriple c{Rational(6), Rational(3), Rational(2)};
    MobiusMatch xf = mobius_match(a, c);
    CHECK(xf.A.is_zero());
    CHECK(xf.branch == MobiusBranch::XfForm);
    NormalForm nx = normal_form(xf, g1);
    // d = -C a1 a2 a3 / B with C = -2, B = -12
    CHECK(nx.d == Rational(-1));

    CHECK_THROWS_AS(mobius_match(RootTriple{Rational(1), Rational(1), Rational(2)}, a),
                    NotSeparable);
    CHECK_THROWS_AS(mobius_match(RootTriple{Rational(0), Rational(1), Rational(2)}, a),
                    RootAtZero);
    CHECK_THROWS_AS(
        normal_form(xf, RationalCubic::from_roots(Rational(7), Rational(8), Rational(9))),
        BranchMismatch);
}

TEST_CASE("matching identities hold exactly") {
    Rng rng(5);
    int branch_general = 0, branch_twist = 0, branch_xf = 0;
    for (int i = 0; i < 250; ++i) {
        RationalCubic f = rand_split_cubic(rng, 12);
        RootTriple a{f.root_data()->roots[0], f.root_data()->roots[1], f.root_data()->roots[2]};
        RootTriple b;
        if (i % 3 == 0) {
            Rational g{Int(rng.range(-6, 6)), Int(rng.range(1, 3))};
            if (f.eval(-g).is_zero()) continue;
            b = shifted_partner_roots(a, g);
            if (b[0] == b[1] || b[0] == b[2] || b[1] == b[2]) continue;
        } else if (i % 3 == 1) {
            Rational t{Int(rng.nonzero(-9, 9))};
            bool bad = false;
            for (int k = 0; k < 3; ++k) {
                b[(std::size_t)k] = a[(std::size_t)k] + t;
                bad = bad || b[(std::size_t)k].is_zero();
            }
            if (bad) continue;
        } else {
            Rational b1{Int(rng.nonzero(-9, 9))}, b2{Int(rng.nonzero(-9, 9))};
            if (b1 == b2) continue;
            Rational den = a[2] * (a[0] - a[1]);
            Rational b3 = -(b1 * a[0] * (a[1] - a[2]) + b2 * a[1] * (a[2] - a[0])) / den;
            if (b3.is_zero() || b3 == b1 || b3 == b2) continue;
            b = RootTriple{b1, b2, b3};
        }
        RationalCubic g2 = RationalCubic::from_roots(b[0], b[1], b[2]);
        MobiusMatch m = mobius_match(a, b);
        for (int k = 0; k < 3; ++k) CHECK(m.apply(a[(std::size_t)k]) == b[(std::size_t)k]);
        CHECK(mobius_identities_ok(m, f, g2));
        switch (m.branch) {
            case MobiusBranch::General: ++branch_general; break;
            case MobiusBranch::QuadraticTwist: ++branch_twist; break;
            case MobiusBranch::XfForm: ++branch_xf; break;
        }
    }
    CHECK(branch_general > 0);
    CHECK(branch_twist > 0);
    CHECK(branch_xf > 0);
}

TEST_CASE("inverse matchings compose to the identity") {
    Rng rng(6);
    for (int i = 0; i < 60; ++i) {
        RationalCubic f = rand_split_cubic(rng, 10);
        RootTriple a{f.root_data()->roots[0], f.root_data()->roots[1], f.root_data()->roots[2]};
        Rational g{Int(rng.range(-5, 5)), Int(rng.range(1, 2))};
        if (f.eval(-g).is_zero()) continue;
        RootTriple b = shifted_partner_roots(a, g);
        if (b[0] == b[1] || b[0] == b[2] || b[1] == b[2]) continue;
        MobiusMatch fwd = mobius_match(a, b);
        MobiusMatch bwd = mobius_match(b, a);
        for (int k = 0; k < 3; ++k) {
            Rational z = a[(std::size_t)k];
            CHECK(bwd.apply(fwd.apply(z)) == z);
        }
        // and on a few non-root points (skipping poles)
        for (int t = 0; t < 3; ++t) {
            Rational z = rand_rational(rng, 20, 5);
            try {
                Rational w = fwd.apply(z);
                Rational back = bwd.apply(w);
                CHECK(back == z);
            } catch (const ZeroArgument&) {
            }
        }
    }
}

TEST_CASE("branch classification is permutation stable") {
    RootTriple a{Rational(1), Rational(2), Rational(3)};
    RootTriple b{Rational(6), Rational(3), Rational(2)};
    int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (auto& pm : perms) {
        RootTriple ap{a[(std::size_t)pm[0]], a[(std::size_t)pm[1]], a[(std::size_t)pm[2]]};
        RootTriple bp{b[(std::size_t)pm[0]], b[(std::size_t)pm[1]], b[(std::size_t)pm[2]]};
        CHECK(mobius_match(ap, bp).branch == MobiusBranch::XfForm);
    }
}

TEST_CASE("partner streams validate") {
    RationalCubic f = RationalCubic::from_roots(Rational(1), Rational(2), Rational(3));
    auto pairs = pair_generator(f, 7, 100);
    REQUIRE(pairs.size() == 100);
    for (const auto& pr : pairs) {
        // the stream pairs each root with the partner's matching root
        for (const auto& beta : pr.betas) CHECK(pr.f2.eval(beta).is_zero());
        MobiusMatch m = mobius_match(pr.alphas, pr.betas);
        CHECK(mobius_identities_ok(m, pr.f1,
                                   RationalCubic::from_roots(pr.betas[0], pr.betas[1],
                                                             pr.betas[2])));
        // shared 2-torsion at gamma = 0 reproduces the attached model
        if (pr.gamma.is_zero()) CHECK(pr.f2 == jac_cubic(pr.f1));
    }
    // determinism of the stream
    auto again = pair_generator(f, 7, 100);
    for (std::size_t i = 0; i < pairs.size(); ++i) CHECK(pairs[i].gamma == again[i].gamma);
    CHECK_THROWS_AS(pair_generator(RationalCubic(Rational(0), Rational(1), Rational(1)), 1, 5),
                    NotSeparable);
}
