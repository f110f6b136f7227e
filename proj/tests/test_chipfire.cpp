#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brute.hpp"
#include "laplat/chipfire.hpp"

using namespace laplat;
using namespace laplat::testing;

TEST_CASE("firing moves") {
    CHECK(fire(k3(), {0, 0, 0}, 0, FireDirection::LEND) == IVec{-2, 1, 1});
    IVec c{1, 0, 0};
    CHECK(fire(g7(), c, 2, FireDirection::LEND) == IVec{3, 2, -4});
    // borrow undoes lend
    CHECK(fire(k3(), fire(k3(), c, 1, FireDirection::LEND), 1,
               FireDirection::BORROW) == c);
    // a full sweep of lends is the identity
    IVec swept = c;
    for (int v = 0; v < 3; ++v) swept = fire(g7(), swept, v, FireDirection::LEND);
    CHECK(swept == c);
    CHECK_THROWS_AS(fire(k3(), c, 5, FireDirection::LEND), std::invalid_argument);
}

TEST_CASE("equivalence witnesses") {
    auto w = equivalent(k3(), {2, -1, 0}, {0, 0, 1});
    REQUIRE(w.has_value());
    CHECK(*w == IVec{1, 0, 0});

    auto self = equivalent(g7(), {1, 2, 3}, {1, 2, 3});
    REQUIRE(self.has_value());
    CHECK(*self == IVec{0, 0, 0});

    CHECK_FALSE(equivalent(k3(), {1, -1, 0}, {0, 0, 0}).has_value());
    CHECK_FALSE(equivalent(k3(), {1, 0, 0}, {0, 0, 0}).has_value());  // degree
}

TEST_CASE("equivalence is an equivalence relation on samples") {
    std::mt19937 rng(71);
    std::uniform_int_distribution<Int> chips(-3, 3);
    Multigraph g = g7();
    LaplacianLattice lat(g);
    for (int t = 0; t < 50; ++t) {
        IVec a{chips(rng), chips(rng), chips(rng)};
        IVec b = a, c = a;
        // translate by random lattice points to get equivalent configurations
        IVec qb = lat.combine({chips(rng), chips(rng)});
        IVec qc = lat.combine({chips(rng), chips(rng)});
        for (int i = 0; i < 3; ++i) {
            b[i] += qb[i];
            c[i] += qc[i];
        }
        CHECK(equivalent(g, a, a).has_value());
        CHECK(equivalent(g, a, b).has_value());
        CHECK(equivalent(g, b, a).has_value());
        CHECK(equivalent(g, b, c).has_value());
    }
}

TEST_CASE("worked effective-equivalence example") {
    EffectiveCertificate cert = effective_equivalent(k3(), {2, -1, 0});
    CHECK(cert.effective);
    CHECK(cert.h == Rat(1, 3));
    CHECK(cert.threshold == Rat(1, 3));
    CHECK(cert.witness == IVec{2, -1, -1});
    CHECK(cert.representative == IVec{0, 0, 1});
}

TEST_CASE("effective equivalence edge cases") {
    // nonnegative configurations are their own representative candidates
    EffectiveCertificate own = effective_equivalent(g7(), {1, 0, 2});
    CHECK(own.effective);
    for (Int v : own.representative) CHECK(v >= 0);

    CHECK_FALSE(effective_equivalent(k3(), {-1, 0, 0}).effective);
}

TEST_CASE("agreement with the coefficient-box oracle") {
    for (const Multigraph& g : {k3(), p3(), g7()}) {
        for (Int a = -3; a <= 3; ++a)
            for (Int b = -3; b <= 3; ++b)
                for (Int c = -3; c <= 3; ++c) {
                    IVec conf{a, b, c};
                    CHECK(effective_equivalent(g, conf).effective ==
                          brute_effective(g, conf, 3));
                }
    }
}
