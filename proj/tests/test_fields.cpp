#include "doctest.h"

#include <random>

#include "kdp/fields.hpp"

using namespace kdp;

TEST_CASE("zero field has vanishing strength tensor") {
    auto f = make_zero_field();
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) CHECK(f->f_upper[mu][nu].is_zero());
}

TEST_CASE("uniform B_z: strength entries and divergence") {
    auto f = make_uniform_b(Rational(3), Rational(1));
    CHECK(f->f_upper[1][2] == CoordPolynomial(Rational(-3)));
    CHECK(f->f_upper[2][1] == CoordPolynomial(Rational(3)));
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            if ((mu == 1 && nu == 2) || (mu == 2 && nu == 1)) continue;
            CHECK(f->f_upper[mu][nu].is_zero());
        }
    auto b = magnetic_vector(*f);
    CHECK(b[0].is_zero());
    CHECK(b[1].is_zero());
    CHECK(b[2] == CoordPolynomial(Rational(3)));
    // antisymmetry as polynomials
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            CHECK((f->f_upper[mu][nu] + f->f_upper[nu][mu]).is_zero());
}

TEST_CASE("both gauges of the uniform field share the strength tensor") {
    auto landau = make_uniform_b(Rational(5, 2), Rational(1));
    auto sym = make_uniform_b_symmetric(Rational(5, 2), Rational(1));
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            CHECK(landau->f_upper[mu][nu] == sym->f_upper[mu][nu]);
}

TEST_CASE("null wave: nonconstant strength, still source-free") {
    auto f = make_null_wave(2, Rational(1), Rational(1));
    bool nonconstant = false;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            if (f->f_upper[mu][nu].total_degree() >= 1) nonconstant = true;
    CHECK(nonconstant);
    for (const auto& d : field_divergence(*f)) CHECK(d.is_zero());

    // n = 1 gives a constant magnetic component along y
    auto f1 = make_null_wave(1, Rational(7), Rational(1));
    auto b = magnetic_vector(*f1);
    CHECK(b[0].is_zero());
    CHECK(b[1].total_degree() == 0);
    CHECK(!b[1].is_zero());
    CHECK(b[2].is_zero());

    CHECK_THROWS_AS(make_null_wave(4, Rational(1), Rational(1)), std::invalid_argument);
}

TEST_CASE("uniform E_z is source-free and has only F^{03}/F^{30}") {
    auto f = make_uniform_e(Rational(2), Rational(1));
    CHECK(!f->f_upper[0][3].is_zero());
    CHECK((f->f_upper[0][3] + f->f_upper[3][0]).is_zero());
    for (const auto& d : field_divergence(*f)) CHECK(d.is_zero());
}

TEST_CASE("non-source-free custom potentials are rejected") {
    // A^0 = x^2 has d_mu F^{mu 0} != 0
    std::array<CoordPolynomial, 4> a;
    a[0] = CoordPolynomial::coordinate(1) * CoordPolynomial::coordinate(1);
    CHECK_THROWS_AS(make_custom_field(std::move(a), Rational(1)), std::invalid_argument);
}

TEST_CASE("gauge shifts leave the strength tensor unchanged") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> c(-2, 2);
    auto base = make_uniform_b(Rational(1), Rational(1));
    for (int trial = 0; trial < 5; ++trial) {
        // random polynomial gauge function chi of degree <= 2
        CoordPolynomial chi;
        for (int k = 0; k < 4; ++k) {
            Expo e{std::abs(c(rng)) % 2, std::abs(c(rng)) % 2, std::abs(c(rng)) % 2,
                   std::abs(c(rng)) % 2};
            chi += CoordPolynomial::monomial(e, EnergyScalar(Rational(c(rng))));
        }
        std::array<CoordPolynomial, 4> shifted;
        for (int mu = 0; mu < 4; ++mu) shifted[mu] = base->a_upper[mu] + partial_upper(chi, mu);
        auto f2 = make_custom_field(std::move(shifted), Rational(1));
        for (int mu = 0; mu < 4; ++mu)
            for (int nu = 0; nu < 4; ++nu)
                CHECK(f2->f_upper[mu][nu] == base->f_upper[mu][nu]);
    }
}
