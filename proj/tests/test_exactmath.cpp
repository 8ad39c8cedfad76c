#include "doctest.h"

#include <random>

#include "kdp/expsum.hpp"
#include "kdp/matrix.hpp"

using namespace kdp;

namespace {

EnergySymbol sym_e(long long sq_num, long long sq_den = 1) {
    return EnergySymbol{"E", Rational(sq_num, sq_den)};
}

CMatrix identity2() { return CMatrix::identity(2); }

}  // namespace

TEST_CASE("rational arithmetic is exact and normalized") {
    Rational a(2, 4);
    CHECK(a == Rational(1, 2));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(7, 3) * Rational(3, 7)) == Rational(1));
    CHECK((Rational(1, 2) - Rational(1, 2)).is_zero());
    CHECK(Rational(-1, -2) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1, 3) / Rational(0), std::domain_error);
    // overflow is an error, never a wrap
    Rational big(INT64_MAX / 2, 1);
    CHECK_THROWS_AS(big * Rational(8), std::overflow_error);
}

TEST_CASE("gaussian rational field ops") {
    GaussianRational i = GaussianRational::unit_i();
    CHECK((i * i) == GaussianRational(-1));
    GaussianRational z(Rational(1, 2), Rational(-3, 4));
    CHECK((z * z.conj()).re == z.norm2());
    CHECK((z / z) == GaussianRational(1));
    CHECK((z - z).is_zero());
}

TEST_CASE("energy symbol reduction is exact and idempotent") {
    EnergySymbol E = sym_e(2);  // E^2 = 2
    EnergyScalar s = EnergyScalar(E) * EnergyScalar(E);
    CHECK(s == EnergyScalar(Rational(2)));

    // (1 + E)(1 - E) = 1 - E^2 = -1
    EnergyScalar one_plus = EnergyScalar(1) + EnergyScalar(E);
    EnergyScalar one_minus = EnergyScalar(1) - EnergyScalar(E);
    CHECK(one_plus * one_minus == EnergyScalar(Rational(-1)));

    // reduction of raw words with repeats, applied twice, equals once
    EnergyScalar raw = EnergyScalar::from_raw({E, E, E}, GaussianRational(1));
    CHECK(raw == EnergyScalar(E) * EnergyScalar(Rational(2)));
    EnergyScalar again = EnergyScalar::from_raw({E}, GaussianRational(Rational(2)));
    CHECK(raw == again);

    // inverse in the quadratic extension: (1 + E)^-1 * (1 + E) = 1
    EnergyScalar inv = one_plus.inverse();
    CHECK(inv * one_plus == EnergyScalar(1));

    // two distinct symbols keep their cross terms
    EnergySymbol F{"F", Rational(5)};
    EnergyScalar prod = EnergyScalar(E) * EnergyScalar(F);
    CHECK(!prod.is_pure());
    CHECK(prod * prod == EnergyScalar(Rational(10)));
}

TEST_CASE("coordinate polynomials: ring ops and derivatives") {
    CoordPolynomial x = CoordPolynomial::coordinate(1);
    CoordPolynomial y = CoordPolynomial::coordinate(2);
    CoordPolynomial p = x * x * y + y;  // x^2 y + y
    CHECK(p.derivative(1) == CoordPolynomial(Rational(2)) * x * y);
    CHECK(p.derivative(2) == x * x + CoordPolynomial(Rational(1)));
    CHECK(p.derivative(3).is_zero());
    CHECK(p.total_degree() == 3);
    CHECK(p.eval({Rational(0), Rational(2), Rational(3), Rational(0)}) ==
          EnergyScalar(Rational(15)));

    // mixed partials commute
    CHECK(p.derivative(1).derivative(2) == p.derivative(2).derivative(1));
}

TEST_CASE("derive: constants, monomials, and the time phase") {
    // d/dx of a constant amplitude, zero momentum
    auto c = ExpSumWavefunction::polynomial(1, 0, CoordPolynomial(Rational(5)));
    CHECK(derive(c, 1).is_zero());

    // d/dx (x * e^0) = 1
    auto xw = ExpSumWavefunction::polynomial(1, 0, CoordPolynomial::coordinate(1));
    CHECK(derive(xw, 1) == ExpSumWavefunction::polynomial(1, 0, CoordPolynomial(Rational(1))));

    // d/dt e^{-iEt} = (-iE) e^{-iEt}, with the factor pulled into the amplitude
    EnergySymbol E = sym_e(2);
    auto pw = ExpSumWavefunction::plane_wave({EnergyScalar(1)}, {0, 0, 0}, EnergyScalar(E));
    auto dt = derive(pw, 0);
    EnergyScalar minus_iE = EnergyScalar(-GaussianRational::unit_i()) * EnergyScalar(E);
    CHECK(dt == pw.scaled(minus_iE));
    // second derivative closes exactly thanks to E^2 = 2
    auto dtt = derive(dt, 0);
    CHECK(dtt == pw.scaled(EnergyScalar(Rational(-2))));
}

TEST_CASE("derivatives commute on a generated set") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> mom(-2, 2);
    EnergySymbol E = sym_e(7);
    for (int trial = 0; trial < 10; ++trial) {
        ExpSumWavefunction wf(2);
        for (int term = 0; term < 3; ++term) {
            ExpSumTerm t;
            t.momentum = {mom(rng), mom(rng), mom(rng)};
            t.freq = EnergyScalar(Rational(coef(rng))) +
                     EnergyScalar(Rational(coef(rng))) * EnergyScalar(E);
            for (int c = 0; c < 2; ++c) {
                CoordPolynomial p;
                for (int k = 0; k < 2; ++k) {
                    Expo e{std::abs(coef(rng)) % 2, std::abs(coef(rng)) % 3,
                           std::abs(coef(rng)) % 2, std::abs(coef(rng)) % 2};
                    p += CoordPolynomial::monomial(e, EnergyScalar(Rational(coef(rng))));
                }
                t.amp.push_back(p);
            }
            wf.add_term(std::move(t));
        }
        for (int mu = 0; mu < 4; ++mu)
            for (int nu = mu + 1; nu < 4; ++nu)
                CHECK(derive(derive(wf, mu), nu) == derive(derive(wf, nu), mu));
    }
}

TEST_CASE("pointwise sesquilinear products") {
    // unit-amplitude plane wave against itself: constant 1
    EnergySymbol E = sym_e(3);
    auto f = ExpSumWavefunction::plane_wave({EnergyScalar(1), EnergyScalar(0)}, {1, 0, 0},
                                            EnergyScalar(E));
    auto s = pointwise_sesquilinear(f, identity2(), f);
    CHECK(s == ExpSumWavefunction::polynomial(1, 0, CoordPolynomial(Rational(1))));

    // orthogonal component vectors annihilate
    auto g = ExpSumWavefunction::plane_wave({EnergyScalar(0), EnergyScalar(1)}, {1, 0, 0},
                                            EnergyScalar(E));
    CHECK(pointwise_sesquilinear(f, identity2(), g).is_zero());

    // two distinct momenta produce a cross term at the momentum difference
    EnergySymbol E2{"E2", Rational(6)};
    auto h = ExpSumWavefunction::plane_wave({EnergyScalar(1), EnergyScalar(0)}, {2, 1, 0},
                                            EnergyScalar(E2));
    auto cross = pointwise_sesquilinear(f, identity2(), h);
    REQUIRE(cross.terms().size() == 1);
    CHECK(cross.terms()[0].momentum == Momentum{1, 1, 0});
    CHECK(cross.terms()[0].freq == EnergyScalar(E2) - EnergyScalar(E));

    // dimension mismatch is rejected
    CHECK_THROWS_AS(pointwise_sesquilinear(f, CMatrix::identity(3), g), std::invalid_argument);
}

TEST_CASE("box integrals: volume, orthogonality, Parseval") {
    // unit constant integrates to L^3 = (2 pi q)^3
    auto one = ExpSumWavefunction::polynomial(1, 0, CoordPolynomial(Rational(1)));
    BoxValue vol = box_integrate(one);
    CHECK(vol.constant_coefficient(3) == EnergyScalar(Rational(1)));
    CHECK(vol.constant_coefficient(2).is_zero());

    // a single nonzero lattice mode integrates to zero
    auto mode = ExpSumWavefunction::plane_wave({EnergyScalar(1)}, {3, -1, 2}, EnergyScalar(0));
    CHECK(box_integrate(mode).is_zero());

    // |a e1 + b e2|^2 integrates to (|a|^2 + |b|^2) L^3; cross terms cancel
    GaussianRational a(Rational(1, 2), Rational(1));
    GaussianRational b(Rational(2), Rational(-1, 3));
    auto wf = ExpSumWavefunction::plane_wave({EnergyScalar(a)}, {1, 0, 0}, EnergyScalar(0)) +
              ExpSumWavefunction::plane_wave({EnergyScalar(b)}, {0, 1, 0}, EnergyScalar(0));
    auto density = pointwise_sesquilinear(wf, CMatrix::identity(1), wf);
    BoxValue n = box_integrate(density);
    CHECK(n.is_time_independent());
    CHECK(n.constant_coefficient(3) == EnergyScalar(GaussianRational(a.norm2() + b.norm2())));

    // polynomial amplitudes at nonzero momentum integrate exactly too:
    // int_0^L x e^{i x/q} dx = -i 2 pi q^2
    auto xmode = ExpSumWavefunction::polynomial(1, 0, CoordPolynomial::coordinate(1));
    ExpSumTerm t = xmode.terms()[0];
    t.momentum = {1, 0, 0};
    ExpSumWavefunction xw(1);
    xw.add_term(t);
    BoxValue xi = box_integrate(xw);
    // one factor of x against the phase, two trivial axes each giving 2 pi q
    CHECK(xi.constant_coefficient(3) ==
          EnergyScalar(GaussianRational(Rational(0), Rational(-1))));
}

TEST_CASE("periodicity: spatial derivatives integrate to zero") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> mom(-2, 2);
    EnergySymbol E = sym_e(5);
    // spatially constant amplitudes (the periodic subclass), arbitrary t-dependence
    ExpSumWavefunction wf(1, Rational(2));
    for (int term = 0; term < 4; ++term) {
        ExpSumTerm t;
        t.momentum = {mom(rng), mom(rng), mom(rng)};
        t.freq = EnergyScalar(Rational(coef(rng))) * EnergyScalar(E);
        t.amp.push_back(CoordPolynomial::monomial(
            {std::abs(coef(rng)) % 3, 0, 0, 0},
            EnergyScalar(GaussianRational(Rational(coef(rng)), Rational(coef(rng))))));
        wf.add_term(std::move(t));
    }
    for (int axis = 1; axis <= 3; ++axis) CHECK(box_integrate(derive(wf, axis)).is_zero());
}

TEST_CASE("exact nullspace solve") {
    // the 2x3 system [[1, i, 0], [0, 0, 1]] has nullspace spanned by (-i, 1, 0)
    CMatrix m(2, 3);
    m.at(0, 0) = GaussianRational(1);
    m.at(0, 1) = GaussianRational::unit_i();
    m.at(1, 2) = GaussianRational(1);
    auto basis = nullspace(m);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0][0] == -GaussianRational::unit_i() * basis[0][1]);
    CHECK(basis[0][2].is_zero());
}
