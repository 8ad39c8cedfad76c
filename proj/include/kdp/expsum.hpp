#pragma once

// Exponential-sum wave functions: finite sums of terms
//
//     amp(t,x,y,z) * exp(i p.x) * exp(-i w t)
//
// with polynomial amplitudes, lattice momenta p_k = n_k / q (n integer,
// q rational, box length L = 2*pi*q) and frequencies w that are linear
// combinations of EnergySymbols and rationals.  The class is closed under
// differentiation and under the componentwise products needed by the
// currents.  Spatial box integrals are exact, with powers of 2*pi carried
// formally (BoxValue).

#include <array>
#include <complex>
#include <map>
#include <vector>

#include "kdp/coord_polynomial.hpp"
#include "kdp/matrix.hpp"

namespace kdp {

using Momentum = std::array<int, 3>;

struct ExpSumTerm {
    Momentum momentum{0, 0, 0};
    EnergyScalar freq;                  // linear in the symbols by construction
    std::vector<CoordPolynomial> amp;   // length = representation dimension
};

class ExpSumWavefunction {
public:
    ExpSumWavefunction() : dim_(0), box_scale_(1) {}
    explicit ExpSumWavefunction(int dim, Rational box_scale = Rational(1))
        : dim_(dim), box_scale_(std::move(box_scale)) {}

    // single pure-polynomial term, zero momentum
    static ExpSumWavefunction polynomial(int dim, int component, CoordPolynomial p,
                                         Rational box_scale = Rational(1));
    // plane wave amp * exp(i(p.x - w t)) with constant amplitude vector
    static ExpSumWavefunction plane_wave(std::vector<EnergyScalar> amplitude, Momentum n,
                                         EnergyScalar freq, Rational box_scale = Rational(1));

    [[nodiscard]] int dim() const noexcept { return dim_; }
    [[nodiscard]] const Rational& box_scale() const noexcept { return box_scale_; }
    [[nodiscard]] const std::vector<ExpSumTerm>& terms() const noexcept { return terms_; }

    void add_term(ExpSumTerm t);

    friend ExpSumWavefunction operator+(const ExpSumWavefunction& a, const ExpSumWavefunction& b);
    friend ExpSumWavefunction operator-(const ExpSumWavefunction& a, const ExpSumWavefunction& b);
    ExpSumWavefunction operator-() const;

    [[nodiscard]] ExpSumWavefunction scaled(const EnergyScalar& s) const;
    [[nodiscard]] ExpSumWavefunction multiplied_by(const CoordPolynomial& p) const;
    [[nodiscard]] ExpSumWavefunction applied(const CMatrix& m) const;

    // plain coordinate partial: axis 0 = t, 1..3 = x,y,z
    [[nodiscard]] ExpSumWavefunction derivative(int axis) const;

    [[nodiscard]] ExpSumWavefunction conjugated() const;

    // merge terms with equal (momentum, frequency), drop zero amplitudes
    void canonicalize();
    [[nodiscard]] bool is_zero() const;
    friend bool operator==(const ExpSumWavefunction& a, const ExpSumWavefunction& b);

    [[nodiscard]] std::vector<std::complex<double>> eval_numeric(
        const std::array<double, 4>& pt) const;

    [[nodiscard]] std::string to_string() const;

private:
    int dim_;
    Rational box_scale_;
    std::vector<ExpSumTerm> terms_;
};

// f^dagger M g, exact; conjugation flips momentum and frequency signs.
ExpSumWavefunction pointwise_sesquilinear(const ExpSumWavefunction& f, const CMatrix& m,
                                          const ExpSumWavefunction& g);

ExpSumWavefunction derive(const ExpSumWavefunction& f, int axis);

// Exact integral over the periodic box [0, L)^3, L = 2*pi*q, as a formal
// polynomial in 2*pi: tau_power -> scalar exponential sum in t alone.
class BoxValue {
public:
    BoxValue() = default;

    void add(int tau_power, const ExpSumWavefunction& contribution);
    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] bool is_time_independent() const;
    // the coefficient of (2*pi)^k for a time-independent value
    [[nodiscard]] EnergyScalar constant_coefficient(int tau_power) const;
    [[nodiscard]] const std::map<int, ExpSumWavefunction>& parts() const noexcept { return parts_; }
    [[nodiscard]] std::string to_string() const;

    friend BoxValue operator-(const BoxValue& a, const BoxValue& b);

private:
    std::map<int, ExpSumWavefunction> parts_;
};

BoxValue box_integrate(const ExpSumWavefunction& scalar_wf);

}  // namespace kdp
