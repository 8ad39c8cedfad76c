#pragma once

// External electromagnetic field configurations: polynomial four-potentials
// with the derived strength tensor, restricted to source-free fields.

#include <array>
#include <memory>
#include <string>

#include "kdp/coord_polynomial.hpp"

namespace kdp {

enum class FieldKind { zero, uniform_b, uniform_e, null_wave_poly, custom };

struct FieldConfig {
    FieldKind kind = FieldKind::zero;
    Rational e_charge{1};
    std::array<CoordPolynomial, 4> a_upper;                 // contravariant A^mu
    std::array<std::array<CoordPolynomial, 4>, 4> f_upper;  // F^{mu nu}

    [[nodiscard]] bool is_zero() const {
        for (const auto& a : a_upper)
            if (!a.is_zero()) return false;
        return true;
    }
    [[nodiscard]] std::string kind_name() const;
};

using FieldPtr = std::shared_ptr<const FieldConfig>;

// Uniform magnetic field along z in the linear gauge A = (0, 0, Bx, 0).
FieldPtr make_uniform_b(Rational b, Rational e_charge);
// the same field in the symmetric gauge A = (0, -By/2, Bx/2, 0)
FieldPtr make_uniform_b_symmetric(Rational b, Rational e_charge);
// Uniform electric field along z: A = (-Ez, 0, 0, 0).
FieldPtr make_uniform_e(Rational e_field, Rational e_charge);
// Polynomial-profile null wave: A^mu = eps^mu * amplitude * (t-z)^n with
// eps = (0,1,0,0), n in {1,2,3}.
FieldPtr make_null_wave(int n, Rational amplitude, Rational e_charge);
FieldPtr make_zero_field(Rational e_charge = Rational(1));
// Custom polynomial potential; throws std::invalid_argument when the derived
// strength tensor is not source-free.
FieldPtr make_custom_field(std::array<CoordPolynomial, 4> a_upper, Rational e_charge);

// B^k = -(1/2) eps_{kij} F^{ij}
std::array<CoordPolynomial, 3> magnetic_vector(const FieldConfig& field);

// d_mu F^{mu nu} as polynomials (all four components); zero for every shipped
// configuration
std::array<CoordPolynomial, 4> field_divergence(const FieldConfig& field);

// plain partial with the index raised: d^mu = g^{mu mu} d/dx^mu
CoordPolynomial partial_upper(const CoordPolynomial& p, int mu);

}  // namespace kdp
