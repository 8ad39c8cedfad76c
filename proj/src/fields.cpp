#include "kdp/fields.hpp"

#include <stdexcept>

#include "kdp/representation.hpp"  // metric, levi_civita3

namespace kdp {

CoordPolynomial partial_upper(const CoordPolynomial& p, int mu) {
    CoordPolynomial d = p.derivative(mu);
    return metric(mu) == Rational(1) ? d : -d;
}

std::string FieldConfig::kind_name() const {
    switch (kind) {
        case FieldKind::zero: return "zero";
        case FieldKind::uniform_b: return "uniform-B";
        case FieldKind::uniform_e: return "uniform-E";
        case FieldKind::null_wave_poly: return "null-wave-poly";
        case FieldKind::custom: return "custom";
    }
    return "?";
}

namespace {

void derive_strength(FieldConfig& f) {
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            f.f_upper[mu][nu] = partial_upper(f.a_upper[nu], mu) - partial_upper(f.a_upper[mu], nu);
}

FieldPtr finalize(FieldConfig f) {
    derive_strength(f);
    auto div = field_divergence(f);
    for (int nu = 0; nu < 4; ++nu)
        if (!div[nu].is_zero())
            throw std::invalid_argument("field configuration is not source-free (component " +
                                        std::to_string(nu) + ": " + div[nu].to_string() + ")");
    return std::make_shared<const FieldConfig>(std::move(f));
}

}  // namespace

FieldPtr make_zero_field(Rational e_charge) {
    FieldConfig f;
    f.kind = FieldKind::zero;
    f.e_charge = std::move(e_charge);
    return finalize(std::move(f));
}

FieldPtr make_uniform_b(Rational b, Rational e_charge) {
    FieldConfig f;
    f.kind = FieldKind::uniform_b;
    f.e_charge = std::move(e_charge);
    f.a_upper[2] = CoordPolynomial::coordinate(1).scaled(EnergyScalar(std::move(b)));
    return finalize(std::move(f));
}

FieldPtr make_uniform_b_symmetric(Rational b, Rational e_charge) {
    FieldConfig f;
    f.kind = FieldKind::custom;
    f.e_charge = std::move(e_charge);
    Rational half_b = b / Rational(2);
    f.a_upper[1] = CoordPolynomial::coordinate(2).scaled(EnergyScalar(-half_b));
    f.a_upper[2] = CoordPolynomial::coordinate(1).scaled(EnergyScalar(half_b));
    return finalize(std::move(f));
}

FieldPtr make_uniform_e(Rational e_field, Rational e_charge) {
    FieldConfig f;
    f.kind = FieldKind::uniform_e;
    f.e_charge = std::move(e_charge);
    f.a_upper[0] = CoordPolynomial::coordinate(3).scaled(EnergyScalar(-e_field));
    return finalize(std::move(f));
}

FieldPtr make_null_wave(int n, Rational amplitude, Rational e_charge) {
    if (n < 1 || n > 3)
        throw std::invalid_argument("make_null_wave: profile degree n must be 1, 2 or 3");
    FieldConfig f;
    f.kind = FieldKind::null_wave_poly;
    f.e_charge = std::move(e_charge);
    CoordPolynomial tz = CoordPolynomial::coordinate(0) - CoordPolynomial::coordinate(3);
    CoordPolynomial prof(Rational(1));
    for (int k = 0; k < n; ++k) prof *= tz;
    f.a_upper[1] = prof.scaled(EnergyScalar(std::move(amplitude)));
    return finalize(std::move(f));
}

FieldPtr make_custom_field(std::array<CoordPolynomial, 4> a_upper, Rational e_charge) {
    FieldConfig f;
    f.kind = FieldKind::custom;
    f.e_charge = std::move(e_charge);
    f.a_upper = std::move(a_upper);
    return finalize(std::move(f));
}

std::array<CoordPolynomial, 3> magnetic_vector(const FieldConfig& field) {
    std::array<CoordPolynomial, 3> b;
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                int e = levi_civita3(k, i, j);
                if (!e) continue;
                b[k] -= field.f_upper[i + 1][j + 1].scaled(EnergyScalar(Rational(e, 2)));
            }
    return b;
}

std::array<CoordPolynomial, 4> field_divergence(const FieldConfig& field) {
    std::array<CoordPolynomial, 4> div;
    for (int nu = 0; nu < 4; ++nu)
        for (int mu = 0; mu < 4; ++mu)
            div[nu] += field.f_upper[mu][nu].derivative(mu);  // d_mu with lower index
    return div;
}

}  // namespace kdp
