#pragma once

// Polynomials in the four coordinates (t, x, y, z) with EnergyScalar
// coefficients, kept in canonical form (no zero coefficients).  Addition,
// multiplication and partial differentiation are exact and closed.

#include <array>
#include <map>
#include <string>

#include "kdp/energy_scalar.hpp"

namespace kdp {

using Expo = std::array<int, 4>;  // powers of (t, x, y, z)

class CoordPolynomial {
public:
    CoordPolynomial() = default;
    CoordPolynomial(EnergyScalar c) {
        if (!c.is_zero()) terms_[{0, 0, 0, 0}] = std::move(c);
    }
    CoordPolynomial(GaussianRational c) : CoordPolynomial(EnergyScalar(std::move(c))) {}
    CoordPolynomial(Rational c) : CoordPolynomial(EnergyScalar(std::move(c))) {}
    CoordPolynomial(long long c) : CoordPolynomial(EnergyScalar(c)) {}

    static CoordPolynomial monomial(Expo e, EnergyScalar c = EnergyScalar(1)) {
        CoordPolynomial p;
        if (!c.is_zero()) p.terms_[e] = std::move(c);
        return p;
    }
    // convenience: the bare coordinate t, x, y or z
    static CoordPolynomial coordinate(int axis) {
        Expo e{0, 0, 0, 0};
        e[axis] = 1;
        return monomial(e);
    }

    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] const std::map<Expo, EnergyScalar>& terms() const noexcept { return terms_; }
    [[nodiscard]] int total_degree() const noexcept {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2] + e[3]);
        return d;
    }
    [[nodiscard]] bool depends_on(int axis) const noexcept {
        for (const auto& [e, c] : terms_)
            if (e[axis] != 0) return true;
        return false;
    }

    friend CoordPolynomial operator+(const CoordPolynomial& a, const CoordPolynomial& b) {
        CoordPolynomial out = a;
        for (const auto& [e, c] : b.terms_) out.add_term(e, c);
        return out;
    }
    friend CoordPolynomial operator-(const CoordPolynomial& a, const CoordPolynomial& b) {
        CoordPolynomial out = a;
        for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
        return out;
    }
    CoordPolynomial operator-() const {
        CoordPolynomial out;
        for (const auto& [e, c] : terms_) out.terms_[e] = -c;
        return out;
    }
    friend CoordPolynomial operator*(const CoordPolynomial& a, const CoordPolynomial& b) {
        CoordPolynomial out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Expo e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
                out.add_term(e, ca * cb);
            }
        return out;
    }
    CoordPolynomial& operator+=(const CoordPolynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    CoordPolynomial& operator-=(const CoordPolynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    CoordPolynomial& operator*=(const CoordPolynomial& o) { *this = *this * o; return *this; }

    [[nodiscard]] CoordPolynomial scaled(const EnergyScalar& s) const {
        CoordPolynomial out;
        if (s.is_zero()) return out;
        for (const auto& [e, c] : terms_) {
            EnergyScalar v = c * s;
            if (!v.is_zero()) out.terms_[e] = std::move(v);
        }
        return out;
    }

    // plain coordinate partial d/dx^axis
    [[nodiscard]] CoordPolynomial derivative(int axis) const {
        CoordPolynomial out;
        for (const auto& [e, c] : terms_) {
            if (e[axis] == 0) continue;
            Expo d = e;
            d[axis] -= 1;
            out.add_term(d, c * EnergyScalar(Rational(e[axis])));
        }
        return out;
    }

    [[nodiscard]] CoordPolynomial conj() const {
        CoordPolynomial out;
        for (const auto& [e, c] : terms_) out.terms_[e] = c.conj();
        return out;
    }

    [[nodiscard]] EnergyScalar eval(const std::array<Rational, 4>& pt) const {
        EnergyScalar out;
        for (const auto& [e, c] : terms_) {
            Rational mono(1);
            for (int a = 0; a < 4; ++a)
                for (int k = 0; k < e[a]; ++k) mono *= pt[a];
            out += c * EnergyScalar(mono);
        }
        return out;
    }
    [[nodiscard]] std::complex<double> eval_numeric(const std::array<double, 4>& pt) const {
        std::complex<double> out{0.0, 0.0};
        for (const auto& [e, c] : terms_) {
            double mono = 1.0;
            for (int a = 0; a < 4; ++a)
                for (int k = 0; k < e[a]; ++k) mono *= pt[a];
            out += c.to_complex() * mono;
        }
        return out;
    }

    friend bool operator==(const CoordPolynomial& a, const CoordPolynomial& b) noexcept {
        return a.terms_ == b.terms_;
    }

    [[nodiscard]] std::string to_string() const {
        if (terms_.empty()) return "0";
        static const char* names[4] = {"t", "x", "y", "z"};
        std::string out;
        for (const auto& [e, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += "(" + c.to_string() + ")";
            for (int a = 0; a < 4; ++a) {
                if (e[a] == 0) continue;
                out += std::string("*") + names[a];
                if (e[a] > 1) out += "^" + std::to_string(e[a]);
            }
        }
        return out;
    }

private:
    void add_term(const Expo& e, const EnergyScalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::map<Expo, EnergyScalar> terms_;
};

inline CoordPolynomial conj(const CoordPolynomial& p) { return p.conj(); }

}  // namespace kdp
