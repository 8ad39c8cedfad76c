#pragma once

// Gaussian rationals: complex numbers with exact rational real and imaginary
// parts.  The coefficient field for every matrix and polynomial upstream of
// the floating-point solver.

#include <complex>
#include <string>

#include "kdp/rational.hpp"

namespace kdp {

struct GaussianRational {
    Rational re;
    Rational im;

    constexpr GaussianRational() noexcept = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(long long r) : re(r) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational unit_i() { return {Rational(0), Rational(1)}; }

    [[nodiscard]] bool is_zero() const noexcept { return re.is_zero() && im.is_zero(); }
    [[nodiscard]] bool is_real() const noexcept { return im.is_zero(); }

    [[nodiscard]] GaussianRational conj() const { return {re, -im}; }
    [[nodiscard]] Rational norm2() const { return re * re + im * im; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational n2 = b.norm2();
        if (n2.is_zero()) throw std::domain_error("GaussianRational: division by zero");
        GaussianRational num = a * b.conj();
        return {num.re / n2, num.im / n2};
    }
    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational& operator+=(const GaussianRational& o) { *this = *this + o; return *this; }
    GaussianRational& operator-=(const GaussianRational& o) { *this = *this - o; return *this; }
    GaussianRational& operator*=(const GaussianRational& o) { *this = *this * o; return *this; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) noexcept {
        return a.re == b.re && a.im == b.im;
    }
    friend std::strong_ordering operator<=>(const GaussianRational& a,
                                            const GaussianRational& b) noexcept {
        if (auto c = a.re <=> b.re; c != 0) return c;
        return a.im <=> b.im;
    }

    [[nodiscard]] std::complex<double> to_complex() const noexcept {
        return {re.to_double(), im.to_double()};
    }
    [[nodiscard]] std::string to_string() const {
        if (im.is_zero()) return re.to_string();
        if (re.is_zero()) return im.to_string() + "i";
        return "(" + re.to_string() + (im.sign() >= 0 ? "+" : "") + im.to_string() + "i)";
    }
};

inline GaussianRational conj(const GaussianRational& z) { return z.conj(); }

}  // namespace kdp
