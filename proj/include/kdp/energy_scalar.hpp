#pragma once

// Scalars extended by symbolic energies.  An EnergySymbol E carries its exact
// quadratic relation E^2 = square (a rational), so polynomials in the symbols
// reduce to multilinear form: an EnergyScalar is a Gaussian-rational linear
// combination of squarefree products of distinct symbols.  Multiplication
// applies the relations; no approximation of E ever happens.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "kdp/gaussian_rational.hpp"

namespace kdp {

struct EnergySymbol {
    std::string name;
    Rational square;  // value of E^2

    friend bool operator==(const EnergySymbol& a, const EnergySymbol& b) noexcept {
        return a.name == b.name;
    }
    friend std::strong_ordering operator<=>(const EnergySymbol& a, const EnergySymbol& b) noexcept {
        return a.name <=> b.name;
    }
};

class EnergyScalar {
public:
    using Word = std::vector<EnergySymbol>;  // sorted, squarefree

    EnergyScalar() = default;
    EnergyScalar(GaussianRational c) : scalar_(std::move(c)) {}
    EnergyScalar(Rational r) : scalar_(GaussianRational(std::move(r))) {}
    EnergyScalar(long long n) : scalar_(GaussianRational(n)) {}
    EnergyScalar(const EnergySymbol& s) { symbolic_[{s}] = GaussianRational(1); }

    // Builds coeff * (product of symbols), reducing repeated symbols through
    // their quadratic relations.  Reduction is idempotent by construction.
    static EnergyScalar from_raw(Word symbols, GaussianRational coeff) {
        std::sort(symbols.begin(), symbols.end());
        Word reduced;
        for (std::size_t i = 0; i < symbols.size();) {
            if (i + 1 < symbols.size() && symbols[i] == symbols[i + 1]) {
                coeff *= GaussianRational(symbols[i].square);
                i += 2;
            } else {
                reduced.push_back(symbols[i]);
                ++i;
            }
        }
        EnergyScalar out;
        if (reduced.empty()) {
            out.scalar_ = coeff;
        } else if (!coeff.is_zero()) {
            out.symbolic_[std::move(reduced)] = coeff;
        }
        return out;
    }

    [[nodiscard]] bool is_zero() const noexcept { return scalar_.is_zero() && symbolic_.empty(); }
    [[nodiscard]] bool is_pure() const noexcept { return symbolic_.empty(); }
    [[nodiscard]] const GaussianRational& pure_part() const noexcept { return scalar_; }
    [[nodiscard]] const std::map<Word, GaussianRational>& symbolic_part() const noexcept {
        return symbolic_;
    }

    friend EnergyScalar operator+(const EnergyScalar& a, const EnergyScalar& b) {
        EnergyScalar out;
        out.scalar_ = a.scalar_ + b.scalar_;
        out.symbolic_ = a.symbolic_;
        for (const auto& [w, c] : b.symbolic_) {
            auto it = out.symbolic_.find(w);
            if (it == out.symbolic_.end()) {
                out.symbolic_.emplace(w, c);
            } else {
                it->second += c;
                if (it->second.is_zero()) out.symbolic_.erase(it);
            }
        }
        return out;
    }
    friend EnergyScalar operator-(const EnergyScalar& a, const EnergyScalar& b) {
        return a + (-b);
    }
    EnergyScalar operator-() const {
        EnergyScalar out;
        out.scalar_ = -scalar_;
        for (const auto& [w, c] : symbolic_) out.symbolic_[w] = -c;
        return out;
    }

    friend EnergyScalar operator*(const EnergyScalar& a, const EnergyScalar& b) {
        // fast path: plain complex-rational multiply
        if (a.symbolic_.empty() && b.symbolic_.empty())
            return EnergyScalar(a.scalar_ * b.scalar_);
        EnergyScalar out;
        if (!a.scalar_.is_zero()) {
            out.scalar_ = a.scalar_ * b.scalar_;
            for (const auto& [w, c] : b.symbolic_) out.add_term(w, a.scalar_ * c);
        }
        for (const auto& [wa, ca] : a.symbolic_) {
            if (!b.scalar_.is_zero()) out.add_term(wa, ca * b.scalar_);
            for (const auto& [wb, cb] : b.symbolic_) {
                GaussianRational coeff = ca * cb;
                Word merged;
                merged.reserve(wa.size() + wb.size());
                // merge sorted squarefree words; equal symbols annihilate into
                // their square relation
                auto i = wa.begin(); auto j = wb.begin();
                while (i != wa.end() && j != wb.end()) {
                    if (*i == *j) {
                        coeff *= GaussianRational(i->square);
                        ++i; ++j;
                    } else if (*i < *j) {
                        merged.push_back(*i++);
                    } else {
                        merged.push_back(*j++);
                    }
                }
                merged.insert(merged.end(), i, wa.end());
                merged.insert(merged.end(), j, wb.end());
                if (merged.empty()) out.scalar_ += coeff;
                else out.add_term(std::move(merged), coeff);
            }
        }
        return out;
    }
    EnergyScalar& operator+=(const EnergyScalar& o) { *this = *this + o; return *this; }
    EnergyScalar& operator-=(const EnergyScalar& o) { *this = *this - o; return *this; }
    EnergyScalar& operator*=(const EnergyScalar& o) { *this = *this * o; return *this; }

    friend bool operator==(const EnergyScalar& a, const EnergyScalar& b) noexcept {
        return a.scalar_ == b.scalar_ && a.symbolic_ == b.symbolic_;
    }
    friend std::strong_ordering operator<=>(const EnergyScalar& a, const EnergyScalar& b) noexcept {
        if (auto c = a.scalar_ <=> b.scalar_; c != 0) return c;
        return a.symbolic_ <=> b.symbolic_;
    }

    [[nodiscard]] EnergyScalar conj() const {
        // symbols denote real energies; conjugation only touches coefficients
        EnergyScalar out;
        out.scalar_ = scalar_.conj();
        for (const auto& [w, c] : symbolic_) out.symbolic_[w] = c.conj();
        return out;
    }

    // Inverse for elements of the form a + b*E (single symbol): standard
    // conjugate trick in the quadratic extension.  Sufficient for the exact
    // nullspace solves; anything richer is a usage error.
    [[nodiscard]] EnergyScalar inverse() const {
        if (symbolic_.empty()) {
            if (scalar_.is_zero()) throw std::domain_error("EnergyScalar: inverse of zero");
            return EnergyScalar(GaussianRational(1) / scalar_);
        }
        if (symbolic_.size() != 1 || symbolic_.begin()->first.size() != 1)
            throw std::domain_error("EnergyScalar: inverse supported only for a + b*E");
        const EnergySymbol& sym = symbolic_.begin()->first.front();
        const GaussianRational& b = symbolic_.begin()->second;
        const GaussianRational& a = scalar_;
        GaussianRational denom = a * a - b * b * GaussianRational(sym.square);
        if (denom.is_zero()) throw std::domain_error("EnergyScalar: non-invertible a + b*E");
        EnergyScalar out(a / denom);
        out.add_term({sym}, -b / denom);
        return out;
    }

    // evaluates symbols at their positive square roots
    [[nodiscard]] std::complex<double> to_complex() const {
        std::complex<double> v = scalar_.to_complex();
        for (const auto& [w, c] : symbolic_) {
            double prod = 1.0;
            for (const auto& s : w) prod *= std::sqrt(s.square.to_double());
            v += c.to_complex() * prod;
        }
        return v;
    }

    [[nodiscard]] std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        auto append = [&out](const std::string& piece) {
            if (!out.empty()) out += " + ";
            out += piece;
        };
        if (!scalar_.is_zero()) append(scalar_.to_string());
        for (const auto& [w, c] : symbolic_) {
            std::string piece = c.to_string();
            for (const auto& s : w) piece += "*" + s.name;
            append(piece);
        }
        return out;
    }

private:
    void add_term(Word w, GaussianRational c) {
        if (c.is_zero()) return;
        auto it = symbolic_.find(w);
        if (it == symbolic_.end()) {
            symbolic_.emplace(std::move(w), std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) symbolic_.erase(it);
        }
    }

    GaussianRational scalar_;                     // coefficient of the empty word
    std::map<Word, GaussianRational> symbolic_;   // squarefree words, no empty key
};

inline EnergyScalar conj(const EnergyScalar& s) { return s.conj(); }

}  // namespace kdp
