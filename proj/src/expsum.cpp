#include "kdp/expsum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace kdp {

namespace {

bool amp_is_zero(const std::vector<CoordPolynomial>& amp) {
    return std::all_of(amp.begin(), amp.end(), [](const auto& p) { return p.is_zero(); });
}

// orders terms for canonical merging
bool term_key_less(const ExpSumTerm& a, const ExpSumTerm& b) {
    if (a.momentum != b.momentum) return a.momentum < b.momentum;
    return a.freq < b.freq;
}

}  // namespace

ExpSumWavefunction ExpSumWavefunction::polynomial(int dim, int component, CoordPolynomial p,
                                                  Rational box_scale) {
    ExpSumWavefunction wf(dim, std::move(box_scale));
    ExpSumTerm t;
    t.amp.resize(dim);
    t.amp[component] = std::move(p);
    wf.add_term(std::move(t));
    return wf;
}

ExpSumWavefunction ExpSumWavefunction::plane_wave(std::vector<EnergyScalar> amplitude, Momentum n,
                                                  EnergyScalar freq, Rational box_scale) {
    ExpSumWavefunction wf(static_cast<int>(amplitude.size()), std::move(box_scale));
    ExpSumTerm t;
    t.momentum = n;
    t.freq = std::move(freq);
    t.amp.reserve(amplitude.size());
    for (auto& a : amplitude) t.amp.emplace_back(std::move(a));
    wf.add_term(std::move(t));
    return wf;
}

void ExpSumWavefunction::add_term(ExpSumTerm t) {
    if (static_cast<int>(t.amp.size()) != dim_)
        throw std::invalid_argument("ExpSumWavefunction: amplitude dimension mismatch");
    if (amp_is_zero(t.amp)) return;
    terms_.push_back(std::move(t));
}

ExpSumWavefunction operator+(const ExpSumWavefunction& a, const ExpSumWavefunction& b) {
    if (a.dim_ == 0) return b;
    if (b.dim_ == 0) return a;
    if (a.dim_ != b.dim_)
        throw std::invalid_argument("ExpSumWavefunction: dimension mismatch in +");
    if (!(a.box_scale_ == b.box_scale_))
        throw std::invalid_argument("ExpSumWavefunction: incommensurate box scales");
    ExpSumWavefunction out = a;
    out.terms_.insert(out.terms_.end(), b.terms_.begin(), b.terms_.end());
    return out;
}

ExpSumWavefunction operator-(const ExpSumWavefunction& a, const ExpSumWavefunction& b) {
    return a + (-b);
}

ExpSumWavefunction ExpSumWavefunction::operator-() const {
    ExpSumWavefunction out(dim_, box_scale_);
    for (const auto& t : terms_) {
        ExpSumTerm nt;
        nt.momentum = t.momentum;
        nt.freq = t.freq;
        nt.amp.reserve(t.amp.size());
        for (const auto& a : t.amp) nt.amp.push_back(-a);
        out.terms_.push_back(std::move(nt));
    }
    return out;
}

ExpSumWavefunction ExpSumWavefunction::scaled(const EnergyScalar& s) const {
    ExpSumWavefunction out(dim_, box_scale_);
    if (s.is_zero()) return out;
    for (const auto& t : terms_) {
        ExpSumTerm nt;
        nt.momentum = t.momentum;
        nt.freq = t.freq;
        nt.amp.reserve(t.amp.size());
        for (const auto& a : t.amp) nt.amp.push_back(a.scaled(s));
        if (!amp_is_zero(nt.amp)) out.terms_.push_back(std::move(nt));
    }
    return out;
}

ExpSumWavefunction ExpSumWavefunction::multiplied_by(const CoordPolynomial& p) const {
    ExpSumWavefunction out(dim_, box_scale_);
    if (p.is_zero()) return out;
    for (const auto& t : terms_) {
        ExpSumTerm nt;
        nt.momentum = t.momentum;
        nt.freq = t.freq;
        nt.amp.reserve(t.amp.size());
        for (const auto& a : t.amp) nt.amp.push_back(a * p);
        if (!amp_is_zero(nt.amp)) out.terms_.push_back(std::move(nt));
    }
    return out;
}

ExpSumWavefunction ExpSumWavefunction::applied(const CMatrix& m) const {
    if (m.cols() != dim_)
        throw std::invalid_argument("ExpSumWavefunction: matrix dimension mismatch");
    ExpSumWavefunction out(m.rows(), box_scale_);
    for (const auto& t : terms_) {
        ExpSumTerm nt;
        nt.momentum = t.momentum;
        nt.freq = t.freq;
        nt.amp.assign(m.rows(), CoordPolynomial());
        for (int c = 0; c < dim_; ++c) {
            if (t.amp[c].is_zero()) continue;
            for (int r = 0; r < m.rows(); ++r) {
                if (m.at(r, c).is_zero()) continue;
                nt.amp[r] += t.amp[c].scaled(EnergyScalar(m.at(r, c)));
            }
        }
        if (!amp_is_zero(nt.amp)) out.terms_.push_back(std::move(nt));
    }
    return out;
}

ExpSumWavefunction ExpSumWavefunction::derivative(int axis) const {
    ExpSumWavefunction out(dim_, box_scale_);
    const GaussianRational i_unit = GaussianRational::unit_i();
    for (const auto& t : terms_) {
        // product rule: polynomial part + phase factor
        EnergyScalar phase;  // d/dx^axis of i(p.x - w t)
        if (axis == 0) {
            phase = EnergyScalar(-i_unit) * t.freq;
        } else {
            Rational pk = Rational(t.momentum[axis - 1]) / box_scale_;
            phase = EnergyScalar(GaussianRational(Rational(0), pk));
        }
        ExpSumTerm nt;
        nt.momentum = t.momentum;
        nt.freq = t.freq;
        nt.amp.reserve(t.amp.size());
        for (const auto& a : t.amp) nt.amp.push_back(a.derivative(axis) + a.scaled(phase));
        if (!amp_is_zero(nt.amp)) out.terms_.push_back(std::move(nt));
    }
    return out;
}

ExpSumWavefunction ExpSumWavefunction::conjugated() const {
    ExpSumWavefunction out(dim_, box_scale_);
    for (const auto& t : terms_) {
        ExpSumTerm nt;
        nt.momentum = {-t.momentum[0], -t.momentum[1], -t.momentum[2]};
        nt.freq = -(t.freq.conj());
        nt.amp.reserve(t.amp.size());
        for (const auto& a : t.amp) nt.amp.push_back(a.conj());
        out.terms_.push_back(std::move(nt));
    }
    return out;
}

void ExpSumWavefunction::canonicalize() {
    std::stable_sort(terms_.begin(), terms_.end(), term_key_less);
    std::vector<ExpSumTerm> merged;
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().momentum == t.momentum &&
            merged.back().freq == t.freq) {
            for (int c = 0; c < dim_; ++c) merged.back().amp[c] += t.amp[c];
        } else {
            merged.push_back(std::move(t));
        }
    }
    terms_.clear();
    for (auto& t : merged)
        if (!amp_is_zero(t.amp)) terms_.push_back(std::move(t));
}

bool ExpSumWavefunction::is_zero() const {
    ExpSumWavefunction c = *this;
    c.canonicalize();
    return c.terms_.empty();
}

bool operator==(const ExpSumWavefunction& a, const ExpSumWavefunction& b) {
    if (a.dim_ != b.dim_) return false;
    return (a - b).is_zero();
}

std::vector<std::complex<double>> ExpSumWavefunction::eval_numeric(
    const std::array<double, 4>& pt) const {
    std::vector<std::complex<double>> out(dim_, {0.0, 0.0});
    const double q = box_scale_.to_double();
    for (const auto& t : terms_) {
        double spatial = (t.momentum[0] * pt[1] + t.momentum[1] * pt[2] + t.momentum[2] * pt[3]) / q;
        std::complex<double> w = t.freq.to_complex();
        // w is real by construction; exp(i(p.x - w t))
        std::complex<double> phase =
            std::exp(std::complex<double>(0.0, 1.0) * (spatial - w.real() * pt[0]));
        for (int c = 0; c < dim_; ++c) {
            if (t.amp[c].is_zero()) continue;
            out[c] += t.amp[c].eval_numeric(pt) * phase;
        }
    }
    return out;
}

std::string ExpSumWavefunction::to_string() const {
    std::string out;
    for (const auto& t : terms_) {
        if (!out.empty()) out += "\n";
        out += "exp(i[(" + std::to_string(t.momentum[0]) + "," + std::to_string(t.momentum[1]) +
               "," + std::to_string(t.momentum[2]) + ").x/q - (" + t.freq.to_string() + ")t]) * [";
        for (std::size_t c = 0; c < t.amp.size(); ++c) {
            if (c) out += "; ";
            out += t.amp[c].to_string();
        }
        out += "]";
    }
    return out.empty() ? "0" : out;
}

ExpSumWavefunction pointwise_sesquilinear(const ExpSumWavefunction& f, const CMatrix& m,
                                          const ExpSumWavefunction& g) {
    if (m.rows() != f.dim() || m.cols() != g.dim())
        throw std::invalid_argument("pointwise_sesquilinear: dimension mismatch");
    if (!(f.box_scale() == g.box_scale()))
        throw std::invalid_argument("pointwise_sesquilinear: incommensurate box scales");
    ExpSumWavefunction out(1, f.box_scale());
    for (const auto& tf : f.terms()) {
        for (const auto& tg : g.terms()) {
            CoordPolynomial s;
            for (int r = 0; r < f.dim(); ++r) {
                if (tf.amp[r].is_zero()) continue;
                CoordPolynomial fconj = tf.amp[r].conj();
                for (int c = 0; c < g.dim(); ++c) {
                    if (m.at(r, c).is_zero() || tg.amp[c].is_zero()) continue;
                    s += (fconj * tg.amp[c]).scaled(EnergyScalar(m.at(r, c)));
                }
            }
            if (s.is_zero()) continue;
            ExpSumTerm t;
            t.momentum = {tg.momentum[0] - tf.momentum[0], tg.momentum[1] - tf.momentum[1],
                          tg.momentum[2] - tf.momentum[2]};
            t.freq = tg.freq - tf.freq.conj();
            t.amp.push_back(std::move(s));
            out.add_term(std::move(t));
        }
    }
    out.canonicalize();
    return out;
}

ExpSumWavefunction derive(const ExpSumWavefunction& f, int axis) { return f.derivative(axis); }

namespace {

// Exact integral of x^e exp(i n x / q) over one box period [0, 2*pi*q),
// returned as tau_power -> coefficient with tau = 2*pi.  For n != 0 the
// boundary phases exp(i 2 pi n) collapse to 1, giving the recursion
//   I_e = L^e/(i kappa) - (e/(i kappa)) I_{e-1},   kappa = n/q.
std::map<int, GaussianRational> axis_integral(int e, int n, const Rational& q) {
    std::map<int, GaussianRational> out;
    if (n == 0) {
        Rational coeff(1);
        for (int k = 0; k < e + 1; ++k) coeff *= q;
        out[e + 1] = GaussianRational(coeff / Rational(e + 1));
        return out;
    }
    // I_0 = 0
    for (int k = 1; k <= e; ++k) {
        // I_k = tau^k q^k * (-i q/n) + (i k q / n) * I_{k-1}
        std::map<int, GaussianRational> next;
        Rational qk(1);
        for (int j = 0; j < k; ++j) qk *= q;
        next[k] = GaussianRational(Rational(0), -(qk * q / Rational(n)));
        GaussianRational f(Rational(0), Rational(k) * q / Rational(n));
        for (const auto& [p, c] : out) next[p] += f * c;
        for (auto it = next.begin(); it != next.end();) {
            if (it->second.is_zero()) it = next.erase(it);
            else ++it;
        }
        out = std::move(next);
    }
    return out;
}

}  // namespace

void BoxValue::add(int tau_power, const ExpSumWavefunction& contribution) {
    auto it = parts_.find(tau_power);
    if (it == parts_.end()) parts_.emplace(tau_power, contribution);
    else it->second = it->second + contribution;
}

bool BoxValue::is_zero() const {
    for (const auto& [p, wf] : parts_)
        if (!wf.is_zero()) return false;
    return true;
}

bool BoxValue::is_time_independent() const {
    for (const auto& [p, wf] : parts_) {
        ExpSumWavefunction c = wf;
        c.canonicalize();
        for (const auto& t : c.terms()) {
            if (!t.freq.is_zero()) return false;
            for (const auto& a : t.amp)
                if (a.depends_on(0)) return false;
        }
    }
    return true;
}

EnergyScalar BoxValue::constant_coefficient(int tau_power) const {
    auto it = parts_.find(tau_power);
    if (it == parts_.end()) return EnergyScalar();
    ExpSumWavefunction c = it->second;
    c.canonicalize();
    EnergyScalar out;
    for (const auto& t : c.terms()) {
        if (!t.freq.is_zero() || t.amp[0].depends_on(0))
            throw std::domain_error("BoxValue: value is not a constant");
        out += t.amp[0].eval({Rational(0), Rational(0), Rational(0), Rational(0)});
    }
    return out;
}

std::string BoxValue::to_string() const {
    std::string out;
    for (const auto& [p, wf] : parts_) {
        if (wf.is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(2pi)^" + std::to_string(p) + " * { " + wf.to_string() + " }";
    }
    return out.empty() ? "0" : out;
}

BoxValue operator-(const BoxValue& a, const BoxValue& b) {
    BoxValue out = a;
    for (const auto& [p, wf] : b.parts_) out.add(p, -wf);
    return out;
}

BoxValue box_integrate(const ExpSumWavefunction& scalar_wf) {
    if (scalar_wf.dim() != 1)
        throw std::invalid_argument("box_integrate: scalar wave function expected");
    const Rational& q = scalar_wf.box_scale();
    BoxValue out;
    for (const auto& term : scalar_wf.terms()) {
        for (const auto& [e, c] : term.amp[0].terms()) {
            // spatial factors integrate axis by axis; the t-monomial and the
            // frequency survive
            std::map<int, GaussianRational> acc{{0, GaussianRational(1)}};
            for (int axis = 0; axis < 3; ++axis) {
                auto fac = axis_integral(e[axis + 1], term.momentum[axis], q);
                std::map<int, GaussianRational> next;
                for (const auto& [pa, ca] : acc)
                    for (const auto& [pb, cb] : fac) {
                        next[pa + pb] += ca * cb;
                    }
                acc = std::move(next);
            }
            for (const auto& [tau, coeff] : acc) {
                if (coeff.is_zero()) continue;
                ExpSumWavefunction part(1, q);
                ExpSumTerm t;
                t.freq = term.freq;
                t.amp.push_back(
                    CoordPolynomial::monomial({e[0], 0, 0, 0}, c * EnergyScalar(coeff)));
                part.add_term(std::move(t));
                out.add(tau, part);
            }
        }
    }
    return out;
}

}  // namespace kdp
