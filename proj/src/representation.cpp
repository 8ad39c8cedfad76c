#include "kdp/representation.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace kdp {

namespace {

const GaussianRational kI = GaussianRational::unit_i();

// parity of a 4-permutation
int perm_sign(const std::array<int, 4>& p) {
    int sign = 1;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            if (p[a] > p[b]) sign = -sign;
    return sign;
}

CMatrix compute_omega(const std::array<CMatrix, 4>& beta, int dim) {
    CMatrix acc(dim, dim);
    std::array<int, 4> p{0, 1, 2, 3};
    do {
        CMatrix prod = beta[p[0]] * beta[p[1]] * beta[p[2]] * beta[p[3]];
        if (perm_sign(p) > 0) acc += prod;
        else acc -= prod;
    } while (std::next_permutation(p.begin(), p.end()));
    return acc.scaled(kI * GaussianRational(Rational(1, 4)));
}

std::array<CMatrix, 3> adjoint_blocks() {
    std::array<CMatrix, 3> t{CMatrix(3, 3), CMatrix(3, 3), CMatrix(3, 3)};
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                int e = levi_civita3(i, k, j);
                if (e) t[k].at(i, j) = kI * GaussianRational(Rational(e));
            }
    return t;
}

std::array<CMatrix, 3> spin_from_commutators(const Representation& rep) {
    // S_l = (i/2) eps_{ijl} (beta_i beta_j - beta_j beta_i)
    std::array<CMatrix, 3> s{CMatrix(rep.dim, rep.dim), CMatrix(rep.dim, rep.dim),
                             CMatrix(rep.dim, rep.dim)};
    for (int l = 0; l < 3; ++l) {
        CMatrix acc(rep.dim, rep.dim);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                int e = levi_civita3(i, j, l);
                if (!e) continue;
                CMatrix comm = rep.s_lower(i + 1, j + 1);
                if (e > 0) acc += comm;
                else acc -= comm;
            }
        s[l] = acc.scaled(kI * GaussianRational(Rational(1, 2)));
    }
    return s;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw std::logic_error("representation construction failure: " + what);
}

void check_trilinear(const Representation& rep) {
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            for (int al = 0; al < 4; ++al) {
                CMatrix bm = rep.beta_upper(mu), bn = rep.beta_upper(nu), ba = rep.beta_upper(al);
                CMatrix lhs = bm * bn * ba + ba * bn * bm;
                CMatrix rhs(rep.dim, rep.dim);
                if (mu == nu) rhs += ba.scaled(GaussianRational(metric(mu)));
                if (nu == al) rhs += bm.scaled(GaussianRational(metric(nu)));
                require(lhs == rhs, "trilinear algebra at (" + std::to_string(mu) + "," +
                                        std::to_string(nu) + "," + std::to_string(al) + ")");
            }
}

void check_hermiticity(const Representation& rep) {
    require(rep.beta[0].conj_transpose() == rep.beta[0], "beta_0 not hermitian");
    for (int k = 1; k < 4; ++k)
        require(rep.beta[k].conj_transpose() == -rep.beta[k],
                "beta_" + std::to_string(k) + " not antihermitian");
    CMatrix id = CMatrix::identity(rep.dim);
    require(rep.eta * rep.eta == id, "eta^2 != 1");
    for (int mu = 0; mu < 4; ++mu)
        require(rep.eta * rep.beta[mu].conj_transpose() * rep.eta == rep.beta[mu],
                "eta beta^dag eta != beta for mu=" + std::to_string(mu));
}

void check_projector_support(const Representation& rep) {
    CMatrix b0sq = rep.beta[0] * rep.beta[0];
    CMatrix expected(rep.dim, rep.dim);
    for (int c : rep.physical_components()) expected.at(c, c) = GaussianRational(1);
    require(b0sq == expected, "beta_0^2 is not the projector on the physical components");
}

void check_split_idempotent(const Representation& rep) {
    require(rep.beta_proj * rep.beta_proj == rep.beta_proj, "beta_proj not idempotent");
    for (int mu = 0; mu < 4; ++mu)
        require(rep.beta_proj * rep.beta[mu] + rep.beta[mu] * rep.beta_proj == rep.beta[mu],
                "{beta_proj, beta_mu} != beta_mu");
    if (rep.spin == 1) {
        CMatrix id = CMatrix::identity(rep.dim);
        require(rep.beta_proj == id - rep.omega * rep.omega, "beta_proj != 1 - omega^2");
    } else {
        for (int r = 0; r < rep.dim; ++r)
            require(rep.beta_proj.at(r, rep.scalar_component()).is_zero(),
                    "beta_proj does not annihilate the physical component");
    }
}

void check_spin1_structure(const Representation& rep) {
    // block form of the spin operators
    for (int k = 0; k < 3; ++k) {
        CMatrix expect(rep.dim, rep.dim);
        for (int blk = 0; blk < 3; ++blk)
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    expect.at(3 * blk + i, 3 * blk + j) = rep.t_blocks[k].at(i, j);
        require(rep.spin_ops[k] == expect, "S_k lacks the block-diagonal adjoint form");
    }
    // [S_i, S_j] = i eps_{ijk} S_k
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            CMatrix lhs = rep.spin_ops[i] * rep.spin_ops[j] - rep.spin_ops[j] * rep.spin_ops[i];
            CMatrix rhs(rep.dim, rep.dim);
            for (int k = 0; k < 3; ++k) {
                int e = levi_civita3(i, j, k);
                if (e) rhs += rep.spin_ops[k].scaled(kI * GaussianRational(Rational(e)));
            }
            require(lhs == rhs, "spin commutation relation failed");
        }
    // {b_i, b_j} = xi {S_i, S_j} for i != j, and b_k^2 = -(1+xi)/2 + xi S_k^2
    CMatrix id = CMatrix::identity(rep.dim);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            if (i == j) continue;
            CMatrix lhs = rep.beta[i] * rep.beta[j] + rep.beta[j] * rep.beta[i];
            CMatrix ss = rep.spin_ops[i - 1] * rep.spin_ops[j - 1] +
                         rep.spin_ops[j - 1] * rep.spin_ops[i - 1];
            require(lhs == rep.xi * ss, "anticommutator-to-spin relation failed");
        }
    for (int k = 1; k <= 3; ++k) {
        CMatrix lhs = rep.beta[k] * rep.beta[k];
        CMatrix rhs = (id + rep.xi).scaled(GaussianRational(Rational(-1, 2))) +
                      rep.xi * rep.spin_ops[k - 1] * rep.spin_ops[k - 1];
        require(lhs == rhs, "beta_k^2 xi relation failed");
    }
}

// Solves {X, beta_mu} = beta_mu together with the selection conditions as one
// linear system: the split idempotent is pinned by the algebra plus the
// physical-sector convention, then checked to square to itself.
CMatrix solve_split_idempotent(const Representation& rep) {
    const int d = rep.dim;
    const int n = d * d;
    auto unknown = [d](int r, int c) { return r * d + c; };

    std::vector<std::vector<GaussianRational>> rows;
    std::vector<GaussianRational> rhs;
    auto add_row = [&]() -> std::vector<GaussianRational>& {
        rows.emplace_back(n);
        rhs.emplace_back();
        return rows.back();
    };

    for (int mu = 0; mu < 4; ++mu)
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) {
                auto& row = add_row();
                for (int k = 0; k < d; ++k) {
                    if (!rep.beta[mu].at(k, c).is_zero())
                        row[unknown(r, k)] += rep.beta[mu].at(k, c);
                    if (!rep.beta[mu].at(r, k).is_zero())
                        row[unknown(k, c)] += rep.beta[mu].at(r, k);
                }
                rhs.back() = rep.beta[mu].at(r, c);
            }

    if (rep.spin == 0) {
        // annihilate the physical scalar component: X e_phys = 0
        for (int r = 0; r < d; ++r) {
            auto& row = add_row();
            row[unknown(r, rep.scalar_component())] = GaussianRational(1);
        }
    } else {
        // pin to 1 - omega^2
        CMatrix target = CMatrix::identity(d) - rep.omega * rep.omega;
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) {
                auto& row = add_row();
                row[unknown(r, c)] = GaussianRational(1);
                rhs.back() = target.at(r, c);
            }
    }

    CMatrix system(static_cast<int>(rows.size()), n);
    for (int r = 0; r < system.rows(); ++r)
        for (int c = 0; c < n; ++c) system.at(r, c) = rows[r][c];
    std::vector<GaussianRational> x = solve_particular(system, rhs);

    CMatrix out(d, d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) out.at(r, c) = x[unknown(r, c)];
    return out;
}

Representation assemble(int spin) {
    Representation rep;
    rep.spin = spin;
    rep.dim = spin == 0 ? 5 : 10;
    for (auto& b : rep.beta) b = CMatrix(rep.dim, rep.dim);

    if (spin == 0) {
        // carrier: three gradient slots, one time-derivative slot, the
        // physical scalar last (slots 0-2, 3, 4)
        rep.beta[0].at(3, 4) = -kI;
        rep.beta[0].at(4, 3) = kI;
        for (int k = 0; k < 3; ++k) {
            rep.beta[k + 1].at(k, 4) = GaussianRational(1);
            rep.beta[k + 1].at(4, k) = GaussianRational(-1);
        }
    } else {
        // carrier: first-order form of the massive vector field, ordered as
        // (strength-tensor time rows 0-2, strength-tensor space rows 3-5,
        //  vector rows 6-8, scalar row 9)
        for (int k = 0; k < 3; ++k) {
            rep.beta[0].at(k, 6 + k) = -kI;
            rep.beta[0].at(6 + k, k) = kI;
        }
        for (int j = 0; j < 3; ++j) {
            rep.beta[j + 1].at(j, 9) = -kI;
            rep.beta[j + 1].at(9, j) = -kI;
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) {
                    int ekjl = levi_civita3(k, j, l);
                    if (ekjl)
                        rep.beta[j + 1].at(3 + k, 6 + l) = kI * GaussianRational(Rational(ekjl));
                    int ejkl = levi_civita3(j, k, l);
                    if (ejkl)
                        rep.beta[j + 1].at(6 + k, 3 + l) = kI * GaussianRational(Rational(ejkl));
                }
        }
    }

    CMatrix b0sq = rep.beta[0] * rep.beta[0];
    rep.eta = b0sq + b0sq - CMatrix::identity(rep.dim);
    rep.omega = compute_omega(rep.beta, rep.dim);
    rep.spin_ops = spin_from_commutators(rep);
    rep.t_blocks = adjoint_blocks();
    if (spin == 1) {
        rep.xi = CMatrix(rep.dim, rep.dim);
        for (int i = 0; i < 10; ++i)
            rep.xi.at(i, i) = GaussianRational(Rational(i < 3 || i == 9 ? 1 : -1));
    }
    rep.beta_proj = solve_split_idempotent(rep);
    return rep;
}

}  // namespace

Representation build_representation(int spin) {
    if (spin != 0 && spin != 1)
        throw std::invalid_argument("build_representation: spin must be 0 or 1");
    Representation rep = assemble(spin);
    check_trilinear(rep);
    check_hermiticity(rep);
    check_projector_support(rep);
    check_split_idempotent(rep);
    if (spin == 0) {
        require(rep.omega.is_zero(), "omega must vanish for spin 0");
    } else {
        CMatrix id = CMatrix::identity(rep.dim);
        require(rep.omega * rep.omega == id - rep.beta_proj, "omega^2 != 1 - beta_proj");
        check_spin1_structure(rep);
    }
    return rep;
}

const Representation& representation(int spin) {
    static std::mutex mu;
    static std::map<int, Representation> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(spin);
    if (it == cache.end()) it = cache.emplace(spin, build_representation(spin)).first;
    return it->second;
}

Representation trivial_representation(int dim) {
    Representation rep;
    rep.spin = -1;
    rep.dim = dim;
    for (auto& b : rep.beta) b = CMatrix(dim, dim);
    rep.beta_proj = CMatrix(dim, dim);
    rep.omega = CMatrix(dim, dim);
    for (auto& s : rep.spin_ops) s = CMatrix(dim, dim);
    rep.t_blocks = adjoint_blocks();
    rep.eta = -CMatrix::identity(dim);
    return rep;
}

Representation with_mutated_entry(const Representation& rep, int mu, int row, int col,
                                  const GaussianRational& delta) {
    Representation out = rep;
    out.beta[mu].at(row, col) += delta;
    return out;
}

}  // namespace kdp
