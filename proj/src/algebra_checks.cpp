#include "kdp/algebra_checks.hpp"

#include <stdexcept>

namespace kdp {

namespace {

const GaussianRational kI = GaussianRational::unit_i();

std::string triple(int a, int b, int c) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

std::string first_nonzero_entry(const CMatrix& m) {
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (!m.at(r, c).is_zero())
                return "[" + std::to_string(r) + "," + std::to_string(c) +
                       "]=" + m.at(r, c).to_string();
    return "zero";
}

void check_equal(IdentityReport& rep, const CMatrix& lhs, const CMatrix& rhs,
                 const std::string& context) {
    CMatrix residual = lhs - rhs;
    rep.record(residual.is_zero(), context + " residual " + first_nonzero_entry(residual));
}

}  // namespace

IdentityReport verify_trilinear(const Representation& rep) {
    IdentityReport out{.id = "1.2", .description = "trilinear algebra, 64 index triples"};
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            for (int al = 0; al < 4; ++al) {
                CMatrix bm = rep.beta_upper(mu), bn = rep.beta_upper(nu), ba = rep.beta_upper(al);
                CMatrix lhs = bm * bn * ba + ba * bn * bm;
                CMatrix rhs(rep.dim, rep.dim);
                if (mu == nu) rhs += ba.scaled(GaussianRational(metric(mu)));
                if (nu == al) rhs += bm.scaled(GaussianRational(metric(nu)));
                check_equal(out, lhs, rhs, triple(mu, nu, al));
            }
    return out;
}

IdentityReport verify_spin0_strong(const Representation& rep) {
    IdentityReport out{.id = "2.2", .description = "strong spin-0 relation + reduction to 1.2"};
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            for (int al = 0; al < 4; ++al) {
                CMatrix bm = rep.beta_upper(mu), bn = rep.beta_upper(nu), ba = rep.beta_upper(al);
                CMatrix lhs = bm * bn * ba;
                CMatrix rhs(rep.dim, rep.dim);
                if (mu == nu) rhs += (ba * rep.beta_proj).scaled(GaussianRational(metric(mu)));
                if (nu == al) rhs += (rep.beta_proj * bm).scaled(GaussianRational(metric(nu)));
                check_equal(out, lhs, rhs, triple(mu, nu, al));
            }
    // summing the (mu,nu,al) and (al,nu,mu) instances must reproduce 1.2
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            for (int al = 0; al < 4; ++al) {
                CMatrix bm = rep.beta_upper(mu), bn = rep.beta_upper(nu), ba = rep.beta_upper(al);
                CMatrix sum(rep.dim, rep.dim);
                if (mu == nu)
                    sum += (ba * rep.beta_proj + rep.beta_proj * ba)
                               .scaled(GaussianRational(metric(mu)));
                if (nu == al)
                    sum += (rep.beta_proj * bm + bm * rep.beta_proj)
                               .scaled(GaussianRational(metric(nu)));
                CMatrix rhs(rep.dim, rep.dim);
                if (mu == nu) rhs += ba.scaled(GaussianRational(metric(mu)));
                if (nu == al) rhs += bm.scaled(GaussianRational(metric(nu)));
                check_equal(out, sum, rhs, "1.2-recovery " + triple(mu, nu, al));
            }
    return out;
}

IdentityReport build_and_verify_omega(const Representation& rep) {
    IdentityReport out{.id = "2.3-2.7", .description = "omega construction and properties"};
    if (rep.spin == 0) {
        out.record(rep.omega.is_zero(), "omega != 0 for spin 0: " + first_nonzero_entry(rep.omega));
        return out;
    }
    CMatrix id = CMatrix::identity(rep.dim);
    CMatrix w2 = rep.omega * rep.omega;
    check_equal(out, w2, id - rep.beta_proj, "omega^2 = 1 - beta_proj");
    for (int mu = 0; mu < 4; ++mu) {
        check_equal(out, w2 * rep.beta[mu] + rep.beta[mu] * w2, rep.beta[mu],
                    "{omega^2, b} mu=" + std::to_string(mu));
        for (int nu = 0; nu < 4; ++nu) {
            check_equal(out,
                        rep.beta[mu] * rep.omega * rep.beta[nu] +
                            rep.beta[nu] * rep.omega * rep.beta[mu],
                        CMatrix(rep.dim, rep.dim),
                        "b omega b antisymmetry (" + std::to_string(mu) + "," +
                            std::to_string(nu) + ")");
            CMatrix lhs = rep.beta[mu] * rep.beta[nu] * rep.omega +
                          rep.omega * rep.beta[nu] * rep.beta[mu];
            CMatrix rhs(rep.dim, rep.dim);
            if (mu == nu) rhs = rep.omega.scaled(GaussianRational(metric(mu)));
            check_equal(out, lhs, rhs,
                        "bb omega + omega bb (" + std::to_string(mu) + "," + std::to_string(nu) +
                            ")");
        }
    }
    // idempotent complement: (1 - omega^2)^2 = 1 - omega^2
    check_equal(out, (id - w2) * (id - w2), id - w2, "(1-omega^2) idempotent");
    return out;
}

IdentityReport verify_spin1_characterization(const Representation& rep) {
    IdentityReport out{.id = "2.8", .description = "spin-1 characterization + reduction to 1.2"};
    CMatrix w = rep.omega;
    CMatrix w2 = w * w;
    auto rhs28 = [&](int nu, int al, int mu) {
        CMatrix bn = rep.beta_upper(nu), ba = rep.beta_upper(al), bm = rep.beta_upper(mu);
        CMatrix rhs(rep.dim, rep.dim);
        if (al == mu) rhs += (bn * w2).scaled(GaussianRational(metric(al)));
        if (nu == al) rhs += (w2 * bm).scaled(GaussianRational(metric(nu)));
        rhs += bm * w * bn * ba * w;
        rhs += w * ba * bm * w * bn;
        return rhs;
    };
    for (int nu = 0; nu < 4; ++nu)
        for (int al = 0; al < 4; ++al)
            for (int mu = 0; mu < 4; ++mu) {
                CMatrix lhs = rep.beta_upper(nu) * rep.beta_upper(al) * rep.beta_upper(mu);
                check_equal(out, lhs, rhs28(nu, al, mu), triple(nu, al, mu));
            }
    // symmetrization reproduces 1.2: instance (mu,nu,al) + instance (al,nu,mu)
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            for (int al = 0; al < 4; ++al) {
                CMatrix sum = rhs28(mu, nu, al) + rhs28(al, nu, mu);
                CMatrix rhs(rep.dim, rep.dim);
                if (mu == nu) rhs += rep.beta_upper(al).scaled(GaussianRational(metric(mu)));
                if (nu == al) rhs += rep.beta_upper(mu).scaled(GaussianRational(metric(nu)));
                check_equal(out, sum, rhs, "1.2-recovery " + triple(mu, nu, al));
            }
    return out;
}

IdentityReport build_and_verify_spin_operators(const Representation& rep) {
    if (rep.spin != 1)
        throw std::invalid_argument("build_and_verify_spin_operators: spin-1 representation required");
    IdentityReport out{.id = "4.5-4.10", .description = "spin operators, xi, cubic spin algebra"};
    // block structure (adjoint blocks, zero last row/column)
    for (int k = 0; k < 3; ++k) {
        CMatrix expect(rep.dim, rep.dim);
        for (int blk = 0; blk < 3; ++blk)
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    expect.at(3 * blk + i, 3 * blk + j) = rep.t_blocks[k].at(i, j);
        check_equal(out, rep.spin_ops[k], expect, "S block form k=" + std::to_string(k + 1));
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
            check_equal(out, lhs, rhs, "[S,S] (" + std::to_string(i + 1) + "," +
                                           std::to_string(j + 1) + ")");
        }
    // xi block form
    {
        CMatrix expect(rep.dim, rep.dim);
        for (int i = 0; i < 10; ++i)
            expect.at(i, i) = GaussianRational(Rational(i < 3 || i == 9 ? 1 : -1));
        check_equal(out, rep.xi, expect, "xi block form");
    }
    // {b_i, b_j} = xi {S_i, S_j} (i != j) and b_k^2 = -(1+xi)/2 + xi S_k^2
    CMatrix id = CMatrix::identity(rep.dim);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            if (i == j) continue;
            check_equal(out, rep.beta[i] * rep.beta[j] + rep.beta[j] * rep.beta[i],
                        rep.xi * (rep.spin_ops[i - 1] * rep.spin_ops[j - 1] +
                                  rep.spin_ops[j - 1] * rep.spin_ops[i - 1]),
                        "anticommutator relation (" + std::to_string(i) + "," + std::to_string(j) +
                            ")");
        }
    for (int k = 1; k <= 3; ++k)
        check_equal(out, rep.beta[k] * rep.beta[k],
                    (id + rep.xi).scaled(GaussianRational(Rational(-1, 2))) +
                        rep.xi * rep.spin_ops[k - 1] * rep.spin_ops[k - 1],
                    "b_k^2 relation k=" + std::to_string(k));
    // S_i S_k S_j + S_j S_k S_i = d_{ik} S_j + d_{jk} S_i
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            for (int j = 0; j < 3; ++j) {
                CMatrix lhs = rep.spin_ops[i] * rep.spin_ops[k] * rep.spin_ops[j] +
                              rep.spin_ops[j] * rep.spin_ops[k] * rep.spin_ops[i];
                CMatrix rhs(rep.dim, rep.dim);
                if (i == k) rhs += rep.spin_ops[j];
                if (j == k) rhs += rep.spin_ops[i];
                check_equal(out, lhs, rhs, "cubic spin algebra " + triple(i + 1, k + 1, j + 1));
            }
    return out;
}

IdentityReport verify_spin_tensor_commutator(const Representation& rep) {
    IdentityReport out{.id = "6.2", .description = "[b_mu, S_{delta sigma}] matrix identity"};
    for (int mu = 0; mu < 4; ++mu)
        for (int de = 0; de < 4; ++de)
            for (int si = 0; si < 4; ++si) {
                CMatrix s = rep.s_lower(de, si);
                CMatrix lhs = rep.beta[mu] * s - s * rep.beta[mu];
                CMatrix rhs(rep.dim, rep.dim);
                if (mu == de) rhs += rep.beta[si].scaled(GaussianRational(metric(mu)));
                if (mu == si) rhs -= rep.beta[de].scaled(GaussianRational(metric(mu)));
                check_equal(out, lhs, rhs, triple(mu, de, si));
            }
    return out;
}

IdentityReport verify_eta_properties(const Representation& rep) {
    IdentityReport out{.id = "eta", .description = "adjoint metric and hermiticity convention"};
    CMatrix id = CMatrix::identity(rep.dim);
    check_equal(out, rep.eta * rep.eta, id, "eta^2");
    for (int mu = 0; mu < 4; ++mu)
        check_equal(out, rep.eta * rep.beta[mu].conj_transpose() * rep.eta, rep.beta[mu],
                    "eta b^dag eta mu=" + std::to_string(mu));
    return out;
}

IdentityReport verify_split_idempotent(const Representation& rep) {
    IdentityReport out{.id = "2.1", .description = "split idempotent properties"};
    check_equal(out, rep.beta_proj * rep.beta_proj, rep.beta_proj, "beta_proj^2");
    for (int mu = 0; mu < 4; ++mu)
        check_equal(out, rep.beta_proj * rep.beta[mu] + rep.beta[mu] * rep.beta_proj,
                    rep.beta[mu], "{beta_proj,b} mu=" + std::to_string(mu));
    if (rep.spin == 1) {
        CMatrix id = CMatrix::identity(rep.dim);
        check_equal(out, rep.beta_proj, id - rep.omega * rep.omega, "beta_proj = 1 - omega^2");
    }
    return out;
}

IdentityReport verify_e2_rewriting_matrix_part(const Representation& rep,
                                               const Matrix<Rational>& f_upper) {
    IdentityReport out{.id = "3.7", .description = "second equality of the e^2 rewriting chain"};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            if (!(f_upper.at(a, b) + f_upper.at(b, a)).is_zero())
                throw std::invalid_argument("verify_e2_rewriting_matrix_part: F not antisymmetric");

    auto f = [&](int a, int b) { return GaussianRational(f_upper.at(a, b)); };
    const int d = rep.dim;
    CMatrix lhs(d, d), quad(d, d), cross(d, d), last(d, d);
    for (int al = 0; al < 4; ++al)
        for (int ga = 0; ga < 4; ++ga) {
            if (f(al, ga).is_zero()) continue;
            for (int mu = 0; mu < 4; ++mu)
                for (int rh = 0; rh < 4; ++rh) {
                    GaussianRational c = f(al, ga) * f(mu, rh);
                    if (c.is_zero()) continue;
                    CMatrix word = rep.beta[rh] * rep.beta[ga] * rep.beta[mu] * rep.beta[al];
                    if (mu == al)
                        word += (rep.beta[rh] * rep.beta[ga]).scaled(GaussianRational(metric(mu)));
                    lhs += word.scaled(c);
                    quad += (rep.s_lower(rh, mu) * rep.s_lower(al, ga)).scaled(c);
                    cross += (rep.s_lower(rh, ga) * rep.s_lower(mu, al)).scaled(c);
                }
            // 2 F^{al ga} F_al^{rho} b_rho b_ga
            for (int rh = 0; rh < 4; ++rh) {
                GaussianRational c =
                    f(al, ga) * GaussianRational(metric(al)) * f(al, rh) * GaussianRational(2);
                if (c.is_zero()) continue;
                last += (rep.beta[rh] * rep.beta[ga]).scaled(c);
            }
        }
    CMatrix rhs = (quad - cross.scaled(GaussianRational(2))).scaled(GaussianRational(Rational(-1, 4)));
    rhs += last;
    check_equal(out, lhs, rhs, "e2 rewriting");
    return out;
}

Matrix<Rational> random_antisymmetric_f(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    Matrix<Rational> f(4, 4);
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
            Rational v(num(rng), den(rng));
            f.at(a, b) = v;
            f.at(b, a) = -v;
        }
    return f;
}

bool mutation_detected(const Representation& mutated) {
    if (!verify_trilinear(mutated).pass) return true;
    if (!verify_eta_properties(mutated).pass) return true;
    // hermiticity convention
    if (!(mutated.beta[0].conj_transpose() == mutated.beta[0])) return true;
    for (int k = 1; k < 4; ++k)
        if (!(mutated.beta[k].conj_transpose() == -mutated.beta[k])) return true;
    // projector support
    CMatrix b0sq = mutated.beta[0] * mutated.beta[0];
    CMatrix expected(mutated.dim, mutated.dim);
    for (int c : mutated.physical_components()) expected.at(c, c) = GaussianRational(1);
    if (!(b0sq == expected)) return true;
    if (mutated.spin == 0 && !verify_spin0_strong(mutated).pass) return true;
    if (mutated.spin == 1 && !verify_spin1_characterization(mutated).pass) return true;
    return false;
}

}  // namespace kdp
