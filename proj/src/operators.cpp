#include "kdp/operators.hpp"

#include <stdexcept>

namespace kdp {

namespace {

const GaussianRational kI = GaussianRational::unit_i();

GaussianRational g_upper(int mu) { return GaussianRational(metric(mu)); }

void check_compatible(const DiffOperator& a, const DiffOperator& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("DiffOperator: dimension mismatch");
    if (a.field().get() != b.field().get())
        throw std::invalid_argument("DiffOperator: operators built over different fields");
}

}  // namespace

void DiffOperator::add_term(GaussianRational coeff, std::vector<OpFactor> factors) {
    if (coeff.is_zero()) return;
    terms_.push_back(OpTerm{std::move(coeff), std::move(factors)});
}

ExpSumWavefunction DiffOperator::apply(const ExpSumWavefunction& psi) const {
    if (psi.dim() != dim_) throw std::invalid_argument("DiffOperator: wave function dimension");
    ExpSumWavefunction acc(dim_, psi.box_scale());
    for (const auto& term : terms_) {
        ExpSumWavefunction cur = psi;
        for (auto it = term.factors.rbegin(); it != term.factors.rend(); ++it) {
            if (const auto* m = std::get_if<CMatrix>(&*it)) {
                cur = cur.applied(*m);
            } else if (const auto* d = std::get_if<CovD>(&*it)) {
                // D^mu psi = i g^{mu mu} d_mu psi - e A^mu psi
                ExpSumWavefunction dpsi = cur.derivative(d->mu).scaled(EnergyScalar(kI * g_upper(d->mu)));
                if (field_ && !field_->a_upper[d->mu].is_zero()) {
                    CoordPolynomial ea =
                        field_->a_upper[d->mu].scaled(EnergyScalar(field_->e_charge));
                    dpsi = dpsi - cur.multiplied_by(ea);
                }
                cur = std::move(dpsi);
            } else {
                cur = cur.multiplied_by(std::get<CoordPolynomial>(*it));
            }
        }
        acc = acc + cur.scaled(EnergyScalar(term.coeff));
    }
    acc.canonicalize();
    return acc;
}

DiffOperator operator+(const DiffOperator& a, const DiffOperator& b) {
    check_compatible(a, b);
    DiffOperator out = a;
    out.terms_.insert(out.terms_.end(), b.terms_.begin(), b.terms_.end());
    return out;
}

DiffOperator operator-(const DiffOperator& a, const DiffOperator& b) {
    return a + b.scaled(GaussianRational(-1));
}

DiffOperator operator*(const DiffOperator& a, const DiffOperator& b) {
    check_compatible(a, b);
    DiffOperator out(a.dim(), a.field());
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_) {
            std::vector<OpFactor> factors = ta.factors;
            factors.insert(factors.end(), tb.factors.begin(), tb.factors.end());
            out.add_term(ta.coeff * tb.coeff, std::move(factors));
        }
    return out;
}

DiffOperator DiffOperator::scaled(const GaussianRational& s) const {
    DiffOperator out(dim_, field_);
    if (s.is_zero()) return out;
    for (const auto& t : terms_) out.add_term(t.coeff * s, t.factors);
    return out;
}

TestBasis make_test_basis(int dim, int degree) {
    std::vector<int> all(dim);
    for (int c = 0; c < dim; ++c) all[c] = c;
    return make_test_basis(dim, degree, all);
}

TestBasis make_test_basis(int dim, int degree, const std::vector<int>& components) {
    TestBasis basis;
    basis.dim = dim;
    basis.degree = degree;
    for (int d0 = 0; d0 <= degree; ++d0)
        for (int d1 = 0; d0 + d1 <= degree; ++d1)
            for (int d2 = 0; d0 + d1 + d2 <= degree; ++d2)
                for (int d3 = 0; d0 + d1 + d2 + d3 <= degree; ++d3)
                    for (int c : components)
                        basis.elements.push_back(ExpSumWavefunction::polynomial(
                            dim, c, CoordPolynomial::monomial({d0, d1, d2, d3})));
    return basis;
}

DiffOperator lambda_op(const Representation& rep, const FieldPtr& field, const Rational& mass) {
    DiffOperator op(rep.dim, field);
    for (int mu = 0; mu < 4; ++mu) op.add_term(GaussianRational(1), {rep.beta[mu], CovD{mu}});
    op.add_identity(GaussianRational(mass));
    return op;
}

DiffOperator kg_op(int dim, const FieldPtr& field, const Rational& mass) {
    DiffOperator op(dim, field);
    for (int al = 0; al < 4; ++al) op.add_term(g_upper(al), {CovD{al}, CovD{al}});
    op.add_identity(GaussianRational(-(mass * mass)));
    return op;
}

HamiltonParts hamilton_op(const Representation& rep, const FieldPtr& field, const Rational& mass) {
    DiffOperator base(rep.dim, field);
    for (int i = 1; i < 4; ++i) {
        CMatrix comm = rep.beta[i] * rep.beta[0] - rep.beta[0] * rep.beta[i];
        base.add_term(GaussianRational(1), {comm, CovD{i}});
    }
    base.add_term(GaussianRational(-mass), {rep.beta[0]});
    if (!field->a_upper[0].is_zero())
        base.add_term(GaussianRational(field->e_charge), {field->a_upper[0]});

    DiffOperator trouble(rep.dim, field);
    // (ie/2m) F^{mu rho} (b_rho b_0 b_mu + b_rho g_{mu 0})
    GaussianRational c = kI * GaussianRational(field->e_charge / (Rational(2) * mass));
    for (int mu = 0; mu < 4; ++mu)
        for (int rho = 0; rho < 4; ++rho) {
            if (field->f_upper[mu][rho].is_zero()) continue;
            CMatrix m = rep.beta[rho] * rep.beta[0] * rep.beta[mu];
            if (mu == 0) m += rep.beta[rho];
            trouble.add_term(c, {m, field->f_upper[mu][rho]});
        }

    HamiltonParts parts{base + trouble, trouble, base};
    return parts;
}

DiffOperator constraint_op(const Representation& rep, const FieldPtr& field, const Rational& mass) {
    CMatrix b0sq = rep.beta[0] * rep.beta[0];
    CMatrix id = CMatrix::identity(rep.dim);
    // the derivation identity (1 - b_0^2) b_i = b_i b_0^2, exact
    for (int i = 1; i < 4; ++i)
        if (!((id - b0sq) * rep.beta[i] == rep.beta[i] * b0sq))
            throw std::logic_error("constraint_op: projector identity failed");
    DiffOperator op(rep.dim, field);
    for (int i = 1; i < 4; ++i)
        op.add_term(GaussianRational(1), {rep.beta[i] * b0sq, CovD{i}});
    op.add_term(GaussianRational(mass), {id - b0sq});
    return op;
}

DiffOperator omega1_op(const Representation& rep, const FieldPtr& field, const Rational& mass,
                       FDerivMode mode) {
    DiffOperator op = kg_op(rep.dim, field, mass);
    GaussianRational half_ie = kI * GaussianRational(field->e_charge / Rational(2));
    for (int nu = 0; nu < 4; ++nu)
        for (int mu = 0; mu < 4; ++mu) {
            if (field->f_upper[nu][mu].is_zero()) continue;
            op.add_term(-half_ie, {rep.s_lower(nu, mu), field->f_upper[nu][mu]});
        }
    GaussianRational c = kI * GaussianRational(field->e_charge / (Rational(2) * mass));
    for (int nu = 0; nu < 4; ++nu)
        for (int mu = 0; mu < 4; ++mu)
            for (int rho = 0; rho < 4; ++rho) {
                if (field->f_upper[mu][rho].is_zero()) continue;
                CMatrix m = rep.beta[rho] * rep.beta[nu] * rep.beta[mu];
                if (mu == nu) m += rep.beta[rho].scaled(GaussianRational(metric(mu)));
                if (mode == FDerivMode::on_product) {
                    op.add_term(-c, {m, CovD{nu}, field->f_upper[mu][rho]});
                } else {
                    // derivative restricted to the strength tensor: i d^nu F
                    op.add_term(-c * kI, {m, partial_upper(field->f_upper[mu][rho], nu)});
                }
            }
    return op;
}

DiffOperator d1_op(const Representation& rep, const FieldPtr& field, const Rational& mass) {
    DiffOperator op(rep.dim, field);
    GaussianRational inv_m(Rational(1) / mass);
    for (int al = 0; al < 4; ++al) op.add_term(inv_m * g_upper(al), {CovD{al}, CovD{al}});
    op.add_identity(GaussianRational(-mass));
    for (int nu = 0; nu < 4; ++nu) op.add_term(GaussianRational(1), {rep.beta[nu], CovD{nu}});
    for (int si = 0; si < 4; ++si)
        for (int de = 0; de < 4; ++de)
            op.add_term(-inv_m, {rep.beta[si] * rep.beta[de], CovD{de}, CovD{si}});
    return op;
}

DiffOperator d2_op(const Representation& rep, const FieldPtr& field, const Rational& mass) {
    DiffOperator op = d1_op(rep, field, mass);
    GaussianRational c = kI * GaussianRational(field->e_charge / (Rational(2) * mass));
    for (int de = 0; de < 4; ++de)
        for (int si = 0; si < 4; ++si) {
            if (field->f_upper[de][si].is_zero()) continue;
            op.add_term(c, {rep.s_lower(de, si), field->f_upper[de][si]});
        }
    GaussianRational inv_m(Rational(1) / mass);
    for (int al = 0; al < 4; ++al) op.add_term(-inv_m * g_upper(al), {CovD{al}, CovD{al}});
    return op;
}

IdentityReport operators_equal_on_basis(const std::string& id, const std::string& what,
                                        const DiffOperator& a, const DiffOperator& b,
                                        const TestBasis& basis) {
    IdentityReport out{.id = id, .description = what};
    for (std::size_t k = 0; k < basis.elements.size(); ++k) {
        ExpSumWavefunction diff = a.apply(basis.elements[k]) - b.apply(basis.elements[k]);
        bool ok = diff.is_zero();
        out.record(ok, what + " differs on basis element " + std::to_string(k) +
                           (ok ? "" : ": " + diff.to_string()));
    }
    return out;
}

IdentityReport operator_zero_on_basis(const std::string& id, const std::string& what,
                                      const DiffOperator& a, const TestBasis& basis) {
    IdentityReport out{.id = id, .description = what};
    for (std::size_t k = 0; k < basis.elements.size(); ++k) {
        ExpSumWavefunction v = a.apply(basis.elements[k]);
        bool ok = v.is_zero();
        out.record(ok, what + " nonzero on basis element " + std::to_string(k) +
                           (ok ? "" : ": " + v.to_string()));
    }
    return out;
}

IdentityReport verify_free_factorization(const Representation& rep, const Rational& mass,
                                         int degree) {
    FieldPtr free_field = make_zero_field();
    TestBasis basis = make_test_basis(rep.dim, degree);
    DiffOperator prod = d1_op(rep, free_field, mass) * lambda_op(rep, free_field, mass);
    // -(box + m^2) = D^a D_a - m^2 at e = 0
    return operators_equal_on_basis("5.6", "free factorization d1*Lambda = -(box+m^2)", prod,
                                    kg_op(rep.dim, free_field, mass), basis);
}

IdentityReport verify_factorization(const Representation& rep, const FieldPtr& field,
                                    const Rational& mass, const TestBasis& basis) {
    DiffOperator prod = d1_op(rep, field, mass) * lambda_op(rep, field, mass);
    return operators_equal_on_basis("5.4", "factorization d1*Lambda = Omega_1", prod,
                                    omega1_op(rep, field, mass), basis);
}

IdentityReport verify_commutator_57(const Representation& rep, const FieldPtr& field,
                                    const Rational& mass, const TestBasis& basis) {
    DiffOperator lhs =
        commutator(d1_op(rep, field, mass), lambda_op(rep, field, mass));

    DiffOperator rhs(rep.dim, field);
    GaussianRational ce(field->e_charge / (Rational(2) * mass));
    bool df_term_nonzero = false;
    for (int si = 0; si < 4; ++si)
        for (int rho = 0; rho < 4; ++rho)
            for (int de = 0; de < 4; ++de) {
                CoordPolynomial df = partial_upper(field->f_upper[de][si], rho);
                if (df.is_zero()) continue;
                df_term_nonzero = true;
                rhs.add_term(ce, {rep.beta[si] * rep.beta[rho] * rep.beta[de], df});
            }
    GaussianRational cf = -kI * GaussianRational(field->e_charge / mass);
    for (int rho = 0; rho < 4; ++rho)
        for (int si = 0; si < 4; ++si) {
            if (field->f_upper[rho][si].is_zero()) continue;
            // D_rho = g_{rho rho} D^rho
            rhs.add_term(cf * g_upper(rho), {rep.beta[si], field->f_upper[rho][si], CovD{rho}});
        }

    IdentityReport out = operators_equal_on_basis(
        "5.7", "[d1, Lambda] equals its printed closed form", lhs, rhs, basis);
    if (field->kind == FieldKind::null_wave_poly) {
        out.record(df_term_nonzero, "dF summand expected nonzero for a null wave");
        bool nonzero = false;
        for (const auto& el : basis.elements)
            if (!rhs.apply(el).is_zero()) { nonzero = true; break; }
        out.record(nonzero, "commutator expected nonzero for a null wave");
    }
    return out;
}

IdentityReport verify_equation_class(const Representation& rep, const FieldPtr& field,
                                     const Rational& mass, const TestBasis& basis) {
    DiffOperator d1 = d1_op(rep, field, mass);
    DiffOperator omega1 = omega1_op(rep, field, mass);
    GaussianRational c = kI * GaussianRational(field->e_charge / (Rational(2) * mass));

    DiffOperator d1_shift = d1;
    for (int rho = 0; rho < 4; ++rho)
        for (int si = 0; si < 4; ++si) {
            if (field->f_upper[rho][si].is_zero()) continue;
            d1_shift.add_term(c, {rep.s_lower(rho, si), field->f_upper[rho][si]});
        }

    DiffOperator omega1_shift = omega1;
    // - (ie/2m) b_de b_si b_mu F^{si de} D^mu
    for (int de = 0; de < 4; ++de)
        for (int si = 0; si < 4; ++si) {
            if (field->f_upper[si][de].is_zero()) continue;
            for (int mu = 0; mu < 4; ++mu)
                omega1_shift.add_term(
                    -c, {rep.beta[de] * rep.beta[si] * rep.beta[mu], field->f_upper[si][de],
                         CovD{mu}});
        }
    // + (ie/2) F^{mu nu} S_{mu nu}
    GaussianRational half_ie = kI * GaussianRational(field->e_charge / Rational(2));
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            if (field->f_upper[mu][nu].is_zero()) continue;
            omega1_shift.add_term(half_ie, {rep.s_lower(mu, nu), field->f_upper[mu][nu]});
        }

    IdentityReport out = operators_equal_on_basis(
        "5.9", "shifted factorization d1' * Lambda = Omega_1'",
        d1_shift * lambda_op(rep, field, mass), omega1_shift, basis);

    // distinct members of the class for nonzero F
    if (field->kind != FieldKind::zero) {
        bool distinct = false;
        for (const auto& el : basis.elements)
            if (!(omega1_shift.apply(el) - omega1.apply(el)).is_zero()) { distinct = true; break; }
        out.record(distinct, "Omega_1' should differ from Omega_1 for nonzero F");
    }
    return out;
}

IdentityReport verify_third_order_commutes(const Representation& rep, const FieldPtr& field,
                                           const Rational& mass, const TestBasis& basis) {
    DiffOperator lhs = commutator(d2_op(rep, field, mass), lambda_op(rep, field, mass));
    return operator_zero_on_basis("6.1", "[d2, Lambda] = 0", lhs, basis);
}

IdentityReport verify_third_order_product(const Representation& rep, const FieldPtr& field,
                                          const Rational& mass, const TestBasis& basis) {
    DiffOperator lhs = d2_op(rep, field, mass) * lambda_op(rep, field, mass);

    // printed third-order operator; build -Omega_2 then negate
    DiffOperator neg(rep.dim, field);
    neg.add_identity(GaussianRational(mass * mass));
    GaussianRational c = kI * GaussianRational(field->e_charge / (Rational(2) * mass));
    for (int si = 0; si < 4; ++si)
        for (int de = 0; de < 4; ++de)
            for (int mu = 0; mu < 4; ++mu) {
                if (field->f_upper[mu][si].is_zero()) continue;
                CMatrix m = rep.beta[si] * rep.beta[de] * rep.beta[mu];
                if (de == mu) m -= rep.beta[si].scaled(GaussianRational(metric(de)));
                neg.add_term(c, {m, field->f_upper[mu][si], CovD{de}});
            }
    for (int mu = 0; mu < 4; ++mu)
        for (int de = 0; de < 4; ++de)
            for (int si = 0; si < 4; ++si) {
                if (field->f_upper[de][si].is_zero()) continue;
                neg.add_term(-c, {rep.beta[mu] * rep.s_lower(de, si), CovD{mu},
                                  field->f_upper[de][si]});
            }
    GaussianRational inv_m(Rational(1) / mass);
    for (int mu = 0; mu < 4; ++mu)
        for (int al = 0; al < 4; ++al)
            neg.add_term(inv_m * g_upper(al), {rep.beta[mu], CovD{mu}, CovD{al}, CovD{al}});

    return operators_equal_on_basis("6.6", "d2 * Lambda matches the printed third-order form",
                                    lhs, neg.scaled(GaussianRational(-1)), basis);
}

IdentityReport verify_aux_identities_6(const Representation& rep, const FieldPtr& field,
                                       const Rational& mass, const TestBasis& basis) {
    IdentityReport out{.id = "6.2-6.4", .description = "auxiliary contraction identities"};

    // 6.2 is a pure matrix identity
    for (int mu = 0; mu < 4; ++mu)
        for (int de = 0; de < 4; ++de)
            for (int si = 0; si < 4; ++si) {
                CMatrix s = rep.s_lower(de, si);
                CMatrix lhs = rep.beta[mu] * s - s * rep.beta[mu];
                CMatrix rhs(rep.dim, rep.dim);
                if (mu == de) rhs += rep.beta[si].scaled(GaussianRational(metric(mu)));
                if (mu == si) rhs -= rep.beta[de].scaled(GaussianRational(metric(mu)));
                out.record(lhs == rhs, "6.2 at (" + std::to_string(mu) + "," + std::to_string(de) +
                                           "," + std::to_string(si) + ")");
            }

    // 6.3: b_mu b_de b_si (d^mu F^{de si}) = -(1/2) b_si b_mu b_de (d^mu F^{de si})
    {
        PolyMatrix lhs(rep.dim, rep.dim), rhs(rep.dim, rep.dim);
        for (int mu = 0; mu < 4; ++mu)
            for (int de = 0; de < 4; ++de)
                for (int si = 0; si < 4; ++si) {
                    CoordPolynomial df = partial_upper(field->f_upper[de][si], mu);
                    if (df.is_zero()) continue;
                    lhs += scale_matrix(rep.beta[mu] * rep.beta[de] * rep.beta[si], df);
                    rhs += scale_matrix(rep.beta[si] * rep.beta[mu] * rep.beta[de],
                                        df.scaled(EnergyScalar(Rational(-1, 2))));
                }
        out.record(lhs == rhs, "6.3 contraction identity");
    }

    // 6.4 first: [D^a D_a / m, Lambda] = -2 (ie/m) F^{de rho} b_rho D_de
    {
        DiffOperator kg_over_m(rep.dim, field);
        GaussianRational inv_m(Rational(1) / mass);
        for (int al = 0; al < 4; ++al)
            kg_over_m.add_term(inv_m * g_upper(al), {CovD{al}, CovD{al}});
        DiffOperator lhs = commutator(kg_over_m, lambda_op(rep, field, mass));
        DiffOperator rhs(rep.dim, field);
        GaussianRational c = kI * GaussianRational(Rational(-2) * field->e_charge / mass);
        for (int de = 0; de < 4; ++de)
            for (int rho = 0; rho < 4; ++rho) {
                if (field->f_upper[de][rho].is_zero()) continue;
                rhs.add_term(c * g_upper(de), {rep.beta[rho], field->f_upper[de][rho], CovD{de}});
            }
        out.merge(operators_equal_on_basis("6.4a", "first commutator formula", lhs, rhs, basis));
    }

    // 6.4 second: [(ie/2m) S_{rho si} F^{rho si}, Lambda]
    //           = -(ie/m) F^{rho si} b_si D_rho - (e/2m) b_si b_rho b_de (d^rho F^{de si})
    {
        DiffOperator sf(rep.dim, field);
        GaussianRational c = kI * GaussianRational(field->e_charge / (Rational(2) * mass));
        for (int rho = 0; rho < 4; ++rho)
            for (int si = 0; si < 4; ++si) {
                if (field->f_upper[rho][si].is_zero()) continue;
                sf.add_term(c, {rep.s_lower(rho, si), field->f_upper[rho][si]});
            }
        DiffOperator lhs = commutator(sf, lambda_op(rep, field, mass));
        DiffOperator rhs(rep.dim, field);
        GaussianRational cf = -kI * GaussianRational(field->e_charge / mass);
        for (int rho = 0; rho < 4; ++rho)
            for (int si = 0; si < 4; ++si) {
                if (field->f_upper[rho][si].is_zero()) continue;
                rhs.add_term(cf * g_upper(rho), {rep.beta[si], field->f_upper[rho][si], CovD{rho}});
            }
        GaussianRational cd(-(field->e_charge / (Rational(2) * mass)));
        for (int si = 0; si < 4; ++si)
            for (int rho = 0; rho < 4; ++rho)
                for (int de = 0; de < 4; ++de) {
                    CoordPolynomial df = partial_upper(field->f_upper[de][si], rho);
                    if (df.is_zero()) continue;
                    rhs.add_term(cd, {rep.beta[si] * rep.beta[rho] * rep.beta[de], df});
                }
        out.merge(operators_equal_on_basis("6.4b", "second commutator formula", lhs, rhs, basis));
    }
    return out;
}

IdentityReport verify_spin0_f_contraction(const Representation& rep, const FieldPtr& field) {
    IdentityReport out{.id = "3.5-spin0",
                       .description = "derivative contraction vanishes on the spin-0 matrices"};
    PolyMatrix acc(rep.dim, rep.dim);
    for (int nu = 0; nu < 4; ++nu)
        for (int mu = 0; mu < 4; ++mu)
            for (int rho = 0; rho < 4; ++rho) {
                CoordPolynomial df = partial_upper(field->f_upper[mu][rho], nu);
                if (df.is_zero()) continue;
                CMatrix m = rep.beta[rho] * rep.beta[nu] * rep.beta[mu];
                if (mu == nu) m += rep.beta[rho].scaled(GaussianRational(metric(mu)));
                acc += scale_matrix(m, df);
            }
    out.record(acc.is_zero(), "contraction nonzero");
    return out;
}

IdentityReport verify_eq33_on_solutions(const Representation& rep, const FieldPtr& field,
                                        const Rational& mass,
                                        const std::vector<ExpSumWavefunction>& solutions,
                                        const TestBasis& basis) {
    IdentityReport out{.id = "3.3", .description = "first-order consequence relation"};
    GaussianRational c = kI * GaussianRational(field->e_charge / (Rational(2) * mass));
    for (std::size_t s = 0; s < solutions.size(); ++s) {
        const auto& psi = solutions[s];
        for (int nu = 0; nu < 4; ++nu) {
            DiffOperator lhs(rep.dim, field);
            lhs.add_term(g_upper(nu), {CovD{nu}});  // D_nu
            DiffOperator rhs(rep.dim, field);
            for (int rho = 0; rho < 4; ++rho)
                rhs.add_term(GaussianRational(1), {rep.beta[rho] * rep.beta[nu], CovD{rho}});
            for (int mu = 0; mu < 4; ++mu)
                for (int rho = 0; rho < 4; ++rho) {
                    if (field->f_upper[mu][rho].is_zero()) continue;
                    CMatrix m = rep.beta[rho] * rep.beta[nu] * rep.beta[mu];
                    if (mu == nu) m += rep.beta[rho].scaled(GaussianRational(metric(mu)));
                    rhs.add_term(c, {m, field->f_upper[mu][rho]});
                }
            ExpSumWavefunction diff = lhs.apply(psi) - rhs.apply(psi);
            out.record(diff.is_zero(), "relation fails on solution " + std::to_string(s) +
                                           " nu=" + std::to_string(nu));
        }
    }
    // covariant-derivative commutator [D^mu, D^rho] = i e F^{rho mu} on the basis
    for (int mu = 0; mu < 4; ++mu)
        for (int rho = 0; rho < 4; ++rho) {
            DiffOperator dmu(rep.dim, field), drho(rep.dim, field);
            dmu.add_term(GaussianRational(1), {CovD{mu}});
            drho.add_term(GaussianRational(1), {CovD{rho}});
            DiffOperator lhs = commutator(dmu, drho);
            DiffOperator rhs(rep.dim, field);
            if (!field->f_upper[rho][mu].is_zero())
                rhs.add_term(kI * GaussianRational(field->e_charge),
                             {field->f_upper[rho][mu]});
            out.merge(operators_equal_on_basis(
                "3.3", "[D^mu, D^rho] = ieF^{rho mu} (" + std::to_string(mu) + "," +
                       std::to_string(rho) + ")", lhs, rhs, basis));
        }
    return out;
}

}  // namespace kdp
