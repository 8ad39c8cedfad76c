#pragma once

// Formal matrix-valued differential operators: sums of products of constant
// matrices, covariant derivatives D^mu = i d^mu - e A^mu, and polynomial
// field multipliers.  Application to an exponential-sum wave function is
// exact and linear; operator identities are checked by exhaustive
// application to a finite polynomial test basis.

#include <variant>
#include <vector>

#include "kdp/expsum.hpp"
#include "kdp/fields.hpp"
#include "kdp/representation.hpp"

namespace kdp {

struct CovD {
    int mu;
};

using OpFactor = std::variant<CMatrix, CovD, CoordPolynomial>;

struct OpTerm {
    GaussianRational coeff;
    std::vector<OpFactor> factors;  // applied right to left
};

class DiffOperator {
public:
    DiffOperator() = default;
    DiffOperator(int dim, FieldPtr field) : dim_(dim), field_(std::move(field)) {}

    [[nodiscard]] int dim() const noexcept { return dim_; }
    [[nodiscard]] const FieldPtr& field() const noexcept { return field_; }
    [[nodiscard]] const std::vector<OpTerm>& terms() const noexcept { return terms_; }

    void add_term(GaussianRational coeff, std::vector<OpFactor> factors);
    void add_identity(GaussianRational coeff) { add_term(std::move(coeff), {}); }

    [[nodiscard]] ExpSumWavefunction apply(const ExpSumWavefunction& psi) const;

    friend DiffOperator operator+(const DiffOperator& a, const DiffOperator& b);
    friend DiffOperator operator-(const DiffOperator& a, const DiffOperator& b);
    // composition: (a * b)(psi) = a(b(psi))
    friend DiffOperator operator*(const DiffOperator& a, const DiffOperator& b);
    [[nodiscard]] DiffOperator scaled(const GaussianRational& s) const;

private:
    int dim_ = 0;
    FieldPtr field_;
    std::vector<OpTerm> terms_;
};

inline DiffOperator commutator(const DiffOperator& a, const DiffOperator& b) {
    return a * b - b * a;
}

// polynomial test functions: every unit component times every monomial of
// total degree <= degree (zero momentum)
struct TestBasis {
    int dim = 0;
    int degree = 0;
    std::vector<ExpSumWavefunction> elements;
};
TestBasis make_test_basis(int dim, int degree);
TestBasis make_test_basis(int dim, int degree, const std::vector<int>& components);

// ---- operator builders -----------------------------------------------------

// first-order wave operator: b_mu D^mu + m
DiffOperator lambda_op(const Representation& rep, const FieldPtr& field, const Rational& mass);

// D^alpha D_alpha - m^2 (the second-order scalar part)
DiffOperator kg_op(int dim, const FieldPtr& field, const Rational& mass);

// evolution form; the field-strength summand is exposed separately
struct HamiltonParts {
    DiffOperator full;
    DiffOperator troublesome;
    DiffOperator without_troublesome;
};
HamiltonParts hamilton_op(const Representation& rep, const FieldPtr& field, const Rational& mass);

// constraint rows: b_i b_0^2 D^i + m (1 - b_0^2); construction also checks
// the matrix identity (1 - b_0^2) b_i = b_i b_0^2 exactly
DiffOperator constraint_op(const Representation& rep, const FieldPtr& field, const Rational& mass);

// how the derivative in the strength-tensor contraction acts
enum class FDerivMode { on_product, on_field_only };

// second-order wave operator
DiffOperator omega1_op(const Representation& rep, const FieldPtr& field, const Rational& mass,
                       FDerivMode mode = FDerivMode::on_product);

// left factor of the second-order equation
DiffOperator d1_op(const Representation& rep, const FieldPtr& field, const Rational& mass);

// left factor of the third-order equation (commutes with lambda)
DiffOperator d2_op(const Representation& rep, const FieldPtr& field, const Rational& mass);

// ---- verification sweeps ---------------------------------------------------

IdentityReport operators_equal_on_basis(const std::string& id, const std::string& what,
                                        const DiffOperator& a, const DiffOperator& b,
                                        const TestBasis& basis);
IdentityReport operator_zero_on_basis(const std::string& id, const std::string& what,
                                      const DiffOperator& a, const TestBasis& basis);

// d1(d) Lambda(d) = -(box + m^2) in the free case (id 5.6)
IdentityReport verify_free_factorization(const Representation& rep, const Rational& mass,
                                         int degree);

// d1 Lambda = Omega_1 in external fields (id 5.4)
IdentityReport verify_factorization(const Representation& rep, const FieldPtr& field,
                                    const Rational& mass, const TestBasis& basis);

// [d1, Lambda] equals its printed closed form (id 5.7)
IdentityReport verify_commutator_57(const Representation& rep, const FieldPtr& field,
                                    const Rational& mass, const TestBasis& basis);

// the shifted pair: d1' Lambda = Omega_1' and Omega_1' != Omega_1 for
// nonzero F (id 5.9)
IdentityReport verify_equation_class(const Representation& rep, const FieldPtr& field,
                                     const Rational& mass, const TestBasis& basis);

// [d2, Lambda] = 0 (id 6.1)
IdentityReport verify_third_order_commutes(const Representation& rep, const FieldPtr& field,
                                           const Rational& mass, const TestBasis& basis);

// d2 Lambda matches the printed third-order wave operator (id 6.6)
IdentityReport verify_third_order_product(const Representation& rep, const FieldPtr& field,
                                          const Rational& mass, const TestBasis& basis);

// contraction identities for source-free strength tensors (ids 6.2-6.4)
IdentityReport verify_aux_identities_6(const Representation& rep, const FieldPtr& field,
                                       const Rational& mass, const TestBasis& basis);

// spin-0 vanishing of the derivative contraction (the strong-relation
// consequence): (b_rho b_nu b_mu + b_rho g_{mu nu}) d^nu F^{mu rho} = 0
IdentityReport verify_spin0_f_contraction(const Representation& rep, const FieldPtr& field);

// first-order consequence relation on solutions plus the covariant-derivative
// commutator on a test basis (id 3.3)
IdentityReport verify_eq33_on_solutions(const Representation& rep, const FieldPtr& field,
                                        const Rational& mass,
                                        const std::vector<ExpSumWavefunction>& solutions,
                                        const TestBasis& basis);

}  // namespace kdp
