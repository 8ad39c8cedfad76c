#include "doctest.h"

#include "kdp/algebra_checks.hpp"

using namespace kdp;

TEST_CASE("representations build with validated structure") {
    const Representation& r0 = representation(0);
    const Representation& r1 = representation(1);
    CHECK(r0.dim == 5);
    CHECK(r1.dim == 10);
    // entries restricted to {0, +-1, +-i}
    for (const Representation* r : {&r0, &r1})
        for (int mu = 0; mu < 4; ++mu)
            for (int i = 0; i < r->dim; ++i)
                for (int j = 0; j < r->dim; ++j) {
                    const GaussianRational& v = r->beta[mu].at(i, j);
                    CHECK((v.is_zero() || v.norm2() == Rational(1)));
                }
}

TEST_CASE("trilinear algebra passes exhaustively, including the trivial representation") {
    for (int spin : {0, 1}) {
        IdentityReport rep = verify_trilinear(representation(spin));
        CHECK(rep.pass);
        CHECK(rep.cases_checked == 64);
    }
    CHECK(verify_trilinear(trivial_representation(4)).pass);
}

TEST_CASE("beta_0^3 = beta_0 as the symmetric special case") {
    for (int spin : {0, 1}) {
        const Representation& r = representation(spin);
        CHECK(r.beta[0] * r.beta[0] * r.beta[0] == r.beta[0]);
    }
}

TEST_CASE("strong relation characterizes spin 0") {
    CHECK(verify_spin0_strong(representation(0)).pass);
    IdentityReport wrong = verify_spin0_strong(representation(1));
    CHECK(!wrong.pass);  // fails for some triple on the spin-1 matrices
}

TEST_CASE("omega: zero for spin 0, full property set for spin 1") {
    CHECK(build_and_verify_omega(representation(0)).pass);
    CHECK(representation(0).omega.is_zero());

    const Representation& r1 = representation(1);
    IdentityReport rep = build_and_verify_omega(r1);
    CHECK(rep.pass);
    // spot check: b_1 omega b_2 + b_2 omega b_1 = 0
    CHECK((r1.beta[1] * r1.omega * r1.beta[2] + r1.beta[2] * r1.omega * r1.beta[1]).is_zero());
    CHECK(!r1.omega.is_zero());
}

TEST_CASE("omega relation characterizes spin 1") {
    CHECK(verify_spin1_characterization(representation(1)).pass);
    IdentityReport wrong = verify_spin1_characterization(representation(0));
    CHECK(!wrong.pass);  // omega = 0 collapses the right-hand side
}

TEST_CASE("spin operators: blocks, commutators, xi, cubic algebra") {
    const Representation& r1 = representation(1);
    IdentityReport rep = build_and_verify_spin_operators(r1);
    CHECK(rep.pass);

    // [S_1, S_2] = i S_3
    CMatrix comm = r1.spin_ops[0] * r1.spin_ops[1] - r1.spin_ops[1] * r1.spin_ops[0];
    CHECK(comm == r1.spin_ops[2].scaled(GaussianRational::unit_i()));

    // T_3 has exact eigenvectors (1, i, 0), (1, -i, 0), (0, 0, 1) with
    // eigenvalues +1, -1, 0
    const CMatrix& t3 = r1.t_blocks[2];
    CMatrix vp(3, 1), vm(3, 1), v0(3, 1);
    vp.at(0, 0) = GaussianRational(1); vp.at(1, 0) = GaussianRational::unit_i();
    vm.at(0, 0) = GaussianRational(1); vm.at(1, 0) = -GaussianRational::unit_i();
    v0.at(2, 0) = GaussianRational(1);
    CHECK(t3 * vp == vp);
    CHECK(t3 * vm == -vm);
    CHECK((t3 * v0).is_zero());

    // cubic-algebra specialization: S_1 S_1 S_2 + S_2 S_1 S_1 = S_2
    CHECK(r1.spin_ops[0] * r1.spin_ops[0] * r1.spin_ops[1] +
              r1.spin_ops[1] * r1.spin_ops[0] * r1.spin_ops[0] ==
          r1.spin_ops[1]);

    CHECK_THROWS_AS(build_and_verify_spin_operators(representation(0)), std::invalid_argument);
}

TEST_CASE("spin-tensor commutator identity holds for both spins") {
    for (int spin : {0, 1}) {
        IdentityReport rep = verify_spin_tensor_commutator(representation(spin));
        CHECK(rep.pass);
        CHECK(rep.cases_checked == 64);
    }
    // index specialization with vanishing metric factors: [b_0, S_{12}] = 0
    const Representation& r = representation(1);
    CMatrix s12 = r.s_lower(1, 2);
    CHECK((r.beta[0] * s12 - s12 * r.beta[0]).is_zero());
}

TEST_CASE("adjoint metric and split idempotent") {
    for (int spin : {0, 1}) {
        CHECK(verify_eta_properties(representation(spin)).pass);
        CHECK(verify_split_idempotent(representation(spin)).pass);
    }
    // spin-0: the idempotent annihilates the physical scalar slot
    const Representation& r0 = representation(0);
    for (int r = 0; r < 5; ++r) CHECK(r0.beta_proj.at(r, 4).is_zero());
}

TEST_CASE("e^2 rewriting matrix identity") {
    for (int spin : {0, 1}) {
        const Representation& rep = representation(spin);

        Matrix<Rational> zero(4, 4);
        CHECK(verify_e2_rewriting_matrix_part(rep, zero).pass);

        // uniform B_z: F^{12} = -F^{21} = 1
        Matrix<Rational> fb(4, 4);
        fb.at(1, 2) = Rational(1);
        fb.at(2, 1) = Rational(-1);
        IdentityReport uni = verify_e2_rewriting_matrix_part(rep, fb);
        INFO("uniform-B verdict spin ", spin, ": ",
             (uni.failures.empty() ? std::string("pass") : uni.failures[0]));
        CHECK(uni.pass);

        // randomized sweep: verdicts must be consistent across samples
        std::mt19937_64 rng(2024);
        bool first = true, verdict = true;
        for (int s = 0; s < 5; ++s) {
            bool v = verify_e2_rewriting_matrix_part(rep, random_antisymmetric_f(rng)).pass;
            if (first) { verdict = v; first = false; }
            CHECK(v == verdict);
        }
        CHECK(verdict);

        Matrix<Rational> bad(4, 4);
        bad.at(0, 1) = Rational(1);  // not antisymmetric
        CHECK_THROWS_AS(verify_e2_rewriting_matrix_part(rep, bad), std::invalid_argument);
    }
}

TEST_CASE("single-entry mutations are detected") {
    for (int spin : {0, 1}) {
        const Representation& r = representation(spin);
        // flip one entry of beta_0 -> at least one suite fails
        Representation bad = with_mutated_entry(r, 0, 0, r.dim - 1, GaussianRational(1));
        CHECK(mutation_detected(bad));
        // and an imaginary-unit bump on a spatial matrix
        Representation bad2 = with_mutated_entry(r, 2, 1, 1, GaussianRational::unit_i());
        CHECK(mutation_detected(bad2));
        // the unmutated representation is clean
        CHECK(!mutation_detected(r));
    }
}
