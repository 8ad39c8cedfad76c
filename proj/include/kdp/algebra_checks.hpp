#pragma once

// Matrix-level identity suite: exhaustive exact sweeps over index tuples.
// Every check reports rather than throws; a pass means the residual matrix is
// exactly zero.  Identity ids follow the toolkit's catalogue numbering.

#include <random>

#include "kdp/representation.hpp"

namespace kdp {

// defining trilinear algebra, all 64 index triples (id 1.2)
IdentityReport verify_trilinear(const Representation& rep);

// the stronger spin-0 relation plus its mechanical reduction to 1.2 (id 2.2)
IdentityReport verify_spin0_strong(const Representation& rep);

// omega = (i/4) eps bbbb and its properties (ids 2.3-2.7): zero for spin 0;
// for spin 1: omega^2 = 1 - beta_proj, {omega^2, b_mu} = b_mu,
// b_mu omega b_nu + b_nu omega b_mu = 0, b_mu b_nu omega + omega b_nu b_mu =
// g_{mu nu} omega
IdentityReport build_and_verify_omega(const Representation& rep);

// the spin-1 characterization plus its symmetrization back to 1.2 (id 2.8)
IdentityReport verify_spin1_characterization(const Representation& rep);

// spin operators: block form, commutation relation, xi identities and the
// cubic spin algebra (ids 4.5-4.10); requires the spin-1 structures
IdentityReport build_and_verify_spin_operators(const Representation& rep);

// [b_mu, S_{delta sigma}] = g_{mu delta} b_sigma - g_{mu sigma} b_delta
// (id 6.2; a pure matrix identity)
IdentityReport verify_spin_tensor_commutator(const Representation& rep);

// hermiticity convention and the adjoint metric (eta^2 = 1, eta b^dag eta = b)
IdentityReport verify_eta_properties(const Representation& rep);

// split idempotent: squares to itself, {beta_proj, b_mu} = b_mu, and for
// spin 1 equals 1 - omega^2 with (1 - omega^2)^2 = 1 - omega^2 (ids 2.1, 2.4)
IdentityReport verify_split_idempotent(const Representation& rep);

// second equality of the e^2 rewriting chain (id 3.7), a pure matrix identity
// in an antisymmetric rational F; any residual is reported, never patched
IdentityReport verify_e2_rewriting_matrix_part(const Representation& rep,
                                               const Matrix<Rational>& f_upper);

Matrix<Rational> random_antisymmetric_f(std::mt19937_64& rng);

// true when at least one suite in the detection battery flags the mutation
bool mutation_detected(const Representation& mutated);

}  // namespace kdp
