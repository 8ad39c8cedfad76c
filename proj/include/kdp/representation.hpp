#pragma once

// The two nontrivial matrix representations of the trilinear wave-equation
// algebra: 5x5 (spin 0) and 10x10 (spin 1), with the companion matrices used
// throughout: the split idempotent, omega, the spin operators, xi and the
// adjoint metric eta.  Entries are exact and pinned by structural checks at
// construction time, not by transcription.

#include <array>
#include <string>
#include <vector>

#include "kdp/matrix.hpp"

namespace kdp {

// diag(1,-1,-1,-1)
inline Rational metric(int mu) { return mu == 0 ? Rational(1) : Rational(-1); }

inline int levi_civita3(int i, int j, int k) {
    if (i == j || j == k || i == k) return 0;
    bool even = (i == 0 && j == 1 && k == 2) || (i == 1 && j == 2 && k == 0) ||
                (i == 2 && j == 0 && k == 1);
    return even ? 1 : -1;
}

struct IdentityReport {
    std::string id;
    std::string description;
    bool pass = true;
    long cases_checked = 0;
    std::vector<std::string> failures;

    void record(bool ok, const std::string& context) {
        ++cases_checked;
        if (!ok) {
            pass = false;
            if (failures.size() < 16) failures.push_back(context);
        }
    }
    void merge(const IdentityReport& other) {
        cases_checked += other.cases_checked;
        if (!other.pass) {
            pass = false;
            for (const auto& f : other.failures)
                if (failures.size() < 16) failures.push_back(f);
        }
    }
};

struct Representation {
    int spin = 0;
    int dim = 0;
    std::array<CMatrix, 4> beta;       // lowered index
    CMatrix beta_proj;                 // idempotent with {beta_proj, beta_mu} = beta_mu
    CMatrix omega;                     // (i/4) eps^{mu nu sigma delta} b b b b
    std::array<CMatrix, 3> spin_ops;   // S_k
    std::array<CMatrix, 3> t_blocks;   // 3-dim adjoint blocks (spin 1)
    CMatrix xi;                        // spin 1 only
    CMatrix eta;                       // 2 beta_0^2 - 1

    [[nodiscard]] CMatrix beta_upper(int mu) const {
        return metric(mu) == Rational(1) ? beta[mu] : -beta[mu];
    }
    [[nodiscard]] CMatrix s_lower(int nu, int mu) const {
        return beta[nu] * beta[mu] - beta[mu] * beta[nu];
    }
    // component indices (0-based) surviving beta_0^2
    [[nodiscard]] std::vector<int> physical_components() const {
        return spin == 0 ? std::vector<int>{3, 4} : std::vector<int>{0, 1, 2, 6, 7, 8};
    }
    [[nodiscard]] int scalar_component() const { return 4; }  // spin-0 physical slot
};

// Constructs and validates; throws std::logic_error when any structural
// equation fails (a coding error, not a runtime condition).
Representation build_representation(int spin);

// Cached immutable instance.
const Representation& representation(int spin);

// All-zero matrices of the given dimension; the degenerate solution of the
// algebra, kept available for exercising the verifier.
Representation trivial_representation(int dim);

// Copy with a single entry of beta[mu] shifted by delta (fault injection).
Representation with_mutated_entry(const Representation& rep, int mu, int row, int col,
                                  const GaussianRational& delta);

}  // namespace kdp
