#pragma once

#include <complex>
#include <span>
#include <stdexcept>

#include "polyham/action.hpp"
#include "polyham/fields.hpp"
#include "polyham/hamiltonian.hpp"
#include "polyham/phase.hpp"

namespace polyham {

// Thrown when a shifted mode matrix A_k + cI is (near) singular. On mode k
// the operator delta x J d/dt acts as A_k = i S(theta) with S real and
// antisymmetric, so A_k is Hermitian with eigenvalues {0, +|theta|, -|theta|}
// and the shift resonates at c = ±|theta| (and at c = 0 whenever A_k has a
// kernel). theta uses the weak_gradient convention, Nyquist zeroed.
class ResonanceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

namespace mode_operator {

// out = A_k in, with theta the p signed frequencies of the mode.
void apply(const PhaseLayout& layout, std::span<const double> theta,
           std::span<const std::complex<double>> in, std::span<std::complex<double>> out);

// Solves (A_k + c I) out = rhs in closed form via the block elimination
//   x = (c r_x - i sum_a theta_a r_{p,a}) / (c^2 - |theta|^2),
//   p^b = (r_{p,b} + i theta_b x) / c.
void solve_shifted(const PhaseLayout& layout, std::span<const double> theta, double c,
                   std::span<const std::complex<double>> rhs,
                   std::span<std::complex<double>> out);

// Smallest relative gap between c and the resonance set {0, |theta_k|} over
// all grid modes; used to vet splitting parameters.
double resonance_gap(const PeriodicDomain& domain, double c);

} // namespace mode_operator

struct SolveReport {
    GridField solution;
    double residual_l2 = 0.0; // recomputed through hamilton_residual
    int iterations = 0;
    bool converged = false;
    double mu_used = 0.0; // 0 for the direct spectral solve
};

// Exact per-mode solve of  delta x J du/dt + alpha' u + f(t) = 0  for the
// forced-quadratic family. Rejects alpha' <= 0 and resonant alpha'.
SolveReport solve_linear_spectral(const PeriodicDomain& domain, const PhaseLayout& layout,
                                  const ForcedQuadratic& fq);

struct IterativeParams {
    double mu = 0.0; // <= 0: choose from a curvature estimate of H
    double tol = 1e-8;
    int max_iter = 400;
};

// Semi-implicit spectral fixed point
//   u^{s+1} = (A + mu I)^{-1} (mu u^s - grad H(t, u^s))
// applied mode-wise. Divergence produces an honest report, not an exception.
SolveReport solve_convex_iterative(const PeriodicDomain& domain, const PhaseLayout& layout,
                                   const HamiltonianSpec& H, const IterativeParams& params = {});

} // namespace polyham
