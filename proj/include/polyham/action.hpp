#pragma once

#include "polyham/domain.hpp"
#include "polyham/fields.hpp"
#include "polyham/hamiltonian.hpp"
#include "polyham/phase.hpp"

namespace polyham {

struct ActionProblem {
    PeriodicDomain domain;
    PhaseLayout layout;
    HamiltonianSpec H;

    ActionProblem(PeriodicDomain d, PhaseLayout l, HamiltonianSpec h);
};

// Psi(u) = integral of -1/2 (delta x J du/dt, u)_G - H(t,u) over T0.
double action_value(const ActionProblem& P, const GridField& u);

struct ResidualReport {
    GridField field;
    double l2_norm = 0.0;
};

// r = delta x J du/dt + grad H(t,u), evaluated pointwise.
ResidualReport hamilton_residual(const ActionProblem& P, const GridField& u);

// Discrete L2 gradient of action_value. Sign convention: residual
// r = delta x J du/dt + grad H, gradient g = -r. The skew term enters as two
// halves computed along independent routes (forward operator and its formal
// adjoint), which collapse exactly like the first-variation computation.
GridField action_gradient(const ActionProblem& P, const GridField& u);

} // namespace polyham
