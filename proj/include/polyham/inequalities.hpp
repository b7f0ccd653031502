#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "polyham/action.hpp"
#include "polyham/fields.hpp"
#include "polyham/hamiltonian.hpp"
#include "polyham/phase.hpp"

namespace polyham {

// Outcome of one inequality evaluation. The margin is oriented so that the
// theorem predicts margin >= 0; a check passes when
// margin >= -1e-9 * scale with scale = max(1, |lhs|, |rhs|).
struct InequalityReport {
    std::string name; // wirtinger | qform | bound4 | bound5 | eq6
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    double ratio = 0.0; // NaN when not meaningful
    bool pass = false;
    bool applicable = true; // bound5 with delta = 0 reports not-applicable
    nlohmann::json diagnostics;
};

nlohmann::json to_json(const InequalityReport& r);

// Theorem-level check of
//   int |u~|^2 <= (max_i T^i)^2 / (4 pi^2) int |du/dt|^2
// after removing the mean (the removed mean is recorded in diagnostics).
InequalityReport wirtinger_check(const GridField& u);

// Theorem-level check of
//   int (delta x J du/dt, u) >= -(sqrt(p) max_i T^i / 2 pi) int |du/dt|^2.
InequalityReport qform_check(const PhaseLayout& layout, const GridField& u);

struct Thm4Options {
    SamplingPlan sampling;
    double residual_tol = 1e-6;
};

// Bounds satisfied by periodic solutions of the Hamilton equations under
// certified convexity and growth hypotheses. When a hypothesis fails the
// result carries a rejection reason and no inequality verdict.
struct Thm4Result {
    bool hypotheses_ok = false;
    std::string rejection;
    nlohmann::json diagnostics;
    InequalityReport bound4; // int |du/dt|^2 <= 2 pi a (b+g) vol / (pi - a maxT sqrt(p))
    InequalityReport bound5; // int |u|     <= pi vol (b+g) / (d (pi - a maxT sqrt(p)))
    InequalityReport eq6;    // int (1/2a)|dJ du/dt|^2 <= int (-dJ du/dt, u) + (b+g) vol
};

Thm4Result thm4_check(const ActionProblem& P, const GridField& u, const GrowthConstants& c,
                      const Thm4Options& options = {});

// RHS of bound (4) as a function of the constants; strictly increasing in
// alpha over the admissible window.
double bound4_rhs(const PeriodicDomain& domain, double alpha, double beta, double gamma);

} // namespace polyham
