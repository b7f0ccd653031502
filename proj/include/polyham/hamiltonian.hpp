#pragma once

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "polyham/domain.hpp"
#include "polyham/fields.hpp"
#include "polyham/phase.hpp"

namespace polyham {

// Thrown when a theorem hypothesis cannot hold (e.g. the growth rate alpha
// falls outside the admissible window for the domain). Mapped to exit code 2
// by the CLI.
class HypothesisError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// H(t,u) with its gradient in u. The gradient is either analytic or the
// central finite difference of eval with step h = 1e-6 * (1 + |u|).
// Evaluation must be reentrant; specs are shared freely across threads.
struct HamiltonianSpec {
    using Eval = std::function<double(std::span<const double> t, std::span<const double> u)>;
    using Grad =
        std::function<void(std::span<const double> t, std::span<const double> u, std::span<double> out)>;

    PhaseLayout layout;
    std::string name;
    Eval eval;
    Grad grad; // empty -> finite differences

    double operator()(std::span<const double> t, std::span<const double> u) const {
        return eval(t, u);
    }
    void gradient(std::span<const double> t, std::span<const double> u,
                  std::span<double> out) const;

    // Gradient of H sampled at every grid point of u.
    GridField gradient_field(const PeriodicDomain& domain, const GridField& u) const;
};

// |grad - FD(eval)| <= tol * (1 + |grad|) on random probes.
struct GradientConsistency {
    bool passed = true;
    double max_rel_err = 0.0;
};
GradientConsistency check_gradient_consistency(const HamiltonianSpec& H,
                                               const PeriodicDomain& domain, int probes,
                                               std::uint64_t seed, double tol = 1e-4);

// Growth constants of the convex-Hamiltonian bounds: the admissible window
// for alpha is (0, pi / (sqrt(p) * max_i T^i)), validated at construction.
class GrowthConstants {
  public:
    GrowthConstants(double alpha, double beta, double gamma, double delta,
                    const PeriodicDomain& domain);

    static std::optional<GrowthConstants> try_make(double alpha, double beta, double gamma,
                                                   double delta, const PeriodicDomain& domain,
                                                   std::string* reason = nullptr);
    static double alpha_window_bound(const PeriodicDomain& domain);

    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    double gamma() const { return gamma_; }
    double delta() const { return delta_; }

  private:
    GrowthConstants(double a, double b, double g, double d)
        : alpha_(a), beta_(b), gamma_(g), delta_(d) {}
    double alpha_, beta_, gamma_, delta_;
};

// Deterministic low-discrepancy probe plan for the certification sweeps:
// K points (t,u) with t Halton-distributed over T0 and u over the ball
// |u| <= R.
struct SamplingPlan {
    double radius = 10.0;
    int count = 4096;
};

// Two-sided growth check  delta*|u| - beta <= H(t,u) <= (alpha/2)|u|^2 + gamma.
// Sampling is a falsifier, not a proof; margins are the worst observed.
struct GrowthCertificate {
    bool passed = false;
    double worst_upper_margin = 0.0; // min over samples of upper_bound - H
    double worst_lower_margin = 0.0; // min over samples of H - lower_bound
    std::vector<double> upper_witness_t, upper_witness_u;
    std::vector<double> lower_witness_t, lower_witness_u;
};
GrowthCertificate certify_growth(const HamiltonianSpec& H, const GrowthConstants& c,
                                 const PeriodicDomain& domain, const SamplingPlan& plan = {});

// Midpoint convexity plus the gradient inequality
// H(t,u) - H(t,0) <= (grad H(t,u), u).
struct ConvexityReport {
    bool passed = false;
    double worst_midpoint_violation = 0.0;
    double worst_gradient_violation = 0.0;
    std::vector<double> witness_t, witness_u;
};
ConvexityReport certify_convexity(const HamiltonianSpec& H, const PeriodicDomain& domain,
                                  const SamplingPlan& plan = {});

// ---------------------------------------------------------------------------
// Built-in Hamiltonian catalog
// ---------------------------------------------------------------------------

// Band-limited multiply periodic forcing
//   f(t) = sum_r cos(theta_r . t) a_r + sin(theta_r . t) b_r,
// theta_r . t = sum_a 2 pi k_a t^a / T^a. Amplitude vectors have m entries.
struct TrigMode {
    std::vector<int> k;
    std::vector<double> cos_amp;
    std::vector<double> sin_amp;
};

struct Forcing {
    std::vector<TrigMode> modes;

    bool empty() const { return modes.empty(); }
    void eval(std::span<const double> periods, std::span<const double> t,
              std::span<double> out) const;
    // Rigorous bound on sup_t |f(t)|: sum over modes of sqrt(|a|^2 + |b|^2).
    double sup_norm_bound() const;
    GridField sample(const PeriodicDomain& domain, int m) const;
    bool has_dc_mode() const;
};

struct ForcedQuadratic {
    double alpha_prime = 1.0;
    double c0 = 0.0;
    Forcing forcing;
};

HamiltonianSpec make_quadratic(const PhaseLayout& layout, double c);
HamiltonianSpec make_shifted_quadratic(const PhaseLayout& layout, double c, double c0);
HamiltonianSpec make_forced_quadratic(const PhaseLayout& layout, std::vector<double> periods,
                                      const ForcedQuadratic& fq);
// (c/2)|u|^2 + s * sum_i softplus(u_i) + (f(t),u) + c0 -- smooth, strictly
// convex, non-quadratic.
HamiltonianSpec make_softplus_convex(const PhaseLayout& layout, double c, double s, double c0,
                                     std::vector<double> periods = {}, Forcing forcing = {});

std::vector<std::string> builtin_hamiltonian_names();
HamiltonianSpec make_builtin_hamiltonian(const std::string& name, const PhaseLayout& layout,
                                         std::span<const double> periods,
                                         const nlohmann::json& params);
ForcedQuadratic parse_forced_quadratic(const nlohmann::json& params, int m);

// Constants certified analytically for the forced-quadratic family: alpha is
// placed halfway between alpha' and the window bound, gamma covers the
// forcing via the closed-form minimum of quadratic-minus-linear.
GrowthConstants construct_forced_quadratic_constants(const ForcedQuadratic& fq,
                                                     const PeriodicDomain& domain, double delta,
                                                     double slack = 1e-6);

// ---------------------------------------------------------------------------
// Lagrangians and the Legendre transform
// ---------------------------------------------------------------------------

// L(t, x, v) with v the n x p array of partial velocities (i outer, a inner).
struct LagrangianSpec {
    int n = 1;
    int p = 1;
    std::function<double(std::span<const double> t, std::span<const double> x,
                         std::span<const double> v)>
        eval;
    std::function<void(std::span<const double>, std::span<const double>, std::span<const double>,
                       std::span<double>)>
        grad_v; // empty -> finite differences
    std::function<void(std::span<const double>, std::span<const double>, std::span<const double>,
                       std::span<double>)>
        grad_x; // empty -> finite differences

    void gradient_v(std::span<const double> t, std::span<const double> x,
                    std::span<const double> v, std::span<double> out) const;
    void gradient_x(std::span<const double> t, std::span<const double> x,
                    std::span<const double> v, std::span<double> out) const;
};

class SingularLagrangianError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct LegendreResult {
    std::vector<double> velocity;  // v with dL/dv = p_target
    double hamiltonian_value = 0.0; // sum p.v - L
    int newton_iterations = 0;
};

// Solves dL/dv = p_target by Newton iteration (residual <= 1e-10, at most 50
// steps); exact in one step for quadratic L.
LegendreResult legendre_transform(const LagrangianSpec& L, std::span<const double> t,
                                  std::span<const double> x, std::span<const double> p_target);

} // namespace polyham
