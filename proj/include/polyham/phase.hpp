#pragma once

#include <cstddef>
#include <span>

#include "polyham/fields.hpp"

namespace polyham {

// Splitting of the m = n(p+1) phase components u = (x^j, p_i^a): components
// 0..n-1 are the positions, momentum (i,a) lives at n + i*p + a (i outer,
// a inner). The pairing metric G is the identity in this layout, so the
// G-scalar product is the plain Euclidean dot product.
class PhaseLayout {
  public:
    PhaseLayout(int n, int p);

    int n() const { return n_; }
    int times() const { return p_; }
    int m() const { return n_ * (p_ + 1); }

    int x_index(int j) const { return j; }
    int momentum_index(int i, int alpha) const { return n_ + i * p_ + alpha; }

    bool operator==(const PhaseLayout& other) const {
        return n_ == other.n_ && p_ == other.p_;
    }

  private:
    int n_;
    int p_;
};

// The polysymplectic operator applied to a phase-field jet: the x-block of
// the output is the momentum divergence sum_a d p_j^a / d t^a and the
// momentum block (i,b) is -d x^i / d t^b.
GridField apply_delta_J(const PhaseLayout& layout, const JetField& jet);

// (delta x J d/dt)^2 u, computed as the composition of apply_delta_J with
// the weak gradient applied twice. The x-block equals minus the Laplacian
// of x, the momentum block (i,b) equals -d^2 p_i^g / dt^b dt^g.
GridField operator_square(const PhaseLayout& layout, const GridField& u);

// integral of (delta x J du/dt, u) over T0 with the G pairing
double quadratic_form(const PhaseLayout& layout, const GridField& u);

struct PointwiseBoundReport {
    double max_ratio = 0.0;
    std::size_t evaluated = 0;
    std::size_t skipped = 0; // points with |g| below the 1e-14 guard
};

// max over grid points of |delta x J g|^2 / |g|^2; always <= p.
PointwiseBoundReport pointwise_bound_check(const PhaseLayout& layout, const JetField& jet);

namespace detail {

// Single-point application of delta x J to a jet value (m*p scalars, a
// inner). Shared by the grid operator and the per-mode operator, where the
// scalar type is complex.
template <class Scalar>
void apply_delta_j_point(const PhaseLayout& layout, std::span<const Scalar> jet,
                         std::span<Scalar> out) {
    const int n = layout.n();
    const int p = layout.times();
    for (int j = 0; j < n; ++j) {
        Scalar div{};
        for (int a = 0; a < p; ++a)
            div += jet[static_cast<std::size_t>(layout.momentum_index(j, a)) * p + a];
        out[layout.x_index(j)] = div;
    }
    for (int i = 0; i < n; ++i)
        for (int b = 0; b < p; ++b)
            out[layout.momentum_index(i, b)] =
                -jet[static_cast<std::size_t>(layout.x_index(i)) * p + b];
}

} // namespace detail

} // namespace polyham
