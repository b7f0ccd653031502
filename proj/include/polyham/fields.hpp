#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "polyham/domain.hpp"

namespace polyham {

// Multiply periodic map T0 -> R^m sampled on the domain grid.
// Storage is row-major over the grid axes with the m components innermost.
// Fields are immutable values; every operation returns a new field.
class GridField {
  public:
    GridField(PeriodicDomain domain, int m);
    GridField(PeriodicDomain domain, int m, std::vector<double> values);

    // Samples fn(t, out) at every grid point; out has m slots.
    static GridField from_function(
        const PeriodicDomain& domain, int m,
        const std::function<void(std::span<const double>, std::span<double>)>& fn);

    const PeriodicDomain& domain() const { return domain_; }
    int components() const { return m_; }
    std::span<const double> values() const { return values_; }

    double value(std::size_t point, int c) const { return values_[point * m_ + c]; }
    std::span<const double> point_values(std::size_t point) const {
        return {values_.data() + point * m_, static_cast<std::size_t>(m_)};
    }

  private:
    PeriodicDomain domain_;
    int m_;
    std::vector<double> values_;
};

// Fourier coefficients of the trigonometric interpolant of a grid field,
// stored densely in standard FFT bin order per axis (bin j along an axis of
// resolution N represents the signed frequency k = j for j < N/2 and
// k = j - N otherwise; bin N/2 is the Nyquist mode). Components innermost.
class SpectralField {
  public:
    SpectralField(PeriodicDomain domain, int m, bool real_valued,
                  std::vector<std::complex<double>> coeffs);

    const PeriodicDomain& domain() const { return domain_; }
    int components() const { return m_; }
    bool real_valued() const { return real_valued_; }
    std::span<const std::complex<double>> coeffs() const { return coeffs_; }

    // Coefficient for a signed multi-index with |k_a| <= N_a/2. The two
    // labels +N/2 and -N/2 of the Nyquist mode address the same bin.
    std::complex<double> coeff(std::span<const int> k, int c) const;

    // Flat bin index for a signed multi-index (component not included).
    static std::size_t bin_index(const PeriodicDomain& domain, std::span<const int> k);

  private:
    PeriodicDomain domain_;
    int m_;
    bool real_valued_;
    std::vector<std::complex<double>> coeffs_;
};

// Per-point gradient values d u^c / d t^a, stored row-major over the grid
// with c outer and the direction a innermost.
class JetField {
  public:
    JetField(PeriodicDomain domain, int m);
    JetField(PeriodicDomain domain, int m, std::vector<double> values);

    const PeriodicDomain& domain() const { return domain_; }
    int components() const { return m_; }
    std::span<const double> values() const { return values_; }

    double value(std::size_t point, int c, int axis) const {
        return values_[(point * m_ + c) * domain_.times() + axis];
    }
    std::span<const double> point_values(std::size_t point) const {
        const std::size_t mp = static_cast<std::size_t>(m_) * domain_.times();
        return {values_.data() + point * mp, mp};
    }

  private:
    PeriodicDomain domain_;
    int m_;
    std::vector<double> values_;
};

// Analysis / synthesis between grid samples and interpolant coefficients.
// dft of a constant field puts the constant into the k = 0 bin.
SpectralField dft(const GridField& f);
GridField idft(const SpectralField& F);

// Periodic rectangle rule (= trapezoid on a periodic grid): spectrally exact
// for band-limited integrands. Returns one value per component.
std::vector<double> integrate(const GridField& f);

// Spectral weak gradient: mode k, axis a multiplied by i*2*pi*k_a/T^a.
// The Nyquist bin of each axis is annihilated (its centered derivative has
// no representative on the grid).
JetField weak_gradient(const GridField& f);

double l2_inner(const GridField& u, const GridField& v);
double l2_norm(const GridField& u);

// <u,v> + sum_a <du/dt^a, dv/dt^a>
double h1_inner(const GridField& u, const GridField& v);
double h1_norm(const GridField& u);

// u minus its componentwise mean; the weak gradient is unchanged.
GridField mean_zero_project(const GridField& u);

// integral of |du/dt|^2 contracted over components and directions
double jet_l2_norm_sq(const JetField& g);

// out_c = sum_a d g[c,a] / d t^a, computed spectrally.
GridField jet_divergence(const JetField& g);

// Pointwise arithmetic helpers.
GridField add(const GridField& a, const GridField& b);
GridField subtract(const GridField& a, const GridField& b);
GridField scale(const GridField& a, double s);
double linf_distance(const GridField& a, const GridField& b);
double l2_distance(const GridField& a, const GridField& b);

namespace detail {

// Signed angular frequency table for one axis in FFT bin order:
// theta[j] = 2*pi*k(j)/T with the Nyquist entry zeroed, matching the
// weak_gradient convention. Solvers must use the same table so their mode
// operators are the exact Fourier symbols of the discrete grid operators.
std::vector<double> axis_theta(const PeriodicDomain& domain, int axis);

} // namespace detail

} // namespace polyham
