#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace polyham {

// Uniform grid on the period parallelepiped [0,T^1) x ... x [0,T^p).
// Sample j along axis a sits at t^a_j = j * T^a / N^a with the right endpoint
// excluded, so the periodic identification u|_{S+} = u|_{S-} is built into
// the representation instead of being a numerical constraint.
//
// Resolutions must be even so the Nyquist mode of each axis is a single
// unambiguous bin.
class PeriodicDomain {
  public:
    PeriodicDomain(std::vector<double> periods, std::vector<int> resolution);

    int times() const { return static_cast<int>(periods_.size()); }
    const std::vector<double>& periods() const { return periods_; }
    const std::vector<int>& resolution() const { return resolution_; }

    double max_period() const { return max_period_; }
    double volume() const { return volume_; }
    double cell_volume() const { return cell_volume_; }
    std::size_t num_points() const { return num_points_; }

    // Coordinates of the grid point with the given row-major flat index
    // (axis 0 slowest). t must have size p.
    void point(std::size_t flat, std::span<double> t) const;

    bool operator==(const PeriodicDomain& other) const {
        return periods_ == other.periods_ && resolution_ == other.resolution_;
    }

  private:
    std::vector<double> periods_;
    std::vector<int> resolution_;
    double max_period_ = 0.0;
    double volume_ = 1.0;
    double cell_volume_ = 1.0;
    std::size_t num_points_ = 1;
};

namespace detail {

// Row-major multi-index increment; returns false once the index wraps past
// the last point.
bool next_multi_index(std::span<int> idx, std::span<const int> dims);

} // namespace detail

} // namespace polyham
