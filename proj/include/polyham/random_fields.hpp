#pragma once

#include <cstdint>

#include "polyham/domain.hpp"
#include "polyham/fields.hpp"

namespace polyham {

// Random band-limited field: independent complex Gaussian coefficients on
// all modes with |k_a| <= min(kmax, N_a/2 - 1), Hermitian-symmetrized so the
// synthesized field is real. Deterministic for a given seed.
GridField random_band_limited(const PeriodicDomain& domain, int m, int kmax, std::uint64_t seed,
                              bool mean_zero = false);

// Unstructured random jet (not the gradient of anything): i.i.d. standard
// normal entries.
JetField random_jet(const PeriodicDomain& domain, int m, std::uint64_t seed);

// Splitmix-style mix of a base seed and a stream index, so sweeps can give
// every item its own independent, schedule-independent stream.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t stream);

} // namespace polyham
