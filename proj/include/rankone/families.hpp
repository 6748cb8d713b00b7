#pragma once

#include <string>
#include <vector>

#include "rankone/groups.hpp"
#include "rankone/spectral_function.hpp"
#include "rankone/spherical.hpp"

namespace rankone::families {

/// Radial profiles with closed-form values and derivatives.

/// e^{-s t^2}, bounded by e^{25/(4s)} e^{-5t}.
RadialProfile gaussian(double s = 1.0);
/// (1 + t^2) e^{-s t^2}, rate 5 with a sampled constant.
RadialProfile poly_gaussian(double s = 1.0);
/// cosh(t)^{-k}, bounded by 2^k e^{-kt}. k = 2 rho + 1 by default.
RadialProfile sech_power(const GroupDatum& g, double k = 0.0);
/// Xi(t) (1 + t)^{-p}; only rate rho, so outside the transform's domain for
/// p <= 3. Used to probe the seminorms.
RadialProfile xi_weighted(const GroupDatum& g, double p);

/// The profiles used for transform-level checks.
std::vector<RadialProfile> test_profiles(const GroupDatum& g);
/// Lookup by name: gaussian, poly_gaussian, sech. Throws ValidationError.
RadialProfile profile_by_name(const GroupDatum& g, const std::string& name);
const std::vector<std::string>& profile_names();

/// Weyl-even entire symbols (decay order 8 with a fitted constant).
SpectralFunction symbol_by_name(const std::string& name, const std::vector<double>& grid);
/// gauss, lam2_gauss, wide_gauss, shifted_gauss, quartic.
const std::vector<std::string>& symbol_names();

/// Designed non-members of the image algebra.
SpectralFunction odd_symbol(const std::vector<double>& grid);       // lam e^{-lam^2}
SpectralFunction rational_symbol(const std::vector<double>& grid);  // 1 / (1 + lam^2)
SpectralFunction rough_symbol(const std::vector<double>& grid);     // (1 + |lam|) e^{-lam^2}

}  // namespace rankone::families
