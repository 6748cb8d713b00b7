#pragma once

#include <functional>
#include <vector>

#include "rankone/specfun.hpp"

namespace rankone {

/// Decay and regularity metadata of a function on the spectral axis:
/// |a(lam)| <= c (1 + |lam|)^{-order}, and a extends holomorphically to the
/// strip |Im lam| < strip (infinity for entire symbols, 0 when unknown).
struct SymbolDecay {
  double c = 1.0;
  double order = 0.0;
  double strip = 0.0;
};

/// A function on the real spectral axis, sampled on a strictly increasing
/// grid. Between samples it is evaluated by 8-point local Lagrange
/// interpolation (degree 7, stencil centered on the enclosing cell and
/// shifted inward at the ends); outside the grid it is taken to vanish.
/// A function built from a closed form keeps that form and evaluates it
/// directly instead of interpolating.
class SpectralFunction {
 public:
  static constexpr int kStencil = 8;

  SpectralFunction() = default;
  SpectralFunction(std::vector<double> grid, std::vector<cplx> values, SymbolDecay decay);

  /// Samples `exact` on the grid and keeps it for off-grid evaluation.
  static SpectralFunction from_function(std::vector<double> grid,
                                        std::function<cplx(double)> exact,
                                        SymbolDecay decay);

  const std::vector<double>& grid() const { return grid_; }
  const std::vector<cplx>& values() const { return values_; }
  const SymbolDecay& decay() const { return decay_; }
  bool has_exact() const { return static_cast<bool>(exact_); }
  const std::function<cplx(double)>& exact() const { return exact_; }

  cplx operator()(double lam) const;
  cplx interpolate(double lam) const;

  /// lam in grid <=> -lam in grid (to `tol`).
  bool symmetric(double tol = 1e-12) const;
  /// max_j |a(lam_j) - a(-lam_j)| / 2 over a symmetric grid.
  double odd_part() const;

 private:
  std::vector<double> grid_;
  std::vector<cplx> values_;
  SymbolDecay decay_;
  std::function<cplx(double)> exact_;
};

/// Smallest c (with a 1% margin) such that |a(lam)| <= c (1+|lam|)^{-order},
/// by sampling lam in [0, lam_max] at spacing 1/64.
double fit_symbol_constant(const std::function<cplx(double)>& a, double order,
                           double lam_max = 60.0);

/// count equispaced points on [lo, hi].
std::vector<double> linear_grid(double lo, double hi, int count);

/// Spectral grid on [-max, max] with an odd number of samples (0 included).
/// Throws ValidationError for an even count.
std::vector<double> symmetric_grid(double max, int count);

}  // namespace rankone
