#include "rankone/spectral_function.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rankone/errors.hpp"

namespace rankone {

SpectralFunction::SpectralFunction(std::vector<double> grid, std::vector<cplx> values,
                                   SymbolDecay decay)
    : grid_(std::move(grid)), values_(std::move(values)), decay_(decay) {
  if (grid_.size() != values_.size())
    throw ValidationError("transform", "SpectralFunction", "grid and values differ in length");
  if (grid_.size() < static_cast<std::size_t>(kStencil))
    throw ValidationError("transform", "SpectralFunction",
                          "need at least " + std::to_string(kStencil) + " samples");
  for (std::size_t i = 1; i < grid_.size(); ++i)
    if (!(grid_[i] > grid_[i - 1]))
      throw ValidationError("transform", "SpectralFunction", "grid must be strictly increasing");
}

SpectralFunction SpectralFunction::from_function(std::vector<double> grid,
                                                 std::function<cplx(double)> exact,
                                                 SymbolDecay decay) {
  std::vector<cplx> values(grid.size());
  std::transform(grid.begin(), grid.end(), values.begin(), exact);
  SpectralFunction out(std::move(grid), std::move(values), decay);
  out.exact_ = std::move(exact);
  return out;
}

cplx SpectralFunction::operator()(double lam) const {
  if (exact_) return exact_(lam);
  return interpolate(lam);
}

cplx SpectralFunction::interpolate(double lam) const {
  if (lam < grid_.front() || lam > grid_.back()) return 0.0;
  const auto n = static_cast<std::ptrdiff_t>(grid_.size());
  auto it = std::upper_bound(grid_.begin(), grid_.end(), lam);
  std::ptrdiff_t cell = std::distance(grid_.begin(), it) - 1;
  cell = std::clamp<std::ptrdiff_t>(cell, 0, n - 2);
  if (lam == grid_[cell]) return values_[cell];
  if (lam == grid_[cell + 1]) return values_[cell + 1];
  const std::ptrdiff_t start = std::clamp<std::ptrdiff_t>(cell - kStencil / 2 + 1, 0, n - kStencil);
  cplx acc = 0.0;
  for (std::ptrdiff_t i = start; i < start + kStencil; ++i) {
    double w = 1.0;
    for (std::ptrdiff_t j = start; j < start + kStencil; ++j)
      if (j != i) w *= (lam - grid_[j]) / (grid_[i] - grid_[j]);
    acc += w * values_[i];
  }
  return acc;
}

bool SpectralFunction::symmetric(double tol) const {
  const std::size_t n = grid_.size();
  for (std::size_t i = 0; i < n; ++i)
    if (std::abs(grid_[i] + grid_[n - 1 - i]) > tol * (1.0 + std::abs(grid_[i]))) return false;
  return true;
}

double SpectralFunction::odd_part() const {
  if (!symmetric())
    throw PreconditionError("transform", "odd_part", "grid is not symmetric about 0");
  const std::size_t n = grid_.size();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    worst = std::max(worst, 0.5 * std::abs(values_[i] - values_[n - 1 - i]));
  return worst;
}

double fit_symbol_constant(const std::function<cplx(double)>& a, double order, double lam_max) {
  double sup = 0.0;
  const int n = static_cast<int>(lam_max * 64.0);
  for (int i = 0; i <= n; ++i) {
    const double lam = i / 64.0;
    const double w = std::pow(1.0 + lam, order);
    sup = std::max({sup, std::abs(a(lam)) * w, std::abs(a(-lam)) * w});
  }
  return 1.01 * sup;
}

std::vector<double> linear_grid(double lo, double hi, int count) {
  if (count < 2 || !(lo < hi))
    throw ValidationError("transform", "grid", "need count >= 2 and lo < hi");
  std::vector<double> g(count);
  for (int i = 0; i < count; ++i) g[i] = lo + (hi - lo) * static_cast<double>(i) / (count - 1);
  g.back() = hi;
  return g;
}

std::vector<double> symmetric_grid(double max, int count) {
  if (count % 2 == 0)
    throw ValidationError("transform", "grid", "spectral grid count must be odd");
  auto g = linear_grid(-max, max, count);
  // Exact mirror symmetry and an exact zero.
  const int n = count;
  for (int i = 0; i < n / 2; ++i) g[n - 1 - i] = -g[i];
  g[n / 2] = 0.0;
  return g;
}

}  // namespace rankone
