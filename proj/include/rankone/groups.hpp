#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace rankone {

/// Structural data of a rank-one group G with maximal compact K.
///
/// The radial Haar weight is Delta(t) = (2 sinh t)^m_alpha (2 sinh 2t)^m_2alpha,
/// which coincides with the Jacobi weight (2 sinh t)^(2a+1) (2 cosh t)^(2b+1)
/// for a = jacobi_alpha, b = jacobi_beta. With this identification the group
/// radial coordinate and the Jacobi-function coordinate agree (no rescaling).
struct GroupDatum {
  std::string name;
  int m_alpha = 0;
  int m_2alpha = 0;
  double rho = 0.0;
  double jacobi_alpha = 0.0;
  double jacobi_beta = 0.0;
  double plancherel_constant = 1.0;
  int weyl_order = 2;

  friend bool operator==(const GroupDatum&, const GroupDatum&) = default;
};

namespace groups {

/// Names accepted by preset(), in listing order.
const std::vector<std::string>& preset_names();

/// Root data for `name` with plancherel_constant = 1 (not calibrated). This is
/// the input to transform::calibrate.
GroupDatum structural(std::string_view name);

/// Fully populated preset: structural data plus the calibrated Plancherel
/// constant. Calibration runs once per process and preset; later calls return
/// the frozen value. Thread-safe.
GroupDatum preset(std::string_view name);

/// Delta(t). Throws DomainError for t < 0.
double haar_density(const GroupDatum& g, double t);

/// Delta'(t) / Delta(t) = m_alpha coth t + 2 m_2alpha coth 2t, for t > 0.
double haar_log_derivative(const GroupDatum& g, double t);

/// lim_{t->inf} Delta(t) e^{-2 rho t}. Equals 1 in this normalization.
double haar_asymptotic_constant(const GroupDatum& g);

/// Throws ValidationError when the derived constants disagree with the root
/// multiplicities or an invariant is broken.
void validate(const GroupDatum& g);

}  // namespace groups

void to_json(nlohmann::json& j, const GroupDatum& g);
void from_json(const nlohmann::json& j, GroupDatum& g);

}  // namespace rankone
