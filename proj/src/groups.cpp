#include "rankone/groups.hpp"

#include <cmath>
#include <set>

#include "rankone/errors.hpp"

namespace rankone {
namespace groups {

namespace {

struct RootData {
  const char* name;
  int m_alpha;
  int m_2alpha;
};

// SL2C and H3 share root data (SL(2,C)/SU(2) is hyperbolic 3-space); both are
// kept so either name can be used.
constexpr RootData kPresets[] = {
    {"SL2R", 1, 0}, {"SL2C", 2, 0}, {"H3", 2, 0}, {"H4", 3, 0}, {"CH2", 2, 1},
};

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& p : kPresets) out.emplace_back(p.name);
    return out;
  }();
  return names;
}

GroupDatum structural(std::string_view name) {
  for (const auto& p : kPresets) {
    if (name != p.name) continue;
    GroupDatum g;
    g.name = p.name;
    g.m_alpha = p.m_alpha;
    g.m_2alpha = p.m_2alpha;
    g.rho = 0.5 * (p.m_alpha + 2 * p.m_2alpha);
    g.jacobi_alpha = 0.5 * (p.m_alpha + p.m_2alpha - 1);
    g.jacobi_beta = 0.5 * (p.m_2alpha - 1);
    g.plancherel_constant = 1.0;
    g.weyl_order = 2;
    return g;
  }
  std::string valid;
  for (const auto& n : preset_names()) valid += (valid.empty() ? "" : ", ") + n;
  throw ValidationError("groups", "preset",
                        "unknown preset '" + std::string(name) +
                            "' (valid: " + valid + ")");
}

double haar_density(const GroupDatum& g, double t) {
  if (!(t >= 0.0))
    throw DomainError("groups", "haar_density", "t must be >= 0");
  return std::pow(2.0 * std::sinh(t), g.m_alpha) *
         std::pow(2.0 * std::sinh(2.0 * t), g.m_2alpha);
}

double haar_log_derivative(const GroupDatum& g, double t) {
  if (!(t > 0.0))
    throw DomainError("groups", "haar_log_derivative",
                      "singular at t = 0 (Delta'/Delta ~ m_alpha/t)");
  return g.m_alpha / std::tanh(t) + 2.0 * g.m_2alpha / std::tanh(2.0 * t);
}

double haar_asymptotic_constant(const GroupDatum&) { return 1.0; }

void validate(const GroupDatum& g) {
  auto fail = [](const std::string& what) {
    throw ValidationError("groups", "validate", what);
  };
  if (g.m_alpha < 0 || g.m_2alpha < 0) fail("root multiplicities must be >= 0");
  if (g.m_alpha + g.m_2alpha == 0) fail("at least one root multiplicity must be positive");
  constexpr double tol = 1e-15;
  if (std::abs(g.rho - 0.5 * (g.m_alpha + 2 * g.m_2alpha)) > tol)
    fail("rho inconsistent with multiplicities");
  if (std::abs(g.jacobi_alpha - 0.5 * (g.m_alpha + g.m_2alpha - 1)) > tol)
    fail("jacobi_alpha inconsistent with multiplicities");
  if (std::abs(g.jacobi_beta - 0.5 * (g.m_2alpha - 1)) > tol)
    fail("jacobi_beta inconsistent with multiplicities");
  if (!(g.plancherel_constant > 0.0) || !std::isfinite(g.plancherel_constant))
    fail("plancherel_constant must be positive and finite");
  if (g.weyl_order != 2) fail("weyl_order must be 2 in rank one");
}

}  // namespace groups

void to_json(nlohmann::json& j, const GroupDatum& g) {
  j = nlohmann::json{{"name", g.name},
                     {"m_alpha", g.m_alpha},
                     {"m_2alpha", g.m_2alpha},
                     {"rho", g.rho},
                     {"jacobi_alpha", g.jacobi_alpha},
                     {"jacobi_beta", g.jacobi_beta},
                     {"plancherel_constant", g.plancherel_constant},
                     {"weyl_order", g.weyl_order}};
}

void from_json(const nlohmann::json& j, GroupDatum& g) {
  static const std::set<std::string> fields = {
      "name", "m_alpha", "m_2alpha", "rho", "jacobi_alpha",
      "jacobi_beta", "plancherel_constant", "weyl_order"};
  if (!j.is_object())
    throw ValidationError("groups", "from_json", "expected an object");
  for (const auto& [key, _] : j.items())
    if (!fields.contains(key))
      throw ValidationError("groups", "from_json", "unknown field '" + key + "'");
  for (const auto& f : fields)
    if (!j.contains(f))
      throw ValidationError("groups", "from_json", "missing field '" + f + "'");
  try {
    g.name = j.at("name").get<std::string>();
    g.m_alpha = j.at("m_alpha").get<int>();
    g.m_2alpha = j.at("m_2alpha").get<int>();
    g.rho = j.at("rho").get<double>();
    g.jacobi_alpha = j.at("jacobi_alpha").get<double>();
    g.jacobi_beta = j.at("jacobi_beta").get<double>();
    g.plancherel_constant = j.at("plancherel_constant").get<double>();
    g.weyl_order = j.at("weyl_order").get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("groups", "from_json", e.what());
  }
  groups::validate(g);
}

}  // namespace rankone
