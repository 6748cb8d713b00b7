#include <map>
#include <mutex>

#include "rankone/groups.hpp"
#include "rankone/transform.hpp"

namespace rankone::groups {

// Lives apart from groups.cpp because calibration needs the transform layer.
GroupDatum preset(std::string_view name) {
  GroupDatum g = structural(name);
  static std::mutex mu;
  static std::map<std::string, double, std::less<>> constants;
  std::lock_guard lock(mu);
  auto it = constants.find(name);
  if (it == constants.end())
    it = constants.emplace(std::string(name), transform::calibrate(g, specfun::QuadratureSpec{}))
             .first;
  g.plancherel_constant = it->second;
  return g;
}

}  // namespace rankone::groups
