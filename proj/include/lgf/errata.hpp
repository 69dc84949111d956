#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lgf/model.hpp"

namespace lgf {

enum class ErratumStatus { Agrees, Disagrees, NotApplicable };

std::string_view to_string(ErratumStatus s);

// One published formula or claim, evaluated next to the quantity computed
// from the implemented field. NaN marks a side that cannot be evaluated
// (e.g. a truncated formula or a non-numeric claim).
struct ErratumItem {
  std::string id;
  std::string published;
  std::string derived;
  // Where the comparison was made, e.g. "E3, lam=lam_SN, s=0.05".
  std::string context;
  double published_value = 0.0;
  double derived_value = 0.0;
  ErratumStatus status = ErratumStatus::NotApplicable;
};

// Relative agreement threshold used for the numeric items.
inline constexpr double kErrataTol = 1e-8;

// Evaluates every checkable published formula for the (m, a) family of p:
//   - origin blow-up items at p itself;
//   - fold items at lam = lam_SN(m, a) (s from p; cusp items at s = s0);
//   - E4/E5 items at p when two interior equilibria exist, with the
//     expansion coefficients taken at s = s*.
// Items whose point does not exist are reported as NotApplicable.
std::vector<ErratumItem> errata_report(const Params& p);

}  // namespace lgf
