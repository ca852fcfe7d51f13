#include "ivdyn/verdict.hpp"

#include <algorithm>
#include <stdexcept>

namespace ivdyn {

std::string to_string(Status s) {
  switch (s) {
    case Status::holds:
      return "holds";
    case Status::fails:
      return "fails";
    case Status::unknown:
      return "unknown";
  }
  return "unknown";
}

Status status_from_string(const std::string& s) {
  if (s == "holds") return Status::holds;
  if (s == "fails") return Status::fails;
  if (s == "unknown") return Status::unknown;
  throw std::invalid_argument("unknown verdict status '" + s + "'");
}

Status conjunction(Status a, Status b) {
  if (a == Status::fails || b == Status::fails) return Status::fails;
  if (a == Status::unknown || b == Status::unknown) return Status::unknown;
  return Status::holds;
}

const IntervalSet* Witness::find_set(const std::string& label) const {
  for (const auto& s : sets) {
    if (s.label == label) return &s.set;
  }
  return nullptr;
}

const Rational* Witness::find_value(const std::string& label) const {
  for (const auto& v : values) {
    if (v.first == label) return &v.second;
  }
  return nullptr;
}

void BudgetUsage::absorb(const BudgetUsage& other) {
  hulls += other.hulls;
  hull_iterations += other.hull_iterations;
  unconverged_hulls += other.unconverged_hulls;
  max_components = std::max(max_components, other.max_components);
  highest_complete_period = std::max(highest_complete_period, other.highest_complete_period);
  orbit_steps += other.orbit_steps;
}

}  // namespace ivdyn
