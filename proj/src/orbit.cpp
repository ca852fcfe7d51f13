#include "ivdyn/orbit.hpp"

#include "ivdyn/errors.hpp"

namespace ivdyn {

OrbitRecord orbit(const MapModel& m, const Rational& x0, std::size_t steps, std::size_t denominator_bits) {
  if (!m.domain().contains(x0)) throw PreconditionError("seed " + x0.str() + " outside domain");
  OrbitRecord r{x0, {x0}, false};
  r.points.reserve(steps + 1);
  for (std::size_t i = 0; i < steps; ++i) {
    Rational next = m.eval(r.points.back());
    if (next.denominator_bits() > denominator_bits) {
      r.truncated = true;
      break;
    }
    r.points.push_back(std::move(next));
  }
  return r;
}

OmegaEstimate omega_estimate(const MapModel& m, const Rational& x0, std::size_t burn_in, std::size_t tail, int k,
                             std::size_t denominator_bits) {
  if (burn_in < 1 || tail < 1) throw PreconditionError("burn-in and tail must be >= 1");
  const ClosedInterval domain = m.domain();
  OrbitRecord r = orbit(m, x0, burn_in + tail - 1, denominator_bits);
  const auto cells = dyadic_cells(domain, k);
  std::vector<ClosedInterval> hit;
  for (std::size_t i = burn_in; i < r.points.size(); ++i) {
    hit.push_back(cells[dyadic_cell_index(domain, k, r.points[i])]);
  }
  return {x0, IntervalSet::normalize(std::move(hit), SIZE_MAX), k, burn_in, tail, r.truncated};
}

bool covers_agree(const IntervalSet& a, const IntervalSet& b, const ClosedInterval& domain, int k) {
  const Rational slack = dyadic_width(domain, k);
  return dilate(a, slack, domain).contains(b) && dilate(b, slack, domain).contains(a);
}

std::vector<Rational> grid_seeds(const ClosedInterval& domain, std::size_t n) {
  std::vector<Rational> seeds;
  seeds.reserve(n);
  const Rational step = domain.length() / Rational(static_cast<long>(2 * n));
  for (std::size_t i = 0; i < n; ++i) seeds.push_back(domain.lo + step * Rational(static_cast<long>(2 * i + 1)));
  return seeds;
}

Verdict weak_indecomposability_check(const MapModel& m, std::size_t sample_count, int k, std::size_t burn_in,
                                     std::size_t tail, std::size_t denominator_bits) {
  if (sample_count < 2) throw PreconditionError("weak indecomposability check needs >= 2 samples");
  Verdict v{"weak-indecomposability"};
  v.empirical = true;
  v.resolution = k;
  const ClosedInterval domain = m.domain();

  std::vector<OmegaEstimate> estimates;
  std::size_t truncated = 0;
  for (const auto& seed : grid_seeds(domain, sample_count)) {
    estimates.push_back(omega_estimate(m, seed, burn_in, tail, k, denominator_bits));
    v.budget.orbit_steps += burn_in + tail;
    if (estimates.back().truncated) ++truncated;
  }
  if (truncated) v.note = std::to_string(truncated) + " orbits hit the denominator budget";

  std::size_t usable = 0;
  for (const auto& e : estimates) usable += e.cover.empty() ? 0 : 1;
  if (usable < 2) {
    v.status = Status::unknown;
    v.note = "fewer than two orbits reached the tail window";
    return v;
  }

  for (std::size_t i = 0; i < estimates.size(); ++i) {
    if (estimates[i].cover.empty()) continue;
    for (std::size_t j = i + 1; j < estimates.size(); ++j) {
      if (estimates[j].cover.empty()) continue;
      if (!covers_agree(estimates[i].cover, estimates[j].cover, domain, k)) {
        v.status = Status::fails;
        v.witness = Witness{"omega-limit covers of two grid seeds differ by more than one cell",
                            {{"cover_a", estimates[i].cover}, {"cover_b", estimates[j].cover}},
                            {{"seed_a", estimates[i].seed}, {"seed_b", estimates[j].seed}}};
        return v;
      }
    }
  }
  v.status = Status::holds;
  v.witness = Witness{"all grid seeds share one omega-limit cover", {{"cover", estimates.front().cover}}, {}};
  return v;
}

}  // namespace ivdyn
