#include "ivdyn/hull.hpp"

#include <algorithm>
#include <set>

#include "ivdyn/errors.hpp"

namespace ivdyn {

namespace {

void note_hull(BudgetUsage& usage, const HullResult& h) {
  ++usage.hulls;
  usage.hull_iterations += h.iterations;
  if (!h.converged) ++usage.unconverged_hulls;
  usage.max_components = std::max(usage.max_components, h.hull.size());
}

// Orders failing hulls: larger total length first, then leftmost seed.
bool better_witness(const HullResult& a, const HullResult& b) {
  const Rational la = a.hull.total_length();
  const Rational lb = b.hull.total_length();
  if (la != lb) return la > lb;
  const ClosedInterval sa = a.seed.span();
  const ClosedInterval sb = b.seed.span();
  if (sa.lo != sb.lo) return sa.lo < sb.lo;
  return sa.hi < sb.hi;
}

IntervalSet intersect_all(const std::vector<IntervalSet>& sets) {
  if (sets.empty()) return {};
  IntervalSet acc = sets.front();
  for (std::size_t i = 1; i < sets.size() && !acc.empty(); ++i) acc = intersect(acc, sets[i]);
  return acc;
}

std::optional<Witness> shrinking_family(const MapModel& m, int k, const Budget& budget, BudgetUsage& usage) {
  const ClosedInterval domain = m.domain();
  const Rational length = domain.length();
  const Rational threshold = Rational(2) * dyadic_width(domain, k);
  for (bool right : {true, false}) {
    std::vector<IntervalSet> family;
    bool ok = true;
    bool closed_form = true;
    for (int t = 1; t <= budget.family_depth && ok; ++t) {
      const Rational width = length * Rational::pow2(-t);
      IntervalSet seed(right ? ClosedInterval{domain.hi - width, domain.hi}
                             : ClosedInterval{domain.lo, domain.lo + width});
      HullResult h = forward_hull(m, seed, budget);
      note_hull(usage, h);
      ok = h.converged && h.hull.interior_nonempty() && is_invariant(m, h.hull) &&
           (family.empty() || family.back().contains(h.hull));
      if (h.hull != seed) closed_form = false;
      family.push_back(std::move(h.hull));
    }
    if (!ok) continue;
    const IntervalSet& innermost = family.back();
    if (!(innermost.total_length() < threshold)) continue;

    Witness w;
    const std::string scale = length == Rational(1) ? "1" : length.str();
    if (closed_form) {
      w.description = right ? "A_t = [" + domain.hi.str() + " - " + scale + "/2^t, " + domain.hi.str() + "]"
                            : "A_t = [" + domain.lo.str() + ", " + domain.lo.str() + " + " + scale + "/2^t]";
    } else {
      w.description = right ? "A_t = hull([" + domain.hi.str() + " - " + scale + "/2^t, " + domain.hi.str() + "])"
                            : "A_t = hull([" + domain.lo.str() + ", " + domain.lo.str() + " + " + scale + "/2^t])";
    }
    w.description += "; nested invariant closed sets with nonempty interior, verified exactly for t <= " +
                     std::to_string(budget.family_depth);
    for (std::size_t t = 0; t < family.size(); ++t) {
      w.sets.push_back({"A_" + std::to_string(t + 1), family[t]});
    }
    w.sets.push_back({"intersection", innermost});
    w.values.emplace_back("depth", Rational(budget.family_depth));
    w.values.emplace_back("intersection_length", innermost.total_length());
    return w;
  }
  return std::nullopt;
}

}  // namespace

HullResult forward_hull(const MapModel& m, const IntervalSet& seed, const Budget& budget) {
  if (seed.empty()) throw PreconditionError("forward hull of an empty set");
  if (!m.domain().contains(seed.span())) throw PreconditionError("hull seed outside domain");
  HullResult r{seed, seed, 0, false, {}};
  try {
    // Only components that changed in the last step can contribute new image points: a component already
    // inside the previous set has its image in the current one.
    std::vector<ClosedInterval> frontier = r.hull.components();
    while (r.iterations < budget.hull_iterations) {
      const IntervalSet moved = m.image_set(IntervalSet::normalize(frontier, SIZE_MAX), budget.component_cap);
      IntervalSet next = unite(r.hull, moved, budget.component_cap);
      ++r.iterations;
      if (next == r.hull) {
        r.converged = true;
        return r;
      }
      frontier.clear();
      const auto& prev = r.hull.components();
      std::size_t j = 0;
      bool oversized = false;
      for (const auto& c : next.components()) {
        while (j < prev.size() && prev[j].hi < c.lo) ++j;
        if (j < prev.size() && prev[j].contains(c)) continue;
        frontier.push_back(c);
        oversized |= c.lo.denominator_bits() > budget.denominator_bits || c.hi.denominator_bits() > budget.denominator_bits;
      }
      r.hull = std::move(next);
      if (oversized) {
        r.stop_reason = "endpoint denominators exceed " + std::to_string(budget.denominator_bits) + " bits";
        return r;
      }
    }
    r.stop_reason = "iteration budget exhausted";
  } catch (const ComponentOverflow& e) {
    r.stop_reason = e.what();
  }
  return r;
}

bool is_invariant(const MapModel& m, const IntervalSet& a) { return a.contains(m.image_set(a, SIZE_MAX)); }

// ---------------------------------------------------------------------------

DyadicHullTable::DyadicHullTable(const MapModel& m, int k, const Budget& budget) : domain_(m.domain()), k_(k) {
  if (k < 1) throw PreconditionError("resolution must be >= 1");
  const auto cells = dyadic_cells(domain_, k);
  finest_.reserve(cells.size());
  for (const auto& c : cells) {
    finest_.push_back(forward_hull(m, IntervalSet(c), budget));
    note_hull(usage_, finest_.back());
  }
}

ClosedInterval DyadicHullTable::cell(int level, std::size_t index) const {
  const Rational width = dyadic_width(domain_, level);
  const Rational lo = domain_.lo + width * Rational(static_cast<long>(index));
  return {lo, index + 1 == cell_count(level) ? domain_.hi : lo + width};
}

HullResult DyadicHullTable::hull(int level, std::size_t index) const {
  if (level < 0 || level > k_) throw PreconditionError("level out of range");
  const std::size_t span = std::size_t{1} << (k_ - level);
  if (span == 1) return finest_[index];
  HullResult out{IntervalSet(cell(level, index)), {}, 0, true, {}};
  for (std::size_t i = index * span; i < (index + 1) * span; ++i) {
    const auto& h = finest_[i];
    out.hull = unite(out.hull, h.hull, SIZE_MAX);
    out.iterations = std::max(out.iterations, h.iterations);
    out.converged = out.converged && h.converged;
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<ClosedInterval> preimage_partition(const PLMap& m) {
  std::set<Rational> cuts;
  for (const auto& b : m.breakpoints()) cuts.insert(b.x);
  for (std::size_t i = 0; i < m.piece_count(); ++i) {
    const LinearPiece p = m.piece(i);
    if (p.y0 == p.y1) continue;
    const Rational& lo = min(p.y0, p.y1);
    const Rational& hi = max(p.y0, p.y1);
    for (const auto& b : m.breakpoints()) {
      if (lo <= b.x && b.x <= hi) cuts.insert(p.x0 + (b.x - p.y0) * (p.x1 - p.x0) / (p.y1 - p.y0));
    }
  }
  std::vector<ClosedInterval> cells;
  for (auto it = cuts.begin(); std::next(it) != cuts.end(); ++it) cells.push_back({*it, *std::next(it)});
  return cells;
}

bool refutes_transitivity(const MapModel& m, const IntervalSet& invariant_set) {
  return invariant_set.interior_nonempty() && is_invariant(m, invariant_set) &&
         invariant_set != IntervalSet(m.domain());
}

bool refutes_indecomposability(const MapModel& m, const IntervalSet& a, const IntervalSet& b) {
  return a.interior_nonempty() && b.interior_nonempty() && is_invariant(m, a) && is_invariant(m, b) &&
         !intersect(a, b).interior_nonempty();
}

Verdict check_transitivity(const MapModel& m, int k, const Budget& budget) {
  Verdict v{"transitivity"};
  v.resolution = k;
  DyadicHullTable table(m, k, budget);
  v.budget = table.usage();
  const IntervalSet full(m.domain());

  // Seeds from the map's own preimage partition come first: they do not depend on k, so the witness is
  // stable across resolutions. Dyadic cells only supply a witness when the partition has none.
  std::optional<HullResult> best;
  auto consider = [&](const HullResult& h) {
    if (!h.converged || h.hull == full || !h.hull.interior_nonempty()) return;
    if (!best || better_witness(h, *best)) best = h;
  };
  if (m.is_pl()) {
    for (const auto& cell : preimage_partition(m.as_pl())) {
      HullResult h = forward_hull(m, IntervalSet(cell), budget);
      note_hull(v.budget, h);
      consider(h);
    }
  }
  const bool from_partition = best.has_value();
  bool all_full = true;
  for (std::size_t i = 0; i < table.cell_count(k); ++i) {
    const auto& h = table.finest(i);
    if (!h.converged || h.hull != full) all_full = false;
    if (!from_partition) consider(h);
  }

  if (best) {
    v.status = Status::fails;
    v.certified = true;
    v.witness = Witness{"forward hull of the seed converged to a proper invariant closed set with nonempty interior",
                        {{"seed", best->seed}, {"hull", best->hull}},
                        {}};
  } else if (all_full) {
    v.status = Status::holds;
    v.note = "every cell hull is the whole domain";
  } else {
    v.status = Status::unknown;
    v.note = std::to_string(v.budget.unconverged_hulls) + " cell hulls did not converge";
  }
  return v;
}

Verdict check_indecomposable(const MapModel& m, int k, const Budget& budget) {
  Verdict v{"indecomposability"};
  v.resolution = k;
  DyadicHullTable table(m, k, budget);
  v.budget = table.usage();
  const std::size_t n = table.cell_count(k);

  bool inconclusive = false;
  auto try_pair = [&](std::size_t i, std::size_t j) {
    const auto& a = table.finest(i);
    const auto& b = table.finest(j);
    IntervalSet common = intersect(a.hull, b.hull);
    if (common.interior_nonempty()) return false;
    if (!a.converged || !b.converged) {
      inconclusive = true;
      return false;
    }
    v.status = Status::fails;
    v.certified = true;
    v.witness = Witness{"two converged hulls are invariant closed sets with nonempty interior whose "
                        "intersection has empty interior",
                        {{"seed_a", a.seed}, {"seed_b", b.seed}, {"hull_a", a.hull}, {"hull_b", b.hull},
                         {"intersection", common}},
                        {}};
    return true;
  };
  // Non-adjacent seeds first: adjacent cells share a boundary point that can
  // mask a wider separation.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      if (try_pair(i, j)) return v;
    }
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (try_pair(i, i + 1)) return v;
  }
  if (inconclusive) {
    v.status = Status::unknown;
    v.note = "some pair has a thin intersection but unconverged hulls";
  } else {
    v.status = Status::holds;
    v.note = "every pair of cell hulls has an intersection with nonempty interior";
  }
  return v;
}

StrongIndecomposabilityResult check_strong_indecomposable(const MapModel& m, int k, const Budget& budget) {
  StrongIndecomposabilityResult out;
  Verdict& v = out.verdict;
  v.property = "strong-indecomposability";
  v.resolution = k;
  DyadicHullTable table(m, k, budget);
  v.budget = table.usage();

  bool all_converged = v.budget.unconverged_hulls == 0;
  for (int j = 1; j <= k; ++j) {
    std::vector<IntervalSet> hulls;
    hulls.reserve(table.cell_count(j));
    for (std::size_t i = 0; i < table.cell_count(j); ++i) hulls.push_back(table.hull(j, i).hull);
    out.levels.push_back(intersect_all(hulls));
  }
  out.core.set = out.levels.back();
  out.core.resolution = k;
  out.core.invariant_verified = all_converged && is_invariant(m, out.core.set);

  if (auto family = shrinking_family(m, k, budget, v.budget)) {
    v.status = Status::fails;
    v.certified = true;
    v.witness = std::move(family);
    return out;
  }

  bool stable = true;
  for (int j = std::max(1, k - 2); j < k; ++j) stable = stable && out.levels[j - 1] == out.levels.back();
  if (all_converged && out.core.set.interior_nonempty() && stable) {
    if (!out.core.invariant_verified) throw InternalConsistencyError("core of converged hulls is not invariant");
    v.status = Status::holds;
    v.witness = Witness{"intersection of all cell hulls, stable over the last three resolutions",
                        {{"core", out.core.set}},
                        {}};
  } else {
    v.status = Status::unknown;
    if (!all_converged) {
      v.note = "unconverged cell hulls";
    } else if (!out.core.set.interior_nonempty()) {
      v.note = "core has empty interior but no shrinking invariant family was verified";
    } else {
      v.note = "core has not stabilised across resolutions";
    }
  }
  return out;
}

CoreSet extract_core(const MapModel& m, int k, const Budget& budget) {
  auto r = check_strong_indecomposable(m, k, budget);
  if (r.verdict.status != Status::holds) {
    throw PreconditionError("core extraction needs strong indecomposability to hold at resolution " +
                            std::to_string(k));
  }
  if (!is_invariant(m, r.core.set)) throw InternalConsistencyError("extracted core is not invariant");
  r.core.invariant_verified = true;
  return r.core;
}

Verdict check_transitive_on(const MapModel& m, const IntervalSet& e, int k, const Budget& budget) {
  if (e.empty() || !is_invariant(m, e)) throw PreconditionError("set " + e.str() + " is not invariant");
  Verdict v{"transitivity-on-set"};
  v.resolution = k;
  const IntervalSet target = e.without_points();

  std::optional<HullResult> best;
  bool all_ok = true;
  for (const auto& cell : dyadic_cells(m.domain(), k)) {
    IntervalSet piece = intersect(e, IntervalSet(cell));
    if (!piece.interior_nonempty()) continue;
    HullResult h = forward_hull(m, piece, budget);
    note_hull(v.budget, h);
    if (h.hull.contains(target)) continue;
    all_ok = false;
    if (h.converged && (!best || better_witness(h, *best))) best = std::move(h);
  }
  if (best) {
    v.status = Status::fails;
    v.certified = true;
    v.witness = Witness{"converged hull of a piece of the set misses part of its interior",
                        {{"set", e}, {"seed", best->seed}, {"hull", best->hull}},
                        {}};
  } else if (all_ok) {
    v.status = Status::holds;
    v.note = "every piece of the set has a hull covering the set";
  } else {
    v.status = Status::unknown;
    v.note = "unconverged hulls";
  }
  return v;
}

DecompositionResult cycle_decomposition(const MapModel& m, int k, const Budget& budget) {
  DecompositionResult out;
  Verdict& v = out.verdict;
  v.property = "cycle-decomposition";
  v.resolution = k;
  auto strong = check_strong_indecomposable(m, k, budget);
  v.budget = strong.verdict.budget;
  if (strong.verdict.status != Status::holds) {
    v.note = "strong indecomposability is " + to_string(strong.verdict.status) + " at this resolution";
    return out;
  }
  const IntervalSet& core = strong.core.set;
  const auto pieces = core.without_points().components();
  if (pieces.empty()) {
    v.note = "core has no non-degenerate component";
    return out;
  }
  const ClosedInterval* longest = &pieces.front();
  for (const auto& p : pieces) {
    if (p.length() > longest->length()) longest = &p;
  }
  const ClosedInterval j0 = *longest;

  int n = 0;
  ClosedInterval image = j0;
  for (std::size_t step = 1; step <= pieces.size(); ++step) {
    image = m.image_interval(image);
    if (image.meets(j0)) {
      n = static_cast<int>(step);
      break;
    }
  }
  if (n == 0) {
    v.note = "no return of J_0 within the component count; resolution too coarse";
    return out;
  }
  if (image != j0) {
    v.note = "f^" + std::to_string(n) + "(J_0) = " + image.str() + " differs from J_0 = " + j0.str();
    return out;
  }

  std::vector<ClosedInterval> cycle{j0};
  for (int i = 1; i < n; ++i) cycle.push_back(m.image_interval(cycle.back()));
  for (int i = 0; i < n; ++i) {
    if (m.image_interval(cycle[i]) != cycle[(i + 1) % n]) {
      v.note = "f(J_" + std::to_string(i) + ") is not J_" + std::to_string((i + 1) % n);
      return out;
    }
    for (int j = i + 1; j < n; ++j) {
      if (cycle[i].meets(cycle[j])) {
        v.note = "J_" + std::to_string(i) + " and J_" + std::to_string(j) + " intersect";
        return out;
      }
    }
  }
  if (IntervalSet::normalize(cycle, SIZE_MAX) != core) {
    v.note = "union of the cycle differs from the core";
    return out;
  }

  v.status = Status::holds;
  v.certified = true;
  Witness w{"f cyclically permutes disjoint closed intervals whose union is the core", {}, {}};
  for (int i = 0; i < n; ++i) w.sets.push_back({"J_" + std::to_string(i), IntervalSet(cycle[i])});
  w.values.emplace_back("n", Rational(n));
  v.witness = std::move(w);
  out.decomposition = CycleDecomposition{n, std::move(cycle), strong.core};
  return out;
}

Verdict sensitivity_sufficient(const MapModel& m) {
  Verdict v{"sensitivity"};
  if (!m.is_pl()) {
    v.note = "expansion criterion is implemented for finite piecewise-linear maps only";
    return v;
  }
  const PLMap& pl = m.as_pl();
  Rational lambda = pl.piece(0).slope().abs();
  for (std::size_t i = 1; i < pl.piece_count(); ++i) lambda = min(lambda, pl.piece(i).slope().abs());
  if (lambda > Rational(1)) {
    v.status = Status::holds;
    v.certified = true;
    v.witness = Witness{"every piece expands by at least lambda > 1", {}, {{"lambda", lambda}}};
  } else {
    v.note = "minimum |slope| is " + lambda.str() + "; no uniform expansion";
  }
  return v;
}

}  // namespace ivdyn
