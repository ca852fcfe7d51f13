#include "ivdyn/devaney.hpp"

namespace ivdyn {

namespace {

Verdict route(const std::string& name, const Verdict& property, const Verdict& density) {
  Verdict v{name};
  v.status = conjunction(property.status, density.status);
  v.resolution = property.resolution;
  if (v.status == Status::fails) {
    const Verdict& culprit = property.status == Status::fails ? property : density;
    v.certified = culprit.certified;
    v.note = "fails via " + culprit.property;
    v.witness = culprit.witness;
  } else if (v.status == Status::unknown) {
    v.note = property.property + "=" + to_string(property.status) + ", " + density.property + "=" +
             to_string(density.status);
  }
  return v;
}

}  // namespace

DevaneyResult combine_devaney(Verdict transitivity, Verdict strong, Verdict indecomposable, Verdict density) {
  DevaneyResult r;
  r.via_transitivity = route("devaney-via-transitivity", transitivity, density);
  r.via_strong = route("devaney-via-strong-indecomposability", strong, density);
  r.via_indecomposable = route("devaney-via-indecomposability", indecomposable, density);
  r.transitivity = std::move(transitivity);
  r.strong = std::move(strong);
  r.indecomposable = std::move(indecomposable);
  r.density = std::move(density);

  r.overall.property = "devaney";
  r.overall.resolution = r.transitivity.resolution;
  std::optional<Status> decided;
  for (const Verdict* v : {&r.via_transitivity, &r.via_strong, &r.via_indecomposable}) {
    if (v->status == Status::unknown) continue;
    if (decided && *decided != v->status) r.consistent = false;
    decided = v->status;
  }
  if (!r.consistent) {
    r.overall.status = Status::unknown;
    r.overall.note = "routes contradict each other: resolution artifact or bug";
  } else if (decided) {
    r.overall.status = *decided;
    r.overall.certified = *decided == Status::fails;
    r.overall.note = "all decided routes agree";
    if (*decided == Status::fails) {
      for (const Verdict* v : {&r.via_transitivity, &r.via_strong, &r.via_indecomposable}) {
        if (v->status == Status::fails) {
          r.overall.witness = v->witness;
          break;
        }
      }
    }
  } else {
    r.overall.note = "no route decided";
  }
  return r;
}

DevaneyResult check_devaney(const MapModel& m, int k, int max_period, const Budget& budget) {
  return combine_devaney(check_transitivity(m, k, budget), check_strong_indecomposable(m, k, budget).verdict,
                         check_indecomposable(m, k, budget), periodic_density_check(m, k, max_period, budget));
}

}  // namespace ivdyn
