#include "sigdim/measurements.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sigdim {

HPolytope measurement_polytope(const GptSystem& system) {
  const std::size_t n = system.effects().size();
  HPolytope h;
  h.eq = RationalMatrix::from_columns(system.effects());
  h.eq_rhs = system.unit_effect();
  h.ineq = RationalMatrix::identity(n);
  h.ineq_rhs = RationalVector(n);
  return h;
}

std::vector<Measurement> enumerate_extremal_measurements(const GptSystem& system) {
  std::vector<Measurement> out;
  for (auto& v : dd_enumerate(measurement_polytope(system)).vertices) out.push_back({std::move(v)});
  return out;
}

bool check_extremality(const GptSystem& system, const Measurement& p) {
  std::vector<RationalVector> supported;
  for (auto j : p.support()) supported.push_back(system.effects()[j]);
  if (supported.empty()) return false;
  return rank(RationalMatrix::from_rows(supported)) == supported.size();
}

Measurement canonical_form(const Measurement& p,
                           const std::vector<std::vector<std::size_t>>& effect_perms) {
  Measurement best = p;
  for (const auto& perm : effect_perms) {
    Measurement image = permute_measurement(perm, p);
    if (lex_less(image.weights, best.weights)) best = std::move(image);
  }
  return best;
}

std::vector<MeasurementOrbit> reduce_to_orbits(const std::vector<Measurement>& measurements,
                                               const SymmetryGroup& group, const GptSystem& system) {
  std::vector<std::vector<std::size_t>> perms;
  perms.reserve(group.size());
  for (const auto& g : group.elements()) perms.push_back(system.effect_permutation(g));

  std::map<RationalVector, std::size_t> orbit_of;  // canonical weights -> index
  std::vector<MeasurementOrbit> orbits;
  for (const auto& p : measurements) {
    Measurement canon = canonical_form(p, perms);
    if (orbit_of.contains(canon.weights)) continue;
    std::set<RationalVector> images;
    for (const auto& perm : perms) images.insert(permute_measurement(perm, canon).weights);
    orbit_of.emplace(canon.weights, orbits.size());
    orbits.push_back({std::move(canon), images.size(), 0});
  }
  std::sort(orbits.begin(), orbits.end(), [](const MeasurementOrbit& a, const MeasurementOrbit& b) {
    const auto sa = a.representative.support().size();
    const auto sb = b.representative.support().size();
    if (sa != sb) return sa < sb;
    return lex_less(a.representative.weights, b.representative.weights);
  });
  for (std::size_t i = 0; i < orbits.size(); ++i) orbits[i].class_id = i;
  return orbits;
}

bool support_size_bound_check(const GptSystem& system, const std::vector<Measurement>& measurements) {
  return std::all_of(measurements.begin(), measurements.end(), [&](const Measurement& p) {
    return p.support().size() <= system.linear_dimension();
  });
}

}  // namespace sigdim
