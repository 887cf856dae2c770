#pragma once

#include <vector>

#include "sigdim/core.hpp"
#include "sigdim/polytope.hpp"

namespace sigdim {

struct MeasurementOrbit {
  Measurement representative;  // lexicographic minimum over the orbit
  std::size_t size = 0;
  std::size_t class_id = 0;
};

/// Face description {p : E p = unit effect, p >= 0} of the measurement polytope.
HPolytope measurement_polytope(const GptSystem& system);

/// Vertices of the measurement polytope, i.e. the extremal measurements with
/// ray-extremal effects, in lexicographic order of their weight vectors.
std::vector<Measurement> enumerate_extremal_measurements(const GptSystem& system);

/// True iff the supported effects of `p` are linearly independent.
bool check_extremality(const GptSystem& system, const Measurement& p);

/// Partition into orbits under `group`. Orbits are ordered by support size,
/// then by representative; class ids follow that order.
std::vector<MeasurementOrbit> reduce_to_orbits(const std::vector<Measurement>& measurements,
                                               const SymmetryGroup& group, const GptSystem& system);

/// Lexicographically smallest image of `p` under the given effect permutations.
Measurement canonical_form(const Measurement& p,
                           const std::vector<std::vector<std::size_t>>& effect_perms);

/// True iff no measurement has more outcomes than the linear dimension.
bool support_size_bound_check(const GptSystem& system, const std::vector<Measurement>& measurements);

}  // namespace sigdim
