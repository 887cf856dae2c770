#pragma once

#include <optional>
#include <vector>

#include "sigdim/classical.hpp"
#include "sigdim/core.hpp"
#include "sigdim/lp.hpp"
#include "sigdim/measurements.hpp"

namespace sigdim {

enum class SearchOrder { Linear, Binary };

struct DimensionOptions {
  SearchOrder search = SearchOrder::Linear;
  Rational box = 1;
  unsigned threads = 1;  // effective-vertex enumeration
  simplex::Options lp;
};

struct DimensionReport {
  std::size_t measurement_class = 0;
  std::size_t support_size = 0;
  unsigned minimal_d = 0;
  DecompositionCertificate certificate_up;            // at minimal_d, over the reduced rows
  std::optional<WitnessCertificate> certificate_down;  // against minimal_d - 1
  std::size_t v_used = 0;                             // effective vertices at minimal_d
  BigInt V_total;                                     // all vertices of P^{m->n}_d, reduced m
  RowReduction reduction;
};

/// p_{y|x} = w_y (e_y . state_x); rows follow the extremal states, columns
/// the support of the measurement in increasing effect index.
ConditionalDistribution induced_distribution(const GptSystem& system, const Measurement& p);

/// Smallest d with p in P_d together with a decomposition at d and a witness
/// at d - 1. Both are computed for the row-reduced distribution.
DimensionReport minimal_classical_dimension(const ConditionalDistribution& p,
                                            const DimensionOptions& options = {});

struct SignalingResult {
  unsigned kappa = 0;
  std::vector<MeasurementOrbit> orbits;
  std::vector<DimensionReport> reports;  // one per evaluated orbit, in evaluation order
  std::vector<std::size_t> skipped;      // class ids skipped by the support-size rule
};

/// Orbits are evaluated in order of decreasing support size; an orbit whose
/// support is not larger than the best dimension so far cannot raise it and
/// is skipped. The skip test uses the best value from strictly larger
/// supports, so orbits of one support size are independent and
/// `orbit_threads` > 1 evaluates them concurrently with identical results.
SignalingResult signaling_dimension(const GptSystem& system, const SymmetryGroup& group,
                                    const DimensionOptions& options = {}, unsigned orbit_threads = 1);

/// Convenience overload closing the system's own generators.
SignalingResult signaling_dimension(const GptSystem& system, const DimensionOptions& options = {});

}  // namespace sigdim
