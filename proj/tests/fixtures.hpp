#pragma once

#include "hs_tables.hpp"
#include "sigdim/models.hpp"
#include "sigdim/signaling.hpp"

namespace fixtures {

inline const sigdim::GptSystem& hs() {
  static const sigdim::GptSystem system = sigdim::compose(sigdim::named_model("HS"));
  return system;
}

inline sigdim::Measurement hs_measurement(std::size_t row) {
  sigdim::Measurement p{sigdim::RationalVector(24)};
  for (std::size_t j = 0; j < 24; ++j) {
    p.weights[j] = sigdim::Rational(kHsClasses[row][j], 240);
    p.weights[j].canonicalize();
  }
  return p;
}

/// Row-reduced distribution of a printed HS measurement on the 16 product states.
inline sigdim::ConditionalDistribution hs_distribution(std::size_t row) {
  return sigdim::reduce_rows(sigdim::induced_distribution(hs(), hs_measurement(row))).reduced;
}

}  // namespace fixtures
