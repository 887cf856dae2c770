#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "sigdim/rational.hpp"

namespace sigdim {

class InvalidSystem : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a matrix that should permute the extremal effects does not.
class NotASymmetry : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class GroupTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite GPT system: extremal states, extremal normalized effects, unit
/// effect and a generating set of reversible transformations.
///
/// States transform as w -> U w and effects as e -> U^{-T} e, so pairings
/// e . w are preserved. The constructor checks every model invariant and
/// throws InvalidSystem on the first violation.
class GptSystem {
 public:
  GptSystem(std::size_t linear_dimension, std::vector<RationalVector> states,
            std::vector<RationalVector> effects, RationalVector unit_effect,
            std::vector<RationalMatrix> symmetry_generators = {});

  std::size_t linear_dimension() const { return dim_; }
  const std::vector<RationalVector>& states() const { return states_; }
  const std::vector<RationalVector>& effects() const { return effects_; }
  const RationalVector& unit_effect() const { return unit_; }
  const std::vector<RationalMatrix>& symmetry_generators() const { return generators_; }

  /// Uniform average of the extremal states.
  RationalVector barycenter() const;

  /// Index of `e` in the effect list, or npos.
  std::size_t find_effect(std::span<const Rational> e) const;
  std::size_t find_state(std::span<const Rational> w) const;

  /// Effect permutation induced by U: perm[j] = index of U^{-T} e_j.
  /// Throws NotASymmetry if U does not map the stored effects onto themselves.
  std::vector<std::size_t> effect_permutation(const RationalMatrix& u) const;
  std::vector<std::size_t> state_permutation(const RationalMatrix& u) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::size_t dim_;
  std::vector<RationalVector> states_;
  std::vector<RationalVector> effects_;
  RationalVector unit_;
  std::vector<RationalMatrix> generators_;
  std::map<RationalVector, std::size_t> effect_index_;
  std::map<RationalVector, std::size_t> state_index_;
};

/// A finite matrix group, stored as its full element list (identity first).
class SymmetryGroup {
 public:
  explicit SymmetryGroup(std::vector<RationalMatrix> elements) : elements_(std::move(elements)) {}

  const std::vector<RationalMatrix>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(const RationalMatrix& m) const;

 private:
  std::vector<RationalMatrix> elements_;
};

inline constexpr std::size_t kDefaultGroupBound = 1'000'000;

/// Closure of `generators` under multiplication. Throws std::invalid_argument
/// for a singular generator and GroupTooLarge past `bound` elements.
SymmetryGroup close_group(const std::vector<RationalMatrix>& generators,
                          std::size_t bound = kDefaultGroupBound, std::size_t dimension = 0);

/// Measurement on the extremal normalized effects: a probability vector over
/// effect indices with sum_y weights_y e_y = unit effect.
struct Measurement {
  RationalVector weights;

  std::vector<std::size_t> support() const;
  friend bool operator==(const Measurement&, const Measurement&) = default;
};

/// True iff weights >= 0, sum to one and resolve the unit effect exactly.
bool is_valid_measurement(const GptSystem& system, const Measurement& p);

/// Rescale each raw effect by a positive rational so that e . beta = 1 with
/// beta the barycenter of `states`. Throws InvalidSystem when e . beta <= 0.
std::vector<RationalVector> normalize_effects(const std::vector<RationalVector>& raw_effects,
                                              const std::vector<RationalVector>& states);

/// Weight on effect j moves to the index of U^{-T} e_j.
Measurement act_on_measurement(const RationalMatrix& u, const GptSystem& system,
                               const Measurement& p);

/// Same action for a precomputed effect permutation.
Measurement permute_measurement(std::span<const std::size_t> effect_perm, const Measurement& p);

}  // namespace sigdim
