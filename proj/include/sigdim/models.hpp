#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sigdim/core.hpp"

namespace sigdim {

/// The square bit: four states (1,0,1), (0,1,1), (-1,0,1), (0,-1,1), four
/// effects U_k (1,1,1), unit effect (0,0,1), dihedral symmetry.
GptSystem squit();

/// d-outcome classical system: vertices of the probability simplex.
GptSystem classical_simplex(unsigned d);

/// Two-squit composition. Indices 0..15 are the product states and effects
/// (4i + j for the i-th state or effect of the first squit and the j-th of
/// the second); 16..23 are the entangled ones.
struct CompositionModel {
  std::set<unsigned> entangled_state_indices;
  std::set<unsigned> entangled_effect_indices;
  std::string name = "custom";

  friend bool operator==(const CompositionModel&, const CompositionModel&) = default;
};

inline constexpr unsigned kFirstEntangled = 16;
inline constexpr unsigned kCompositeCount = 24;

/// PR, HS, FROZEN-16 .. FROZEN-19 and JANOTTA. Throws std::invalid_argument otherwise.
CompositionModel named_model(const std::string& name);

/// The six maximal consistent models in the order PR, HS, FROZEN-16 .. FROZEN-19.
std::vector<CompositionModel> known_maximal_models();

/// Composite state k in 0..23. Entangled states are scaled so that the unit
/// effect gives 1.
RationalVector composite_state(unsigned k);
RationalVector composite_effect(unsigned k);

/// Exchange of the two tensor factors as a 9x9 permutation matrix.
RationalMatrix swap_matrix();

/// Index of the Swap image of composite state or effect k.
unsigned swap_partner(unsigned k);

bool is_swap_closed(const CompositionModel& model);

/// States: the 16 product states followed by the chosen entangled states in
/// increasing index order; effects likewise. Local symmetries are included
/// when they preserve both sets, Swap when the model is Swap-closed.
/// Throws InvalidSystem for a model that is not Swap-closed.
GptSystem compose(const CompositionModel& model);

/// 3x3 reshape W[b][c] = v[3b + c] (first tensor factor indexes rows).
RationalMatrix reshape3(std::span<const Rational> v);

struct WiringMap {
  RationalMatrix matrix;  // U[c][a] = sum_b F[a][b] W[b][c]
};

/// Map obtained by plugging the second wire of state `omega` into the first
/// wire of effect `effect`.
WiringMap wiring_map(std::span<const Rational> omega, std::span<const Rational> effect);

/// Two copies of a state W and two of an effect F, with optional wiring maps
/// U0, U1, U2 on the wires: tr(U0 W F U1 W U2^T F^T).
Rational circuit_value(const RationalMatrix& w, const RationalMatrix& f, const RationalMatrix& u0,
                       const RationalMatrix& u1, const RationalMatrix& u2);

struct PositivityViolation {
  std::string wiring;  // human readable description of the negative wiring
  Rational value;
};

/// Checks direct pairings, pairings through Swap, and the two-copy circuit
/// with the wiring map of the same state-effect pair on any subset of its
/// three wires. Returns the first negative value found.
std::optional<PositivityViolation> check_complete_positivity(const CompositionModel& model);

/// Every Swap-closed pair of entangled state and effect subsets that passes
/// check_complete_positivity and has no consistent strict superset. Named
/// models carry their name.
std::vector<CompositionModel> classify_compositions(unsigned threads = 1);

/// E_20 paired with Swap(Omega_22) and with Swap(Omega_23).
struct JanottaValues {
  Rational with_state22;
  Rational with_state23;
};
JanottaValues janotta_swap_values();

}  // namespace sigdim
