#include "sigdim/core.hpp"

#include <deque>
#include <set>
#include <string>

namespace sigdim {

namespace {

RationalMatrix inverse_transpose(const RationalMatrix& u) {
  auto inv = inverse(u);
  if (!inv) throw NotASymmetry("symmetry generator is singular");
  return inv->transpose();
}

}  // namespace

GptSystem::GptSystem(std::size_t linear_dimension, std::vector<RationalVector> states,
                     std::vector<RationalVector> effects, RationalVector unit_effect,
                     std::vector<RationalMatrix> symmetry_generators)
    : dim_(linear_dimension),
      states_(std::move(states)),
      effects_(std::move(effects)),
      unit_(std::move(unit_effect)),
      generators_(std::move(symmetry_generators)) {
  if (dim_ == 0) throw InvalidSystem("linear_dimension must be positive");
  if (unit_.size() != dim_) throw InvalidSystem("unit_effect has wrong length");
  if (states_.empty()) throw InvalidSystem("states: at least one state is required");
  if (effects_.empty()) throw InvalidSystem("effects: at least one effect is required");
  for (std::size_t i = 0; i < states_.size(); ++i) {
    if (states_[i].size() != dim_) throw InvalidSystem("states[" + std::to_string(i) + "] has wrong length");
    if (dot(unit_, states_[i]) != 1)
      throw InvalidSystem("states[" + std::to_string(i) + "] is not normalized by unit_effect");
    if (!state_index_.emplace(states_[i], i).second)
      throw InvalidSystem("states[" + std::to_string(i) + "] is a duplicate");
  }
  for (std::size_t j = 0; j < effects_.size(); ++j) {
    if (effects_[j].size() != dim_) throw InvalidSystem("effects[" + std::to_string(j) + "] has wrong length");
    if (!effect_index_.emplace(effects_[j], j).second)
      throw InvalidSystem("effects[" + std::to_string(j) + "] is a duplicate");
    for (std::size_t i = 0; i < states_.size(); ++i)
      if (sgn(dot(effects_[j], states_[i])) < 0)
        throw InvalidSystem("effects[" + std::to_string(j) + "] pairs negatively with states[" +
                            std::to_string(i) + "]");
  }
  for (std::size_t g = 0; g < generators_.size(); ++g) {
    const auto& u = generators_[g];
    const std::string where = "symmetry_generators[" + std::to_string(g) + "]";
    if (u.rows() != dim_ || u.cols() != dim_) throw InvalidSystem(where + " has wrong shape");
    try {
      state_permutation(u);
      effect_permutation(u);
    } catch (const NotASymmetry& e) {
      throw InvalidSystem(where + ": " + e.what());
    }
    if (inverse_transpose(u) * std::span<const Rational>(unit_) != unit_)
      throw InvalidSystem(where + " does not fix the unit effect");
  }
}

RationalVector GptSystem::barycenter() const {
  RationalVector b(dim_);
  for (const auto& s : states_)
    for (std::size_t k = 0; k < dim_; ++k) b[k] += s[k];
  const Rational n(static_cast<unsigned long>(states_.size()));
  for (auto& x : b) x /= n;
  return b;
}

std::size_t GptSystem::find_effect(std::span<const Rational> e) const {
  auto it = effect_index_.find(RationalVector(e.begin(), e.end()));
  return it == effect_index_.end() ? npos : it->second;
}

std::size_t GptSystem::find_state(std::span<const Rational> w) const {
  auto it = state_index_.find(RationalVector(w.begin(), w.end()));
  return it == state_index_.end() ? npos : it->second;
}

std::vector<std::size_t> GptSystem::effect_permutation(const RationalMatrix& u) const {
  const RationalMatrix t = inverse_transpose(u);
  std::vector<std::size_t> perm(effects_.size());
  for (std::size_t j = 0; j < effects_.size(); ++j) {
    perm[j] = find_effect(t * std::span<const Rational>(effects_[j]));
    if (perm[j] == npos)
      throw NotASymmetry("U^{-T} e_" + std::to_string(j) + " is not a stored effect");
  }
  return perm;
}

std::vector<std::size_t> GptSystem::state_permutation(const RationalMatrix& u) const {
  std::vector<std::size_t> perm(states_.size());
  for (std::size_t i = 0; i < states_.size(); ++i) {
    perm[i] = find_state(u * std::span<const Rational>(states_[i]));
    if (perm[i] == npos)
      throw NotASymmetry("U w_" + std::to_string(i) + " is not a stored state");
  }
  return perm;
}

bool SymmetryGroup::contains(const RationalMatrix& m) const {
  for (const auto& e : elements_)
    if (e == m) return true;
  return false;
}

SymmetryGroup close_group(const std::vector<RationalMatrix>& generators, std::size_t bound,
                          std::size_t dimension) {
  if (!generators.empty()) dimension = generators.front().rows();
  for (const auto& g : generators) {
    if (g.rows() != dimension || g.cols() != dimension)
      throw DimensionMismatch("close_group: generators of different shapes");
    if (rank(g) != dimension) throw std::invalid_argument("close_group: singular generator");
  }
  std::set<RationalMatrix> seen;
  std::vector<RationalMatrix> elements;
  std::deque<std::size_t> frontier;
  auto visit = [&](RationalMatrix m) {
    if (seen.contains(m)) return;
    if (elements.size() >= bound)
      throw GroupTooLarge("group closure exceeds " + std::to_string(bound) + " elements");
    seen.insert(m);
    elements.push_back(std::move(m));
    frontier.push_back(elements.size() - 1);
  };
  visit(RationalMatrix::identity(dimension));
  while (!frontier.empty()) {
    const std::size_t i = frontier.front();
    frontier.pop_front();
    for (const auto& g : generators) visit(g * elements[i]);
  }
  return SymmetryGroup(std::move(elements));
}

std::vector<std::size_t> Measurement::support() const {
  std::vector<std::size_t> s;
  for (std::size_t j = 0; j < weights.size(); ++j)
    if (sgn(weights[j]) != 0) s.push_back(j);
  return s;
}

bool is_valid_measurement(const GptSystem& system, const Measurement& p) {
  const auto& effects = system.effects();
  if (p.weights.size() != effects.size()) return false;
  Rational total = 0;
  RationalVector resolved(system.linear_dimension());
  for (std::size_t j = 0; j < effects.size(); ++j) {
    if (sgn(p.weights[j]) < 0) return false;
    if (sgn(p.weights[j]) == 0) continue;
    total += p.weights[j];
    for (std::size_t k = 0; k < resolved.size(); ++k) resolved[k] += p.weights[j] * effects[j][k];
  }
  return total == 1 && resolved == system.unit_effect();
}

std::vector<RationalVector> normalize_effects(const std::vector<RationalVector>& raw_effects,
                                              const std::vector<RationalVector>& states) {
  if (states.empty()) throw InvalidSystem("normalize_effects: no states");
  RationalVector beta(states.front().size());
  for (const auto& s : states) beta = add(beta, s);
  beta = scale(beta, Rational(1, static_cast<unsigned long>(states.size())));

  std::vector<RationalVector> out;
  out.reserve(raw_effects.size());
  for (std::size_t j = 0; j < raw_effects.size(); ++j) {
    const Rational pairing = dot(raw_effects[j], beta);
    if (sgn(pairing) <= 0)
      throw InvalidSystem("effect " + std::to_string(j) +
                          " has nonpositive pairing with the state barycenter");
    out.push_back(scale(raw_effects[j], 1 / pairing));
  }
  return out;
}

Measurement permute_measurement(std::span<const std::size_t> effect_perm, const Measurement& p) {
  Measurement out{RationalVector(p.weights.size())};
  for (std::size_t j = 0; j < p.weights.size(); ++j) out.weights[effect_perm[j]] = p.weights[j];
  return out;
}

Measurement act_on_measurement(const RationalMatrix& u, const GptSystem& system,
                               const Measurement& p) {
  return permute_measurement(system.effect_permutation(u), p);
}

}  // namespace sigdim
