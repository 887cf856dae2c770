#include "sigdim/models.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace sigdim {

namespace {

RationalMatrix squit_transform(int k, int s) {
  static constexpr int kCos[4] = {1, 0, -1, 0};
  static constexpr int kSin[4] = {0, 1, 0, -1};
  const int c = kCos[k % 4], sn = kSin[k % 4];
  return RationalMatrix::from_rows({{c, -s * sn, 0}, {sn, s * c, 0}, {0, 0, 1}});
}

RationalVector ints(std::initializer_list<int> values) {
  RationalVector v;
  for (int x : values) v.emplace_back(x);
  return v;
}

// Entangled columns 16..23; rows 2, 5, 6, 7 vanish.
constexpr int kEntangled[5][8] = {
    {-1, -1, 1, 1, -1, 1, 1, -1},   // row 0
    {1, -1, -1, 1, -1, -1, 1, 1},   // row 1 of the states, row 3 of the effects
    {1, -1, -1, 1, 1, 1, -1, -1},   // row 3 of the states, row 1 of the effects
    {1, 1, -1, -1, -1, 1, 1, -1},   // row 4
    {2, 2, 2, 2, 2, 2, 2, 2},       // row 8 of the unscaled states
};

RationalVector entangled_column(unsigned x, bool state) {
  const unsigned c = x - kFirstEntangled;
  RationalVector v(9);
  v[0] = kEntangled[0][c];
  v[1] = kEntangled[state ? 1 : 2][c];
  v[3] = kEntangled[state ? 2 : 1][c];
  v[4] = kEntangled[3][c];
  v[8] = state ? 2 : 1;
  if (state)
    for (auto& e : v) e /= 2;
  return v;
}

const std::vector<RationalVector>& squit_states() {
  static const std::vector<RationalVector> states = [] {
    std::vector<RationalVector> out;
    const RationalVector w0 = ints({1, 0, 1});
    for (int k = 0; k < 4; ++k) out.push_back(squit_transform(k, 1) * std::span<const Rational>(w0));
    return out;
  }();
  return states;
}

const std::vector<RationalVector>& squit_effects() {
  static const std::vector<RationalVector> effects = [] {
    std::vector<RationalVector> out;
    const RationalVector e0 = ints({1, 1, 1});
    for (int k = 0; k < 4; ++k) out.push_back(squit_transform(k, 1) * std::span<const Rational>(e0));
    return out;
  }();
  return effects;
}

std::vector<RationalMatrix> squit_generators() { return {squit_transform(1, 1), squit_transform(0, -1)}; }

std::string state_name(unsigned k) { return "Omega_" + std::to_string(k); }
std::string effect_name(unsigned k) { return "E_" + std::to_string(k); }

// Integer copy of a 3x3 reshape, scaled by a positive factor. Only signs are
// read from it; reported values are recomputed exactly.
using Mat3 = std::array<std::array<long long, 3>, 3>;

Mat3 int_reshape(const RationalVector& v) {
  const BigInt l = lcm_of_denominators(v);
  Mat3 m{};
  for (std::size_t i = 0; i < 9; ++i) {
    const Rational scaled = v[i] * l;
    m[i / 3][i % 3] = scaled.get_num().get_si();
  }
  return m;
}

Mat3 mul(const Mat3& a, const Mat3& b) {
  Mat3 c{};
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k)
      if (a[i][k] != 0)
        for (int j = 0; j < 3; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

Mat3 transposed(const Mat3& a) {
  Mat3 t{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[i][j] = a[j][i];
  return t;
}

long long frobenius(const Mat3& a, const Mat3& b) {
  long long s = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += a[i][j] * b[i][j];
  return s;
}

const Mat3 kIdentity3 = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};

std::vector<unsigned> model_states(const CompositionModel& model) {
  std::vector<unsigned> out;
  for (unsigned k = 0; k < kFirstEntangled; ++k) out.push_back(k);
  out.insert(out.end(), model.entangled_state_indices.begin(), model.entangled_state_indices.end());
  return out;
}

std::vector<unsigned> model_effects(const CompositionModel& model) {
  std::vector<unsigned> out;
  for (unsigned k = 0; k < kFirstEntangled; ++k) out.push_back(k);
  out.insert(out.end(), model.entangled_effect_indices.begin(), model.entangled_effect_indices.end());
  return out;
}

void check_indices(const CompositionModel& model) {
  for (const auto* set : {&model.entangled_state_indices, &model.entangled_effect_indices})
    for (unsigned k : *set)
      if (k < kFirstEntangled || k >= kCompositeCount)
        throw std::invalid_argument("entangled index " + std::to_string(k) + " outside 16..23");
}

}  // namespace

GptSystem squit() {
  return GptSystem(3, squit_states(), squit_effects(), ints({0, 0, 1}), squit_generators());
}

GptSystem classical_simplex(unsigned d) {
  if (d == 0) throw std::invalid_argument("d: must be at least 1");
  std::vector<RationalVector> states, raw;
  for (unsigned i = 0; i < d; ++i) {
    RationalVector v(d);
    v[i] = 1;
    states.push_back(v);
    raw.push_back(v);
  }
  std::vector<RationalMatrix> generators;
  if (d >= 2) {
    RationalMatrix cycle(d, d), transposition = RationalMatrix::identity(d);
    for (unsigned i = 0; i < d; ++i) cycle((i + 1) % d, i) = 1;
    transposition(0, 0) = transposition(1, 1) = 0;
    transposition(0, 1) = transposition(1, 0) = 1;
    generators = {cycle, transposition};
  }
  return GptSystem(d, states, normalize_effects(raw, states), RationalVector(d, Rational(1)),
                   std::move(generators));
}

CompositionModel named_model(const std::string& name) {
  CompositionModel m;
  m.name = name;
  if (name == "PR") {
    for (unsigned k = kFirstEntangled; k < kCompositeCount; ++k) m.entangled_state_indices.insert(k);
  } else if (name == "HS") {
    for (unsigned k = kFirstEntangled; k < kCompositeCount; ++k) m.entangled_effect_indices.insert(k);
  } else if (name.starts_with("FROZEN-") && name.size() == 9 && name[7] == '1' && name[8] >= '6' &&
             name[8] <= '9') {
    const unsigned x = 10 + static_cast<unsigned>(name[8] - '0');
    m.entangled_state_indices = {x};
    m.entangled_effect_indices = {x};
  } else if (name == "JANOTTA") {
    m.entangled_state_indices = {16, 18, 22, 23};
    m.entangled_effect_indices = {17, 19, 20, 21};
  } else {
    throw std::invalid_argument("name: unknown model '" + name + "'");
  }
  return m;
}

std::vector<CompositionModel> known_maximal_models() {
  return {named_model("PR"),        named_model("HS"),        named_model("FROZEN-16"),
          named_model("FROZEN-17"), named_model("FROZEN-18"), named_model("FROZEN-19")};
}

RationalVector composite_state(unsigned k) {
  if (k >= kCompositeCount) throw std::out_of_range("composite state index");
  if (k >= kFirstEntangled) return entangled_column(k, true);
  return kron(squit_states()[k / 4], squit_states()[k % 4]);
}

RationalVector composite_effect(unsigned k) {
  if (k >= kCompositeCount) throw std::out_of_range("composite effect index");
  if (k >= kFirstEntangled) return entangled_column(k, false);
  return kron(squit_effects()[k / 4], squit_effects()[k % 4]);
}

RationalMatrix swap_matrix() {
  RationalMatrix s(9, 9);
  for (unsigned a = 0; a < 3; ++a)
    for (unsigned b = 0; b < 3; ++b) s(3 * b + a, 3 * a + b) = 1;
  return s;
}

unsigned swap_partner(unsigned k) {
  if (k >= kCompositeCount) throw std::out_of_range("composite index");
  if (k < kFirstEntangled) return 4 * (k % 4) + k / 4;
  switch (k) {
    case 20: return 23;
    case 23: return 20;
    case 21: return 22;
    case 22: return 21;
    default: return k;
  }
}

bool is_swap_closed(const CompositionModel& model) {
  for (const auto* set : {&model.entangled_state_indices, &model.entangled_effect_indices})
    for (unsigned k : *set)
      if (!set->contains(swap_partner(k))) return false;
  return true;
}

GptSystem compose(const CompositionModel& model) {
  check_indices(model);
  if (!is_swap_closed(model)) throw InvalidSystem("model '" + model.name + "' is not closed under Swap");
  std::vector<RationalVector> states, effects;
  for (unsigned k : model_states(model)) states.push_back(composite_state(k));
  for (unsigned k : model_effects(model)) effects.push_back(composite_effect(k));
  const RationalVector unit = kron(ints({0, 0, 1}), ints({0, 0, 1}));

  const GptSystem bare(9, states, effects, unit);
  std::vector<RationalMatrix> locals;
  const auto id = RationalMatrix::identity(3);
  for (const auto& g : squit_generators()) {
    locals.push_back(kron(g, id));
    locals.push_back(kron(id, g));
  }
  bool local_invariant = true;
  for (const auto& g : locals) {
    try {
      bare.state_permutation(g);
      bare.effect_permutation(g);
    } catch (const NotASymmetry&) {
      local_invariant = false;
    }
  }
  std::vector<RationalMatrix> generators;
  if (local_invariant) generators = locals;
  generators.push_back(swap_matrix());
  return GptSystem(9, std::move(states), std::move(effects), unit, std::move(generators));
}

RationalMatrix reshape3(std::span<const Rational> v) {
  if (v.size() != 9) throw DimensionMismatch("reshape3 needs a 9-vector");
  RationalMatrix m(3, 3);
  for (std::size_t i = 0; i < 9; ++i) m(i / 3, i % 3) = v[i];
  return m;
}

WiringMap wiring_map(std::span<const Rational> omega, std::span<const Rational> effect) {
  return {(reshape3(effect) * reshape3(omega)).transpose()};
}

Rational circuit_value(const RationalMatrix& w, const RationalMatrix& f, const RationalMatrix& u0,
                       const RationalMatrix& u1, const RationalMatrix& u2) {
  const RationalMatrix chain = u0 * w * f * u1 * w * u2.transpose();
  Rational total = 0;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t d = 0; d < 3; ++d) total += chain(a, d) * f(a, d);
  return total;
}

std::optional<PositivityViolation> check_complete_positivity(const CompositionModel& model) {
  check_indices(model);
  const auto sidx = model_states(model);
  const auto eidx = model_effects(model);
  std::vector<Mat3> ws, fs;
  for (unsigned k : sidx) ws.push_back(int_reshape(composite_state(k)));
  for (unsigned k : eidx) fs.push_back(int_reshape(composite_effect(k)));

  for (std::size_t i = 0; i < ws.size(); ++i)
    for (std::size_t j = 0; j < fs.size(); ++j)
      if (frobenius(ws[i], fs[j]) < 0)
        return PositivityViolation{effect_name(eidx[j]) + " on " + state_name(sidx[i]),
                                   dot(composite_effect(eidx[j]), composite_state(sidx[i]))};

  for (std::size_t i = 0; i < ws.size(); ++i)
    for (std::size_t j = 0; j < fs.size(); ++j)
      if (frobenius(transposed(ws[i]), fs[j]) < 0) {
        const RationalVector swapped = swap_matrix() * std::span<const Rational>(composite_state(sidx[i]));
        return PositivityViolation{effect_name(eidx[j]) + " on Swap " + state_name(sidx[i]),
                                   dot(composite_effect(eidx[j]), swapped)};
      }

  for (std::size_t i = 0; i < ws.size(); ++i)
    for (std::size_t j = 0; j < fs.size(); ++j) {
      const Mat3& w = ws[i];
      const Mat3& f = fs[j];
      const Mat3 u = transposed(mul(f, w));
      for (unsigned n = 0; n < 8; ++n) {
        const Mat3& u0 = (n & 4) ? u : kIdentity3;
        const Mat3& u1 = (n & 2) ? u : kIdentity3;
        const Mat3& u2 = (n & 1) ? u : kIdentity3;
        const Mat3 chain = mul(mul(mul(mul(u0, w), f), mul(u1, w)), transposed(u2));
        if (frobenius(chain, f) >= 0) continue;
        const auto omega = composite_state(sidx[i]);
        const auto effect = composite_effect(eidx[j]);
        const auto wm = wiring_map(omega, effect).matrix;
        const auto id = RationalMatrix::identity(3);
        const Rational value = circuit_value(reshape3(omega), reshape3(effect), (n & 4) ? wm : id,
                                             (n & 2) ? wm : id, (n & 1) ? wm : id);
        return PositivityViolation{"circuit " + state_name(sidx[i]) + " x2, " + effect_name(eidx[j]) +
                                       " x2, wiring map on wires (" + std::to_string((n >> 2) & 1) + "," +
                                       std::to_string((n >> 1) & 1) + "," + std::to_string(n & 1) + ")",
                                   value};
      }
    }
  return std::nullopt;
}

std::vector<CompositionModel> classify_compositions(unsigned threads) {
  static const std::vector<std::vector<unsigned>> kClasses = {{16}, {17}, {18}, {19}, {20, 23}, {21, 22}};
  std::vector<std::set<unsigned>> subsets;
  for (unsigned mask = 0; mask < (1u << kClasses.size()); ++mask) {
    std::set<unsigned> s;
    for (std::size_t c = 0; c < kClasses.size(); ++c)
      if (mask >> c & 1) s.insert(kClasses[c].begin(), kClasses[c].end());
    subsets.push_back(std::move(s));
  }
  const std::size_t total = subsets.size() * subsets.size();
  std::vector<char> consistent(total, 0);
  auto evaluate = [&](std::size_t k) {
    CompositionModel m;
    m.entangled_state_indices = subsets[k / subsets.size()];
    m.entangled_effect_indices = subsets[k % subsets.size()];
    consistent[k] = check_complete_positivity(m) ? 0 : 1;
  };
  if (threads <= 1) {
    for (std::size_t k = 0; k < total; ++k) evaluate(k);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < total; k = next++) evaluate(k);
      });
  }

  auto includes = [](const std::set<unsigned>& big, const std::set<unsigned>& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
  };
  std::vector<CompositionModel> maximal;
  for (std::size_t k = 0; k < total; ++k) {
    if (!consistent[k]) continue;
    const auto& s = subsets[k / subsets.size()];
    const auto& e = subsets[k % subsets.size()];
    bool dominated = false;
    for (std::size_t o = 0; o < total && !dominated; ++o)
      dominated = o != k && consistent[o] && includes(subsets[o / subsets.size()], s) &&
                  includes(subsets[o % subsets.size()], e);
    if (dominated) continue;
    CompositionModel m;
    m.entangled_state_indices = s;
    m.entangled_effect_indices = e;
    for (const auto& known : known_maximal_models())
      if (known.entangled_state_indices == s && known.entangled_effect_indices == e) m.name = known.name;
    maximal.push_back(std::move(m));
  }
  // Named models first in their usual order, anything else after.
  std::vector<CompositionModel> ordered;
  for (const auto& known : known_maximal_models())
    for (const auto& m : maximal)
      if (m.name == known.name) ordered.push_back(m);
  for (const auto& m : maximal)
    if (m.name == "custom") ordered.push_back(m);
  return ordered;
}

JanottaValues janotta_swap_values() {
  const RationalMatrix s = swap_matrix();
  const RationalVector e20 = composite_effect(20);
  return {dot(e20, s * std::span<const Rational>(composite_state(22))),
          dot(e20, s * std::span<const Rational>(composite_state(23)))};
}

}  // namespace sigdim
