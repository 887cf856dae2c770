#include "sigdim/signaling.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace sigdim {

ConditionalDistribution induced_distribution(const GptSystem& system, const Measurement& p) {
  if (!is_valid_measurement(system, p)) throw std::invalid_argument("weights: not a measurement of the system");
  const auto support = p.support();
  RationalMatrix probs(system.states().size(), support.size());
  for (std::size_t x = 0; x < system.states().size(); ++x)
    for (std::size_t k = 0; k < support.size(); ++k)
      probs(x, k) = p.weights[support[k]] * dot(system.effects()[support[k]], system.states()[x]);
  return ConditionalDistribution(std::move(probs));
}

namespace {

MembershipResult test_dimension(const ConditionalDistribution& p, unsigned d, const DimensionOptions& options,
                                std::size_t& vertex_count) {
  const StrategyList vertices = effective_vertices(p, d, options.threads);
  vertex_count = vertices.size();
  return decide_membership(p, vertices, d, options.box, options.lp);
}

}  // namespace

DimensionReport minimal_classical_dimension(const ConditionalDistribution& p, const DimensionOptions& options) {
  DimensionReport report;
  report.reduction = reduce_rows(p);
  const ConditionalDistribution& q = report.reduction.reduced;
  for (std::size_t y = 0; y < q.n(); ++y) {
    bool used = false;
    for (std::size_t x = 0; x < q.m() && !used; ++x) used = sgn(q(x, y)) > 0;
    if (used) ++report.support_size;
  }

  std::map<unsigned, MembershipResult> tested;
  std::map<unsigned, std::size_t> counts;
  auto test = [&](unsigned d) -> const MembershipResult& {
    auto it = tested.find(d);
    if (it == tested.end()) it = tested.emplace(d, test_dimension(q, d, options, counts[d])).first;
    return it->second;
  };

  // q always lies in P_d once d reaches min(m, n).
  const unsigned upper = static_cast<unsigned>(std::min(q.m(), q.n()));
  unsigned d = 0;
  if (options.search == SearchOrder::Linear) {
    for (d = 1; d < upper && !test(d).decomposition; ++d) {
    }
  } else {
    unsigned lo = 1, hi = upper;
    while (lo < hi) {
      const unsigned mid = lo + (hi - lo) / 2;
      if (test(mid).decomposition)
        hi = mid;
      else
        lo = mid + 1;
    }
    d = lo;
  }
  const auto& up = test(d);
  if (!up.decomposition) throw std::logic_error("no decomposition at the full dimension");
  report.minimal_d = d;
  report.certificate_up = *up.decomposition;
  report.v_used = counts[d];
  report.V_total = count_vertices(static_cast<unsigned>(q.m()), static_cast<unsigned>(q.n()), d);
  if (d > 1) {
    const auto& down = test(d - 1);
    if (!down.witness || !verify_certificate(q, *down.witness))
      throw std::logic_error("witness against d - 1 failed verification");
    report.certificate_down = *down.witness;
  }
  return report;
}

SignalingResult signaling_dimension(const GptSystem& system, const SymmetryGroup& group,
                                    const DimensionOptions& options, unsigned orbit_threads) {
  SignalingResult result;
  result.orbits = reduce_to_orbits(enumerate_extremal_measurements(system), group, system);

  std::vector<std::size_t> order(result.orbits.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto support_of = [&](std::size_t i) { return result.orbits[i].representative.support().size(); };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return support_of(a) > support_of(b);
  });

  for (std::size_t start = 0; start < order.size();) {
    const std::size_t k = support_of(order[start]);
    std::size_t end = start;
    while (end < order.size() && support_of(order[end]) == k) ++end;
    if (k <= result.kappa) {
      for (std::size_t i = start; i < end; ++i) result.skipped.push_back(result.orbits[order[i]].class_id);
      start = end;
      continue;
    }

    std::vector<DimensionReport> group_reports(end - start);
    auto evaluate = [&](std::size_t i) {
      const auto& orbit = result.orbits[order[start + i]];
      group_reports[i] = minimal_classical_dimension(induced_distribution(system, orbit.representative), options);
      group_reports[i].measurement_class = orbit.class_id;
    };
    if (orbit_threads <= 1 || end - start == 1) {
      for (std::size_t i = 0; i < group_reports.size(); ++i) evaluate(i);
    } else {
      std::atomic<std::size_t> next{0};
      std::exception_ptr failure;
      std::mutex failure_mutex;
      auto worker = [&] {
        for (std::size_t i = next++; i < group_reports.size(); i = next++) {
          try {
            evaluate(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      };
      {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < std::min<std::size_t>(orbit_threads, group_reports.size()); ++t)
          pool.emplace_back(worker);
      }
      if (failure) std::rethrow_exception(failure);
    }
    for (auto& r : group_reports) {
      result.kappa = std::max(result.kappa, r.minimal_d);
      result.reports.push_back(std::move(r));
    }
    start = end;
  }
  return result;
}

SignalingResult signaling_dimension(const GptSystem& system, const DimensionOptions& options) {
  return signaling_dimension(system, close_group(system.symmetry_generators(), kDefaultGroupBound,
                                                 system.linear_dimension()),
                             options);
}

}  // namespace sigdim
