#include "sigdim/cli.hpp"

#include <fstream>
#include <iostream>

#include "sigdim/models.hpp"
#include "sigdim/serialize.hpp"

namespace sigdim {

namespace {

class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Either a file or the given stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw InputError("output: cannot write " + path);
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw InputError(message);
}

unsigned positive(const std::optional<long>& v, const char* flag) {
  require(v.has_value(), std::string("--") + flag + ": required");
  require(*v >= 1, std::string("--") + flag + ": must be at least 1");
  require(*v <= 65535, std::string("--") + flag + ": too large");
  return static_cast<unsigned>(*v);
}

Rational parse_box(const std::string& text) {
  Rational box;
  try {
    box = parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw InputError("--box: cannot parse '" + text + "' as a rational");
  }
  require(sgn(box) > 0, "--box: must be positive");
  return box;
}

GptSystem load_system(const RunConfig& c) {
  require(!c.system_path.empty(), "--system: required");
  return system_from_json(read_json_file(c.system_path));
}

ConditionalDistribution load_distribution(const RunConfig& c) {
  require(!c.input_path.empty(), "--input: required");
  return distribution_from_json(read_json_file(c.input_path));
}

DimensionOptions dimension_options(const RunConfig& c) {
  DimensionOptions o;
  o.search = c.search;
  o.box = parse_box(c.box);
  o.threads = static_cast<unsigned>(c.threads);
  return o;
}

std::string set_text(const std::set<unsigned>& s) {
  std::string out = "{";
  for (unsigned k : s) out += (out.size() > 1 ? "," : "") + std::to_string(k);
  return out + "}";
}

int cmd_model(const RunConfig& c, std::ostream& out) {
  require(!c.name.empty(), "--name: required");
  GptSystem system = [&] {
    if (c.name == "squit") return squit();
    if (c.name.starts_with("C") && c.name.size() > 1 &&
        c.name.find_first_not_of("0123456789", 1) == std::string::npos) {
      const long d = std::stol(c.name.substr(1));
      require(d >= 1 && d <= 64, "--name: classical simplex dimension out of range");
      return classical_simplex(static_cast<unsigned>(d));
    }
    try {
      return compose(named_model(c.name));
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("--name: ") + e.what());
    }
  }();
  const std::string text = system_to_json(system).dump(1) + "\n";
  if (c.output_path.empty()) {
    out << text;
  } else {
    write_text_file(c.output_path, text);
    out << c.name << ": " << system.states().size() << " states, " << system.effects().size() << " effects\n";
  }
  return kOk;
}

int cmd_classify(const RunConfig& c, std::ostream& out) {
  for (const auto& m : classify_compositions(static_cast<unsigned>(c.threads)))
    out << m.name << " states " << set_text(m.entangled_state_indices) << " effects "
        << set_text(m.entangled_effect_indices) << "\n";
  const auto janotta = check_complete_positivity(named_model("JANOTTA"));
  if (janotta) out << "JANOTTA rejected: " << janotta->wiring << " = " << to_string(janotta->value) << "\n";
  return kOk;
}

int cmd_measurements(const RunConfig& c, std::ostream& out) {
  const GptSystem system = load_system(c);
  const auto measurements = enumerate_extremal_measurements(system);
  const auto group = close_group(system.symmetry_generators(), kDefaultGroupBound, system.linear_dimension());
  const auto orbits = reduce_to_orbits(measurements, group, system);
  out << measurements.size() << " measurements, " << orbits.size() << " orbits\n";
  if (!c.output_path.empty())
    write_text_file(c.output_path, orbits_to_json(orbits, measurements.size()).dump(1) + "\n");
  return kOk;
}

int cmd_vertices(const RunConfig& c, std::ostream& out) {
  out << count_vertices(positive(c.m, "m"), positive(c.n, "n"), positive(c.d, "d")).get_str() << "\n";
  return kOk;
}

int cmd_effective(const RunConfig& c, std::ostream& out) {
  const auto p = load_distribution(c);
  const unsigned d = positive(c.d, "d");
  Sink sink(c.output_path, out);
  std::size_t count = 0;
  std::string line;
  for_each_effective_vertex(p, d, [&](std::span<const Column> s) {
    line = "[";
    for (std::size_t x = 0; x < s.size(); ++x) line += (x ? "," : "") + std::to_string(s[x]);
    sink.stream() << line << "]\n";
    ++count;
  });
  if (!c.output_path.empty()) out << count << "\n";
  return kOk;
}

int cmd_dimension(const RunConfig& c, std::ostream& out) {
  const auto p = load_distribution(c);
  const auto report = minimal_classical_dimension(p, dimension_options(c));
  const auto& q = report.reduction.reduced;
  if (!verify_certificate(q, report.certificate_up) ||
      (report.certificate_down && !verify_certificate(q, *report.certificate_down)))
    throw std::logic_error("certificate failed verification");
  out << report.minimal_d << "\n";
  if (!c.output_path.empty()) write_text_file(c.output_path, report_to_json(report).dump(1) + "\n");
  return kOk;
}

int cmd_signaling(const RunConfig& c, std::ostream& out) {
  const GptSystem system = load_system(c);
  const auto result = signaling_dimension(
      system, close_group(system.symmetry_generators(), kDefaultGroupBound, system.linear_dimension()),
      dimension_options(c), 1);
  for (const auto& r : result.reports) {
    const auto& q = r.reduction.reduced;
    if (!verify_certificate(q, r.certificate_up) || (r.certificate_down && !verify_certificate(q, *r.certificate_down)))
      throw std::logic_error("certificate failed verification");
  }
  out << result.kappa << "\n";
  if (!c.report_path.empty()) write_text_file(c.report_path, signaling_to_json(result).dump(1) + "\n");
  if (!c.csv_path.empty()) write_text_file(c.csv_path, signaling_csv(result));
  return kOk;
}

int cmd_witness(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto p = load_distribution(c);
  const unsigned d = positive(c.d, "d");
  const Rational box = parse_box(c.box);
  const StrategyList vertices = c.vertices_path.empty()
                                    ? effective_vertices(p, d, static_cast<unsigned>(c.threads))
                                    : strategies_from_json(read_json_file(c.vertices_path), p.m());
  const auto witness = find_witness(p, vertices, d, box);
  if (!witness) {
    err << "no witness: p lies in the convex hull of the given vertices\n";
    return kNegative;
  }
  if (!verify_certificate(p, *witness)) {
    err << "witness does not separate p from P_" << d << " (vertex list incomplete?)\n";
    return kNegative;
  }
  out << to_string(witness->value) << "\n";
  if (!c.output_path.empty()) write_text_file(c.output_path, certificate_to_json(*witness).dump(1) + "\n");
  return kOk;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    require(config.threads >= 1, "--threads: must be at least 1");
    if (config.d) positive(config.d, "d");
    parse_box(config.box);
    const std::string& cmd = config.command;
    if (cmd == "model") return cmd_model(config, out);
    if (cmd == "classify") return cmd_classify(config, out);
    if (cmd == "measurements") return cmd_measurements(config, out);
    if (cmd == "vertices") return cmd_vertices(config, out);
    if (cmd == "effective") return cmd_effective(config, out);
    if (cmd == "dimension") return cmd_dimension(config, out);
    if (cmd == "signaling") return cmd_signaling(config, out);
    if (cmd == "witness") return cmd_witness(config, out, err);
    throw InputError("command: unknown command '" + cmd + "'");
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const InvalidSystem& e) {
    err << "error: system: " << e.what() << "\n";
  } catch (const NotASymmetry& e) {
    err << "error: system.symmetry_generators: " << e.what() << "\n";
  } catch (const InvalidDistribution& e) {
    err << "error: distribution." << e.what() << "\n";
  } catch (const DimensionMismatch& e) {
    err << "error: " << e.what() << "\n";
  }
  return kInputError;
}

}  // namespace sigdim
