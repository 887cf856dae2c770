#include "sigdim/serialize.hpp"

#include <fstream>
#include <sstream>

namespace sigdim {

namespace {

Json rational_json(const Rational& q) { return to_string(q); }

Json vector_json(std::span<const Rational> v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(rational_json(q));
  return out;
}

Json matrix_json(const RationalMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_json(m.row(r)));
  return out;
}

const Json& field(const Json& doc, const std::string& name, const std::string& where) {
  if (!doc.is_object()) throw SchemaError(where + ": expected an object");
  auto it = doc.find(name);
  if (it == doc.end()) throw SchemaError(where + "." + name + ": missing");
  return *it;
}

Rational parse_entry(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw SchemaError(where + ": expected a rational string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument&) {
    throw SchemaError(where + ": cannot parse '" + j.get<std::string>() + "' as a rational");
  }
}

RationalVector parse_vector(const Json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + ": expected an array");
  RationalVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(parse_entry(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

std::vector<RationalVector> parse_vectors(const Json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + ": expected an array");
  std::vector<RationalVector> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_vector(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

void check_format(const Json& doc) {
  const Json& f = field(doc, "format", "document");
  if (!f.is_number_integer() || f.get<long>() != 1) throw SchemaError("document.format: expected 1");
}

Json assignment_json(std::span<const Column> s) {
  Json out = Json::array();
  for (auto c : s) out.push_back(c);
  return out;
}

}  // namespace

Json system_to_json(const GptSystem& system) {
  Json doc;
  doc["format"] = 1;
  doc["linear_dimension"] = system.linear_dimension();
  Json states = Json::array(), effects = Json::array(), gens = Json::array();
  for (const auto& s : system.states()) states.push_back(vector_json(s));
  for (const auto& e : system.effects()) effects.push_back(vector_json(e));
  for (const auto& g : system.symmetry_generators()) gens.push_back(matrix_json(g));
  doc["states"] = std::move(states);
  doc["effects"] = std::move(effects);
  doc["unit_effect"] = vector_json(system.unit_effect());
  doc["symmetry_generators"] = std::move(gens);
  return doc;
}

GptSystem system_from_json(const Json& doc) {
  check_format(doc);
  const Json& dim = field(doc, "linear_dimension", "system");
  if (!dim.is_number_unsigned() || dim.get<std::size_t>() == 0)
    throw SchemaError("system.linear_dimension: expected a positive integer");
  auto states = parse_vectors(field(doc, "states", "system"), "system.states");
  auto effects = parse_vectors(field(doc, "effects", "system"), "system.effects");
  auto unit = parse_vector(field(doc, "unit_effect", "system"), "system.unit_effect");
  std::vector<RationalMatrix> gens;
  if (doc.contains("symmetry_generators")) {
    const Json& g = doc["symmetry_generators"];
    if (!g.is_array()) throw SchemaError("system.symmetry_generators: expected an array");
    for (std::size_t i = 0; i < g.size(); ++i) {
      const std::string where = "system.symmetry_generators[" + std::to_string(i) + "]";
      auto rows = parse_vectors(g[i], where);
      for (const auto& r : rows)
        if (r.size() != rows.size()) throw SchemaError(where + ": expected a square matrix");
      gens.push_back(RationalMatrix::from_rows(rows));
    }
  }
  return GptSystem(dim.get<std::size_t>(), std::move(states), std::move(effects), std::move(unit),
                   std::move(gens));
}

Json distribution_to_json(const ConditionalDistribution& p) {
  Json doc;
  doc["format"] = 1;
  doc["m"] = p.m();
  doc["n"] = p.n();
  doc["probs"] = matrix_json(p.probs());
  return doc;
}

ConditionalDistribution distribution_from_json(const Json& doc) {
  check_format(doc);
  auto rows = parse_vectors(field(doc, "probs", "distribution"), "distribution.probs");
  if (rows.empty()) throw SchemaError("distribution.probs: expected at least one row");
  for (std::size_t x = 0; x < rows.size(); ++x)
    if (rows[x].size() != rows[0].size())
      throw SchemaError("distribution.probs[" + std::to_string(x) + "]: row length differs from row 0");
  for (const char* key : {"m", "n"})
    if (doc.contains(key)) {
      const std::size_t expect = std::string(key) == "m" ? rows.size() : rows[0].size();
      if (!doc[key].is_number_unsigned() || doc[key].get<std::size_t>() != expect)
        throw SchemaError(std::string("distribution.") + key + ": does not match probs");
    }
  try {
    return ConditionalDistribution(RationalMatrix::from_rows(rows));
  } catch (const InvalidDistribution& e) {
    throw SchemaError(std::string("distribution.") + e.what());
  }
}

Json strategies_to_json(const StrategyList& strategies) {
  Json out = Json::array();
  for (std::size_t i = 0; i < strategies.size(); ++i) out.push_back(assignment_json(strategies[i]));
  return out;
}

StrategyList strategies_from_json(const Json& doc, std::size_t rows) {
  if (!doc.is_array()) throw SchemaError("vertices: expected an array");
  StrategyList out(rows);
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const std::string where = "vertices[" + std::to_string(i) + "]";
    if (!doc[i].is_array() || doc[i].size() != rows)
      throw SchemaError(where + ": expected " + std::to_string(rows) + " column indices");
    std::vector<Column> s;
    for (const auto& c : doc[i]) {
      if (!c.is_number_unsigned() || c.get<std::size_t>() > std::numeric_limits<Column>::max())
        throw SchemaError(where + ": expected column indices");
      s.push_back(c.get<Column>());
    }
    out.push_back(s);
  }
  return out;
}

Json certificate_to_json(const DecompositionCertificate& cert) {
  Json doc;
  doc["format"] = 1;
  doc["type"] = "decomposition";
  doc["d"] = cert.d;
  Json weights = Json::object();
  for (const auto& [s, w] : cert.weights) weights[assignment_json(s.assignment).dump()] = rational_json(w);
  doc["weights"] = std::move(weights);
  return doc;
}

Json certificate_to_json(const WitnessCertificate& cert) {
  Json doc;
  doc["format"] = 1;
  doc["type"] = "witness";
  doc["d"] = cert.d;
  doc["box"] = rational_json(cert.box);
  doc["game"] = matrix_json(cert.game);
  doc["value"] = rational_json(cert.value);
  doc["max_classical"] = cert.max_classical ? rational_json(*cert.max_classical) : Json();
  return doc;
}

Json orbits_to_json(const std::vector<MeasurementOrbit>& orbits, std::size_t measurement_count) {
  Json doc;
  doc["format"] = 1;
  doc["measurements"] = measurement_count;
  Json list = Json::array();
  for (const auto& o : orbits) {
    Json item;
    item["class_id"] = o.class_id;
    item["size"] = o.size;
    item["support"] = o.representative.support();
    item["weights"] = vector_json(o.representative.weights);
    Json scaled = Json::array();
    for (const auto& w : o.representative.weights) {
      const Rational x = w * 240;
      if (x.get_den() == 1)
        scaled.push_back(x.get_num().get_si());
      else
        scaled.push_back(to_string(x));
    }
    item["weights_x240"] = std::move(scaled);
    list.push_back(std::move(item));
  }
  doc["orbits"] = std::move(list);
  return doc;
}

Json report_to_json(const DimensionReport& report) {
  Json doc;
  doc["measurement_class"] = report.measurement_class;
  doc["support_size"] = report.support_size;
  doc["kept_rows"] = report.reduction.kept_rows;
  doc["minimal_d"] = report.minimal_d;
  doc["v_used"] = report.v_used;
  doc["V_total"] = report.V_total.get_str();
  doc["certificate_up"] = certificate_to_json(report.certificate_up);
  doc["certificate_down"] = report.certificate_down ? certificate_to_json(*report.certificate_down) : Json();
  return doc;
}

Json signaling_to_json(const SignalingResult& result) {
  Json doc;
  doc["format"] = 1;
  doc["signaling_dimension"] = result.kappa;
  doc["orbit_count"] = result.orbits.size();
  doc["skipped"] = result.skipped;
  Json reports = Json::array();
  for (const auto& r : result.reports) reports.push_back(report_to_json(r));
  doc["reports"] = std::move(reports);
  return doc;
}

std::string signaling_csv(const SignalingResult& result) {
  std::ostringstream out;
  out << "M,#,d,witness value,v,V\n";
  for (const auto& r : result.reports) {
    out << r.measurement_class << ',' << r.support_size << ',' << r.minimal_d << ','
        << (r.certificate_down ? to_string(r.certificate_down->value) : "") << ',' << r.v_used << ','
        << r.V_total.get_str() << '\n';
  }
  return out.str();
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError(path + ": cannot open");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError(path + ": malformed JSON (byte " + std::to_string(e.byte) + ")");
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path + ": cannot write");
  out << text;
  if (!out) throw std::runtime_error(path + ": write failed");
}

}  // namespace sigdim
