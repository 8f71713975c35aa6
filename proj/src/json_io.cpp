#include "gkz/json_io.hpp"

#include "gkz/error.hpp"

namespace gkz {

namespace {

[[noreturn]] void schema_error(const std::string& what) { throw Error(ErrorKind::InputParseError, what); }

}  // namespace

Json to_json(const PointConfiguration& config) {
  Json j;
  j["dim"] = config.dim();
  j["points"] = config.points();
  j["labels"] = config.labels();
  return j;
}

PointConfiguration config_from_json(const Json& j) {
  if (!j.is_object()) schema_error("configuration must be a JSON object");
  if (!j.contains("points") || !j["points"].is_array()) schema_error("configuration needs a \"points\" array");
  std::vector<LatticePoint> points;
  for (const auto& p : j["points"]) {
    if (!p.is_array()) schema_error("each point must be an array of integers");
    LatticePoint q;
    for (const auto& x : p) {
      if (!x.is_number_integer()) schema_error("point coordinates must be integers");
      q.push_back(x.get<long>());
    }
    points.push_back(std::move(q));
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array()) schema_error("\"labels\" must be an array of strings");
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) schema_error("\"labels\" must be an array of strings");
      labels.push_back(l.get<std::string>());
    }
  } else {
    labels = default_labels(points.size());
  }
  std::optional<std::size_t> dim;
  if (j.contains("dim")) {
    if (!j["dim"].is_number_unsigned()) schema_error("\"dim\" must be a positive integer");
    dim = j["dim"].get<std::size_t>();
  }
  return PointConfiguration::create(std::move(points), std::move(labels), dim);
}

Json to_json(const SparsePoly& p) {
  Json j;
  j["vars"] = p.variables();
  Json terms = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    terms.push_back({{"exp", it->first}, {"coeff", it->second.get_str()}});
  }
  j["terms"] = std::move(terms);
  return j;
}

SparsePoly poly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("terms")) {
    schema_error("polynomial needs \"vars\" and \"terms\"");
  }
  std::vector<std::string> vars;
  for (const auto& v : j["vars"]) {
    if (!v.is_string()) schema_error("polynomial variables must be strings");
    vars.push_back(v.get<std::string>());
  }
  SparsePoly p(vars);
  for (const auto& t : j["terms"]) {
    if (!t.contains("exp") || !t.contains("coeff") || !t["coeff"].is_string()) {
      schema_error("polynomial term needs \"exp\" and a string \"coeff\"");
    }
    Exponents e;
    for (const auto& x : t["exp"]) {
      if (!x.is_number_unsigned()) schema_error("exponents must be nonnegative integers");
      e.push_back(x.get<std::uint32_t>());
    }
    if (e.size() != vars.size()) schema_error("exponent vector length must match \"vars\"");
    p.add_term(e, parse_integer(t["coeff"].get<std::string>()));
  }
  return p;
}

Json to_json(const PolyMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& entry : row) r.push_back(to_json(entry));
    rows.push_back(std::move(r));
  }
  return rows;
}

SpecializationMap specialization_from_json(const Json& j) {
  if (!j.is_object()) schema_error("specialization map must be an object");
  SpecializationMap m;
  for (const auto& [name, value] : j.items()) {
    if (!value.is_string()) schema_error("specialization values must be polynomial strings");
    m.emplace(name, SparsePoly::parse(value.get<std::string>()));
  }
  return m;
}

Json simplices_to_json(const PointConfiguration& config, const Triangulation& t) {
  Json out = Json::array();
  for (const auto& s : t.simplices()) {
    Json names = Json::array();
    for (std::size_t v : s.vertices()) names.push_back(config.label(v));
    out.push_back(std::move(names));
  }
  return out;
}

Json triangulation_to_json(const PointConfiguration& config, const Triangulation& t,
                           const std::optional<HeightCertificate>& cert) {
  Json j;
  j["simplices"] = simplices_to_json(config, t);
  j["coherent"] = cert.has_value();
  if (cert) {
    Json heights = Json::array();
    for (const auto& h : cert->heights) heights.push_back(to_string(h));
    j["heights"] = std::move(heights);
    j["slack"] = to_string(cert->slack);
  } else {
    j["heights"] = nullptr;
  }
  j["gkz"] = gkz_vector(config, t).entries;
  return j;
}

namespace {

Json term_json(const PointConfiguration& config, const std::vector<long>& e, const Integer& c) {
  return {{"exp", e}, {"coeff", c.get_str()}, {"monomial", render_monomial(config, e)}};
}

}  // namespace

Json report_to_json(const PointConfiguration& config, const VerificationReport& report) {
  Json j;
  j["config"] = to_json(config);
  j["status"] = report.passed ? "PASS" : "FAIL";
  Json matched = Json::array();
  for (const auto& m : report.matched) {
    matched.push_back({{"exp", m.exponents},
                       {"game_coeff", m.game_coefficient.get_str()},
                       {"oracle_coeff", m.oracle_coefficient.get_str()},
                       {"monomial", render_monomial(config, m.exponents)}});
  }
  j["matched"] = std::move(matched);
  for (const auto& [key, list] : {std::pair{"game_only", &report.game_only}, std::pair{"oracle_only", &report.oracle_only},
                                  std::pair{"interior", &report.interior}}) {
    Json arr = Json::array();
    for (const auto& t : *list) arr.push_back(term_json(config, t.exponents, t.coefficient));
    j[key] = std::move(arr);
  }
  j["secondary_matches_newton"] = report.secondary_matches_newton;
  return j;
}

}  // namespace gkz
