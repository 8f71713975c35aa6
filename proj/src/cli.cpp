#include "gkz/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "gkz/error.hpp"
#include "gkz/game.hpp"
#include "gkz/json_io.hpp"
#include "gkz/resultant.hpp"
#include "gkz/triangulation.hpp"

namespace gkz::cli {

namespace {

std::string read_input(const CommandRequest& req, std::istream& in) {
  if (req.input_path.empty() || req.input_path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(req.input_path, std::ios::binary);
  if (!file) throw Error(ErrorKind::InputParseError, "cannot open " + req.input_path);
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InputParseError, e.what());
  }
}

PointConfiguration load_config(const CommandRequest& req, std::istream& in) {
  return config_from_json(parse_json(read_input(req, in)));
}

std::string join(const std::vector<long>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

std::string simplices_text(const PointConfiguration& config, const Triangulation& t) {
  std::string s;
  for (const auto& simplex : t.simplices()) {
    if (!s.empty()) s += ' ';
    s += simplex_name(config, simplex);
  }
  return s;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::size_t require_degree(const CommandRequest& req, std::size_t minimum) {
  if (!req.degree) throw Error(ErrorKind::InvalidInput, req.command + " needs --degree");
  if (*req.degree < minimum) {
    throw Error(ErrorKind::InvalidInput, "--degree must be at least " + std::to_string(minimum));
  }
  return *req.degree;
}

int cmd_hull(const CommandRequest& req, std::istream& in, std::ostream& out) {
  auto config = load_config(req, in);
  auto fs = faces(config);
  auto vertices = hull_vertices(config);
  auto volume = hull_volume(config);
  if (req.format == OutputFormat::Json) {
    Json j;
    j["dim"] = config.dim();
    j["volume"] = volume.get_str();
    Json vs = Json::array();
    for (auto v : vertices) vs.push_back(config.label(v));
    j["vertices"] = vs;
    Json farr = Json::array();
    for (const auto& f : fs) {
      Json names = Json::array();
      for (auto i : f.point_indices) names.push_back(config.label(i));
      farr.push_back({{"dim", f.dim}, {"points", names}, {"normal", f.supporting_normal}});
    }
    j["faces"] = farr;
    emit(out, j);
    return 0;
  }
  out << "dim " << config.dim() << ", " << config.size() << " points, volume " << volume << '\n';
  out << "vertices:";
  for (auto v : vertices) out << ' ' << config.label(v);
  out << '\n' << "faces:\n";
  for (const auto& f : fs) {
    out << "  dim " << f.dim << "  {";
    for (std::size_t k = 0; k < f.point_indices.size(); ++k) {
      out << (k ? " " : "") << config.label(f.point_indices[k]);
    }
    out << "}  normal (" << join(f.supporting_normal) << ")\n";
  }
  return 0;
}

int cmd_triangulate(const CommandRequest& req, std::istream& in, std::ostream& out) {
  auto config = load_config(req, in);
  EnumerationOptions options{req.cap};
  std::vector<std::pair<Triangulation, std::optional<HeightCertificate>>> rows;
  if (req.include_noncoherent) {
    for (auto& t : enumerate_triangulations(config, options)) {
      auto cert = is_coherent(config, t);
      rows.emplace_back(std::move(t), std::move(cert));
    }
  } else {
    for (auto& c : enumerate_coherent_triangulations(config, options)) {
      rows.emplace_back(std::move(c.triangulation), std::move(c.certificate));
    }
  }
  if (req.format == OutputFormat::Json) {
    Json arr = Json::array();
    for (const auto& [t, cert] : rows) arr.push_back(triangulation_to_json(config, t, cert));
    emit(out, arr);
    return 0;
  }
  for (const auto& [t, cert] : rows) {
    out << simplices_text(config, t) << "  gkz (" << join(gkz_vector(config, t).entries) << ")";
    if (cert) {
      out << "  coherent, heights (";
      for (std::size_t i = 0; i < cert->heights.size(); ++i) out << (i ? "," : "") << to_string(cert->heights[i]);
      out << ")\n";
    } else {
      out << "  not coherent\n";
    }
  }
  return 0;
}

int cmd_gkz(const CommandRequest& req, std::istream& in, std::ostream& out) {
  auto config = load_config(req, in);
  auto coherent = enumerate_coherent_triangulations(config, EnumerationOptions{req.cap});
  if (req.format == OutputFormat::Json) {
    Json arr = Json::array();
    for (const auto& c : coherent) {
      arr.push_back({{"gkz", gkz_vector(config, c.triangulation).entries},
                     {"simplices", simplices_to_json(config, c.triangulation)}});
    }
    emit(out, arr);
    return 0;
  }
  for (const auto& c : coherent) {
    out << "(" << join(gkz_vector(config, c.triangulation).entries) << ")  "
        << simplices_text(config, c.triangulation) << '\n';
  }
  return 0;
}

int cmd_game(const CommandRequest& req, std::istream& in, std::ostream& out) {
  auto config = load_config(req, in);
  auto terms = all_game_terms(config, EnumerationOptions{req.cap});
  if (req.format == OutputFormat::Json) {
    Json arr = Json::array();
    for (const auto& t : terms) {
      arr.push_back({{"coeff", t.coefficient.get_str()},
                     {"exp", t.exponents.entries},
                     {"simplices", simplices_to_json(config, t.source)}});
    }
    emit(out, arr);
    return 0;
  }
  for (const auto& t : terms) {
    out << t.coefficient << "·" << render_monomial(config, t.exponents.entries) << '\n';
  }
  return 0;
}

int cmd_chow(const CommandRequest& req, std::istream& in, std::ostream& out) {
  auto config = load_config(req, in);
  auto coherent = enumerate_coherent_triangulations(config, EnumerationOptions{req.cap});
  if (req.format == OutputFormat::Json) {
    Json arr = Json::array();
    for (const auto& c : coherent) {
      auto m = chow_monomial(config, c.triangulation);
      Json factors = Json::array();
      for (const auto& [s, mult] : m.factors) {
        Json names = Json::array();
        for (auto v : s.vertices()) names.push_back(config.label(v));
        factors.push_back({{"simplex", names}, {"multiplicity", mult}});
      }
      arr.push_back({{"factors", factors}, {"rendered", m.render(config)}});
    }
    emit(out, arr);
    return 0;
  }
  for (const auto& c : coherent) out << chow_monomial(config, c.triangulation).render(config) << '\n';
  return 0;
}

int cmd_secondary(const CommandRequest& req, std::istream& in, std::ostream& out) {
  auto config = load_config(req, in);
  auto poly = secondary_polytope(config, EnumerationOptions{req.cap});
  if (req.format == OutputFormat::Json) {
    Json arr = Json::array();
    for (const auto& [v, t] : poly.vertices) {
      arr.push_back({{"gkz", v.entries}, {"simplices", simplices_to_json(config, t)}});
    }
    emit(out, Json{{"vertex_count", poly.vertices.size()}, {"vertices", arr}});
    return 0;
  }
  out << poly.vertices.size() << " vertices\n";
  for (const auto& [v, t] : poly.vertices) out << "(" << join(v.entries) << ")  " << simplices_text(config, t) << '\n';
  return 0;
}

std::vector<SparsePoly> coefficient_list(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw Error(ErrorKind::InputParseError, std::string("expected an array \"") + key + "\" of coefficient strings");
  }
  std::vector<SparsePoly> coeffs;
  for (const auto& c : j[key]) {
    if (!c.is_string()) throw Error(ErrorKind::InputParseError, "coefficients must be strings");
    coeffs.push_back(SparsePoly::parse(c.get<std::string>()));
  }
  return coeffs;
}

int cmd_resultant(const CommandRequest& req, std::istream& in, std::ostream& out) {
  PolyMatrix m;
  if (req.degree) {
    auto d = require_degree(req, 1);
    m = sylvester_matrix(UnivariateSymbolic::generic(d, "1"), UnivariateSymbolic::generic(d, "2"));
  } else {
    auto j = parse_json(read_input(req, in));
    auto f = coefficient_list(j, "f");
    auto g = coefficient_list(j, "g");
    m = sylvester_matrix(f, g);
  }
  auto r = bareiss_determinant(m);
  if (req.format == OutputFormat::Json) {
    emit(out, Json{{"matrix", to_json(m)}, {"resultant", to_json(r)}});
    return 0;
  }
  for (const auto& row : m) {
    for (std::size_t k = 0; k < row.size(); ++k) out << (k ? "\t" : "") << row[k].to_string();
    out << '\n';
  }
  out << "resultant: " << r.to_string() << '\n';
  return 0;
}

int print_poly(const CommandRequest& req, const SparsePoly& p, std::ostream& out) {
  if (req.format == OutputFormat::Json) {
    emit(out, to_json(p));
  } else {
    out << p.to_string() << '\n';
  }
  return 0;
}

int cmd_discriminant(const CommandRequest& req, std::ostream& out) {
  return print_poly(req, discriminant_univariate(require_degree(req, 2)), out);
}

int cmd_ea(const CommandRequest& req, std::istream& in, std::ostream& out) {
  if (req.degree) return print_poly(req, ea_univariate(require_degree(req, 2)), out);
  return print_poly(req, ea_oracle(load_config(req, in)), out);
}

int cmd_verify(const CommandRequest& req, std::istream& in, std::ostream& out) {
  auto config = load_config(req, in);
  auto report = verify_main_theorem(config, EnumerationOptions{req.cap});
  int status = report.passed ? 0 : 1;
  if (req.format == OutputFormat::Json) {
    emit(out, report_to_json(config, report));
    return status;
  }
  out << "verify: " << (report.passed ? "PASS" : "FAIL") << '\n';
  out << "matched " << report.matched.size() << ":\n";
  for (const auto& m : report.matched) {
    out << "  " << m.game_coefficient << "·" << render_monomial(config, m.exponents) << "  (oracle "
        << m.oracle_coefficient << ")\n";
  }
  auto section = [&](const char* name, const std::vector<ReportTerm>& terms) {
    out << name << ' ' << terms.size() << ":\n";
    for (const auto& t : terms) out << "  " << t.coefficient << "·" << render_monomial(config, t.exponents) << '\n';
  };
  section("game only", report.game_only);
  section("oracle only", report.oracle_only);
  section("interior", report.interior);
  out << "secondary polytope vertices = Newton polytope vertices: "
      << (report.secondary_matches_newton ? "yes" : "no") << '\n';
  return status;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"hull", "triangulate", "gkz", "game", "chow",
                                              "secondary", "resultant", "discriminant", "ea", "verify"};
  return names;
}

int run(const CommandRequest& req, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    const auto& c = req.command;
    if (c == "hull") return cmd_hull(req, in, out);
    if (c == "triangulate") return cmd_triangulate(req, in, out);
    if (c == "gkz") return cmd_gkz(req, in, out);
    if (c == "game") return cmd_game(req, in, out);
    if (c == "chow") return cmd_chow(req, in, out);
    if (c == "secondary") return cmd_secondary(req, in, out);
    if (c == "resultant") return cmd_resultant(req, in, out);
    if (c == "discriminant") return cmd_discriminant(req, out);
    if (c == "ea") return cmd_ea(req, in, out);
    if (c == "verify") return cmd_verify(req, in, out);
    err << "unknown command: " << c << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 3;
  }
}

int main(int argc, char** argv) {
  CLI::App app{"Coherent triangulations, GKZ game terms and resultant oracles for lattice point configurations"};
  CommandRequest req;
  std::string format = "text";
  app.add_option("command", req.command, "Command to run")->required()->check(CLI::IsMember(command_names()));
  app.add_option("input", req.input_path, "Input JSON file (stdin when omitted or '-')");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--cap", req.cap, "Maximum number of points for enumeration")->check(CLI::PositiveNumber);
  app.add_flag("--include-noncoherent", req.include_noncoherent, "triangulate: also list non-coherent triangulations");
  app.add_option("--degree", req.degree, "Polynomial degree for resultant, discriminant and ea");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  req.format = format == "json" ? OutputFormat::Json : OutputFormat::Text;
  return run(req, std::cin, std::cout, std::cerr);
}

}  // namespace gkz::cli
