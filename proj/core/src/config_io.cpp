#include "eocloak/config_io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace eocloak {

namespace {

using nlohmann::json;

Vec2 vec_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected [x, y] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

Parity parity_from_string(const std::string& s) {
  if (s == "cos") return Parity::Cos;
  if (s == "sin") return Parity::Sin;
  throw std::invalid_argument("phase must be 'cos' or 'sin'");
}

std::string format_cell(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string opt_cell(const std::optional<double>& v) {
  return v ? format_cell(*v) : std::string();
}

} // namespace

Curve curve_from_json(const json& j, int default_n) {
  if (!j.is_object() || !j.contains("kind"))
    throw std::invalid_argument("geometry document needs a 'kind'");
  const std::string kind = j.at("kind").get<std::string>();
  const int n = j.value("N", default_n);

  if (kind == "circle") {
    const Vec2 c = j.contains("center") ? vec_from_json(j.at("center")) : Vec2{0.0, 0.0};
    Curve cur = make_circle(c, j.at("radius").get<double>(), n);
    return j.contains("shrink") ? shrink_conformal(cur, j.at("shrink").get<double>()) : cur;
  }
  if (kind == "ellipse")
    return make_confocal_ellipse(j.value("focal", 1.0), j.at("xi").get<double>(), n);
  if (kind == "flower" || kind == "kite" || kind == "peanut" ||
      (kind.rfind("polygon", 0) == 0 && kind.size() == 8)) {
    Curve cur = make_named_shape(kind, j.value("scale", 1.0), n);
    return j.contains("shrink") ? shrink_conformal(cur, j.at("shrink").get<double>()) : cur;
  }
  if (kind == "polygon") {
    Curve cur = make_rounded_polygon(j.at("k").get<int>(), j.value("scale", 1.0), n);
    return j.contains("shrink") ? shrink_conformal(cur, j.at("shrink").get<double>()) : cur;
  }
  throw std::invalid_argument("unknown geometry kind: " + kind);
}

HarmonicField field_from_json(const json& j) {
  HarmonicField f;
  const std::string family = j.at("family").get<std::string>();
  if (family == "uniform-x") {
    f.family = FieldFamily::UniformX;
  } else if (family == "uniform-y") {
    f.family = FieldFamily::UniformY;
  } else if (family == "disk-multipole") {
    f.family = FieldFamily::DiskMultipole;
  } else if (family == "elliptic-cos") {
    f.family = FieldFamily::EllipticCos;
  } else if (family == "elliptic-sin") {
    f.family = FieldFamily::EllipticSin;
  } else {
    throw std::invalid_argument("unknown field family: " + family);
  }
  f.order = j.value("n", 1);
  if (f.order < 0) throw std::invalid_argument("field order must be >= 0");
  if (j.contains("phase")) f.phase = parity_from_string(j.at("phase").get<std::string>());
  f.amplitude = j.value("amplitude", 1.0);
  f.focal = j.value("focal", 1.0);
  return f;
}

RunConfig parse_config(const json& j, int n_override) {
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  RunConfig rc;
  rc.n_nodes = n_override > 0 ? n_override : j.value("N", 256);

  json resolved = j;
  resolved["N"] = rc.n_nodes;
  if (!resolved.contains("epsilon_m")) resolved["epsilon_m"] = 1.0;
  if (!resolved.contains("zeta0")) resolved["zeta0"] = 0.0;
  if (!resolved.contains("P")) resolved["P"] = "auto";
  if (!resolved.contains("slip_source")) resolved["slip_source"] = "exterior";

  const int dn = rc.n_nodes;
  rc.cloak.core = curve_from_json(resolved.at("B"), n_override > 0 ? n_override : dn);
  rc.cloak.object = curve_from_json(resolved.at("D"), n_override > 0 ? n_override : dn);
  rc.cloak.region = curve_from_json(resolved.at("Omega"), n_override > 0 ? n_override : dn);
  rc.cloak.eps_m = resolved.at("epsilon_m").get<double>();
  rc.cloak.eps_s = resolved.value("epsilon_s", 2.0 * rc.cloak.eps_m);
  rc.cloak.zeta0 = resolved.at("zeta0").get<double>();
  rc.cloak.H = field_from_json(resolved.at("H"));
  if (resolved.at("P").is_string()) {
    if (resolved.at("P").get<std::string>() != "auto")
      throw std::invalid_argument("P must be 'auto' or a field object");
    rc.cloak.P = pressure_partner(rc.cloak.H);
  } else {
    rc.cloak.P = field_from_json(resolved.at("P"));
  }
  rc.slip_source = parse_slip_source(resolved.at("slip_source").get<std::string>());

  auto interval = [](const json& ij) {
    if (!ij.is_array() || ij.size() != 2)
      throw std::invalid_argument("interval must be [lo, hi]");
    return Interval{ij[0].get<double>(), ij[1].get<double>()};
  };
  if (resolved.contains("epsilon_interval"))
    rc.eps_interval = interval(resolved.at("epsilon_interval"));
  if (resolved.contains("zeta_interval"))
    rc.zeta_interval = interval(resolved.at("zeta_interval"));

  rc.resolved = std::move(resolved);
  return rc;
}

RunConfig load_config(const std::filesystem::path& path, int n_override) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path.string());
  json j;
  in >> j;
  return parse_config(j, n_override);
}

UnitSystem units_from_json(const json& j) {
  UnitSystem u;
  u.gap = j.value("gap", u.gap);
  u.length = j.value("length", u.length);
  u.viscosity = j.value("viscosity", u.viscosity);
  u.permittivity = j.value("permittivity", u.permittivity);
  u.field = j.value("field", u.field);
  u.velocity = j.value("velocity", u.velocity);
  u.validate();
  return u;
}

UnitSystem load_units(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open units file: " + path.string());
  json j;
  in >> j;
  return units_from_json(j);
}

std::string content_hash(const json& j) {
  const std::string dump = j.dump(); // nlohmann dumps objects with sorted keys
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : dump) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void write_grid_csv(std::ostream& out, const GridExport& grid) {
  out << "x,y,region,phi,phi_err,p,p_err,ux,uy\n";
  for (const GridRow& r : grid.rows) {
    out << format_cell(r.x) << ',' << format_cell(r.y) << ',' << to_string(r.region) << ','
        << opt_cell(r.phi) << ',' << opt_cell(r.phi_err) << ',' << opt_cell(r.p) << ','
        << opt_cell(r.p_err) << ',' << opt_cell(r.ux) << ',' << opt_cell(r.uy) << '\n';
  }
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "parameter,e_max_phi,l2_phi,e_max_p,l2_p,e_max_u\n";
  for (const SweepRow& r : rows) {
    out << format_cell(r.value) << ',' << format_cell(r.errors.max_phi_err) << ','
        << format_cell(r.errors.l2_phi_err) << ',' << format_cell(r.errors.max_p_err) << ','
        << format_cell(r.errors.l2_p_err) << ',' << format_cell(r.errors.max_u_err) << '\n';
  }
}

json to_json(const CloakErrorSummary& s) {
  auto annulus = [](const SamplingAnnulus& a) {
    return json{{"center", {a.center.x, a.center.y}},
                {"r0", a.r0},
                {"r1", a.r1},
                {"n_radial", a.n_radial},
                {"n_angular", a.n_angular}};
  };
  return json{{"electric_set", annulus(s.electric_set)},
              {"hydro_set", annulus(s.hydro_set)},
              {"max_phi_err", s.max_phi_err},
              {"l2_phi_err", s.l2_phi_err},
              {"max_p_err", s.max_p_err},
              {"l2_p_err", s.l2_p_err},
              {"max_u_err", s.max_u_err}};
}

json to_json(const OptimizationReport& r) {
  json cert{{"sqrt_G", r.certificate.sqrt_G},
            {"sqrt_F", r.certificate.sqrt_F},
            {"max_phi_err", r.certificate.max_phi_err},
            {"max_p_err", r.certificate.max_p_err}};
  cert["C_e"] = r.certificate.C_e ? json(*r.certificate.C_e) : json("not-applicable");
  cert["C_h"] = r.certificate.C_h ? json(*r.certificate.C_h) : json("not-applicable");
  return json{{"epsilon_m", r.eps_m},
              {"epsilon_opt", r.eps_opt},
              {"G", r.G},
              {"zeta_opt", r.zeta_opt},
              {"F", r.F},
              {"epsilon_interval", {r.eps_interval.lo, r.eps_interval.hi}},
              {"zeta_interval", {r.zeta_interval.lo, r.zeta_interval.hi}},
              {"epsilon_clipped", r.eps_clipped},
              {"zeta_clipped", r.zeta_clipped},
              {"gauge_constant", r.gauge_constant},
              {"slip_source", to_string(r.slip_source)},
              {"boundary_residual_electric", r.certificate.sqrt_G},
              {"boundary_residual_pressure", r.certificate.sqrt_F},
              {"certificate", cert}};
}

json to_json(const RunManifest& m) {
  return json{{"subcommand", m.subcommand},
              {"resolved_config", m.resolved_config},
              {"N", m.n_nodes},
              {"outputs", m.outputs},
              {"wall_seconds", m.wall_seconds},
              {"version", m.version},
              {"config_hash", m.config_hash}};
}

} // namespace eocloak
