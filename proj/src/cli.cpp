#include "rankone/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <unistd.h>

#include "CLI11.hpp"
#include "rankone/acceptance.hpp"
#include "rankone/cfunction.hpp"
#include "rankone/errors.hpp"
#include "rankone/families.hpp"
#include "rankone/format.hpp"
#include "rankone/groups.hpp"
#include "rankone/schwartz.hpp"
#include "rankone/transform.hpp"

namespace rankone::cli {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw ValidationError("cli", "config", path + ": " + what);
}

void check_keys(const json& j, const std::string& path, std::initializer_list<const char*> keys) {
  if (!j.is_object()) bad(path, "expected an object");
  for (const auto& [k, v] : j.items()) {
    (void)v;
    if (std::none_of(keys.begin(), keys.end(), [&](const char* a) { return k == a; }))
      bad(path + "." + k, "unknown field");
  }
}

double number(const json& j, const std::string& path) {
  if (!j.is_number()) bad(path, "expected a number");
  return j.get<double>();
}

int integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) bad(path, "expected an integer");
  return j.get<int>();
}

std::string text(const json& j, const std::string& path) {
  if (!j.is_string()) bad(path, "expected a string");
  return j.get<std::string>();
}

std::vector<double> numbers(const json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(number(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

bool spectral_grid_command(const std::string& s) {
  return s == "transform" || s == "membership" || s == "roundtrip";
}

GridSpec default_grid(const std::string& s) {
  if (s == "phi") return {0.0, 10.0, 21};
  if (s == "cfun") return {0.25, 8.0, 32};
  if (s == "invert") return {0.0, 10.0, 41};
  if (s == "roundtrip") return {-6.0, 6.0, 241};
  if (s == "seminorm") return {0.0, 40.0, 800};
  return {-12.0, 12.0, 481};
}

struct Report {
  ordered_json inputs = ordered_json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<ordered_json>> rows;
  std::optional<double> max_error;
  ordered_json extra = ordered_json::object();
};

std::string cell(const ordered_json& v) {
  if (v.is_number_float()) return format_double(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string render(const RunConfig& c, const Report& r) {
  std::ostringstream s;
  if (c.format == "csv") {
    for (std::size_t i = 0; i < r.columns.size(); ++i) s << (i ? "," : "") << r.columns[i];
    s << '\n';
    for (const auto& row : r.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) s << (i ? "," : "") << cell(row[i]);
      s << '\n';
    }
    return s.str();
  }
  ordered_json j;
  j["preset"] = c.preset;
  j["operation"] = c.subcommand;
  j["inputs"] = r.inputs;
  j["max_error"] = r.max_error ? ordered_json(*r.max_error) : ordered_json(nullptr);
  ordered_json samples = ordered_json::array();
  for (const auto& row : r.rows) {
    ordered_json o = ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) o[r.columns[i]] = row[i];
    samples.push_back(std::move(o));
  }
  j["per_sample"] = std::move(samples);
  for (const auto& [k, v] : r.extra.items()) j[k] = v;
  return j.dump(2) + "\n";
}

void write_atomic(const std::string& path, const std::string& body) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw ValidationError("cli", "output", "cannot write " + tmp.string());
    f << body;
    f.flush();
    if (!f) throw ValidationError("cli", "output", "write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw ValidationError("cli", "output", "cannot rename onto " + path + ": " + ec.message());
  }
}

std::vector<double> grid_points(const GridSpec& g) {
  if (g.count == 1) return {g.min};
  return linear_grid(g.min, g.max, g.count);
}

std::vector<double> spectral_points(const GridSpec& g) {
  return symmetric_grid(g.max, g.count);
}

SpectralFunction symbol_of(std::string name) {
  if (name.empty()) name = "gauss";
  const auto grid = transform::default_grid();
  if (name == "odd") return families::odd_symbol(grid);
  if (name == "rational") return families::rational_symbol(grid);
  if (name == "rough") return families::rough_symbol(grid);
  return families::symbol_by_name(name, grid);
}

RadialProfile profile_of(const RunConfig& c, const GroupDatum& g) {
  if (c.profile == "gaussian") return families::gaussian(c.profile_s);
  if (c.profile == "poly_gaussian") return families::poly_gaussian(c.profile_s);
  if (c.profile == "xi_weighted") return families::xi_weighted(g, c.profile_power);
  return families::profile_by_name(g, c.profile);
}

Report op_presets() {
  Report r;
  r.columns = {"name", "m_alpha", "m_2alpha", "rho", "jacobi_alpha", "jacobi_beta",
               "plancherel_constant", "weyl_order"};
  for (const auto& n : groups::preset_names()) {
    const GroupDatum g = groups::preset(n);
    r.rows.push_back({g.name, g.m_alpha, g.m_2alpha, g.rho, g.jacobi_alpha, g.jacobi_beta,
                      g.plancherel_constant, g.weyl_order});
  }
  return r;
}

Report op_phi(const RunConfig& c, const GroupDatum& g, const GridSpec& grid) {
  Report r;
  r.columns = {"lambda_re", "lambda_im", "t", "phi_re", "phi_im"};
  for (double l : c.lambda)
    for (double t : grid_points(grid)) {
      const cplx lam(l, c.lambda_im);
      const cplx v = spherical::phi(g, lam, t);
      r.rows.push_back({l, c.lambda_im, t, v.real(), v.imag()});
    }
  return r;
}

Report op_cfun(const GroupDatum& g, const GridSpec& grid) {
  Report r;
  r.columns = {"lambda", "c_re", "c_im", "density", "plancherel"};
  for (double l : grid_points(grid)) {
    cplx cv(NAN, NAN);
    try {
      cv = cfunction::c_function(g, l);
    } catch (const PoleError&) {
    }
    r.rows.push_back({l, cv.real(), cv.imag(), cfunction::plancherel_density(g, l),
                      cfunction::aggregate_density(g, l)});
  }
  return r;
}

Report op_transform(const RunConfig& c, const GroupDatum& g, const GridSpec& grid) {
  Report r;
  const auto f = profile_of(c, g);
  const auto h = transform::hc_transform(g, f, spectral_points(grid), c.quadrature);
  r.columns = {"lambda", "re", "im", "err_est"};
  double worst = 0.0;
  for (std::size_t i = 0; i < h.spectral.grid().size(); ++i) {
    const cplx v = h.spectral.values()[i];
    r.rows.push_back({h.spectral.grid()[i], v.real(), v.imag(), h.err_est[i]});
    worst = std::max(worst, h.err_est[i]);
  }
  r.max_error = worst;
  return r;
}

Report op_invert(const RunConfig& c, const GroupDatum& g, const GridSpec& grid) {
  Report r;
  const transform::WavePacket psi(g, symbol_of(c.symbol), c.quadrature);
  r.columns = {"t", "re", "im"};
  for (double t : grid_points(grid)) {
    const cplx v = psi(t);
    r.rows.push_back({t, v.real(), v.imag()});
  }
  r.max_error = psi.err_est();
  r.extra["nu_cutoff"] = psi.cutoff();
  r.extra["nu_nodes"] = psi.nodes();
  return r;
}

Report op_plancherel(const RunConfig& c, const GroupDatum& g) {
  Report r;
  const auto a = symbol_of(c.symbol);
  const auto b = symbol_of(c.symbol2);
  const cplx pair = transform::plancherel_pairing(g, a, b, c.quadrature).value;
  const transform::WavePacket pa(g, a, c.quadrature), pb(g, b, c.quadrature);
  const cplx conv = transform::convolve_at_identity(g, pa.profile(), pb.profile(), c.quadrature).value;
  r.columns = {"pairing_re", "pairing_im", "convolution_re", "convolution_im"};
  r.rows.push_back({pair.real(), pair.imag(), conv.real(), conv.imag()});
  r.max_error = std::abs(pair - conv);
  return r;
}

Report op_expansion(const RunConfig& c, const GroupDatum& g) {
  Report r;
  const auto f = profile_of(c, g);
  r.columns = {"lambda", "eps", "split_re", "compact_re", "sum_re", "sum_im", "hf_re", "error"};
  double worst = 0.0;
  const double eps_min = *std::min_element(c.eps.begin(), c.eps.end());
  for (double l : c.lambda) {
    const cplx hf = transform::hc_transform_at(g, f, l, c.quadrature).value;
    for (double e : c.eps) {
      const cplx s = transform::expansion_term(g, transform::CartanClass::split, f, l, e, c.quadrature);
      const cplx k = transform::expansion_term(g, transform::CartanClass::compact, f, l, e, c.quadrature);
      const double err = std::abs(s + k - hf);
      if (e == eps_min) worst = std::max(worst, err);
      r.rows.push_back({l, e, s.real(), k.real(), (s + k).real(), (s + k).imag(), hf.real(), err});
    }
  }
  r.max_error = worst;
  return r;
}

Report op_seminorm(const RunConfig& c, const GroupDatum& g, const GridSpec& grid) {
  Report r;
  const auto f = profile_of(c, g);
  const auto rep = schwartz::schwartz_seminorm(g, f, c.r, c.k, SeminormGrid{grid.max, grid.count});
  r.columns = {"r", "k", "value", "saturated_at", "t_max", "points", "boundary_saturated"};
  r.rows.push_back({rep.r, rep.deriv_order, rep.value, rep.saturated_at, rep.grid_spec.t_max,
                    rep.grid_spec.points, rep.boundary_saturated ? "true" : "false"});
  return r;
}

Report op_membership(const RunConfig& c, const GroupDatum& g, const GridSpec& grid,
                     bool symbol_given) {
  Report r;
  const SpectralFunction a =
      symbol_given ? symbol_of(c.symbol)
                   : transform::hc_transform(g, profile_of(c, g), spectral_points(grid), c.quadrature)
                         .spectral;
  const auto rep = schwartz::image_membership(g, a);
  r.columns = {"criterion", "passed", "value", "threshold", "witness"};
  for (const auto& k : rep.criteria)
    r.rows.push_back({k.name, k.passed ? "true" : "false", k.value, k.threshold, k.witness});
  r.extra["member"] = rep.passed;
  if (!symbol_given && c.tube_epsilon > 0.0) {
    const auto tube = schwartz::tube_extension_check(g, profile_of(c, g),
                                                     schwartz::make_tube(g, c.tube_epsilon),
                                                     c.quadrature);
    r.rows.push_back({"tube_finite", tube.finite ? "true" : "false", tube.max_modulus,
                      tube.tube.half_width, 0.0});
    r.rows.push_back({"tube_conjugacy", tube.conjugacy_defect <= 1e-10 ? "true" : "false",
                      tube.conjugacy_defect, 1e-10, 0.0});
  }
  return r;
}

Report op_roundtrip(const RunConfig& c, const GroupDatum& g, const GridSpec& grid, bool& ok) {
  Report r;
  const auto a = symbol_of(c.symbol);
  const transform::WavePacket psi(g, a, c.quadrature);
  const auto pts = spectral_points(grid);
  const auto h = transform::hc_transform(g, psi.profile(), pts, c.quadrature);
  r.columns = {"lambda", "a", "h_re", "h_im", "error"};
  double worst = 0.0, sup = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const cplx av = a(pts[i]);
    const cplx hv = h.spectral.values()[i];
    const double e = std::abs(hv - av);
    worst = std::max(worst, e);
    sup = std::max(sup, std::abs(av));
    r.rows.push_back({pts[i], av.real(), hv.real(), hv.imag(), e});
  }
  r.max_error = worst;
  const double allowed = c.threshold * (1.0 + sup);
  r.extra["allowed_error"] = allowed;
  ok = worst <= allowed;
  return r;
}

Report op_accept(const RunConfig& c, bool& ok, std::ostream& err) {
  Report r;
  r.columns = {"id", "passed", "measured", "threshold", "seconds", "description", "detail"};
  ok = true;
  for (const auto& id : c.criteria.empty() ? acceptance::criterion_ids() : c.criteria) {
    const auto res = acceptance::run({id});
    if (res.empty()) throw ValidationError("cli", "accept", "unknown criterion '" + id + "'");
    const auto& x = res.front();
    err << acceptance::format_line(x) << '\n' << std::flush;
    ok = ok && x.passed;
    r.rows.push_back({x.id, x.passed ? "PASS" : "FAIL", x.measured, x.threshold, x.seconds,
                      x.description, x.detail});
  }
  return r;
}

}  // namespace

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> s{"presets",    "phi",        "cfun",     "transform",
                                          "invert",     "plancherel", "expansion", "seminorm",
                                          "membership", "roundtrip",  "accept"};
  return s;
}

GridSpec parse_grid(const std::string& t) {
  GridSpec g;
  char c1 = 0, c2 = 0;
  std::istringstream s(t);
  if (!(s >> g.min >> c1 >> g.max >> c2 >> g.count) || c1 != ':' || c2 != ':' || !s.eof())
    throw ValidationError("cli", "config", "grid: expected min:max:count, got '" + t + "'");
  return g;
}

RunConfig config_from_json(const json& j, RunConfig c) {
  check_keys(j, "config",
             {"preset", "subcommand", "grid", "quadrature", "output", "profile", "symbol", "lambda",
              "lambda_im", "eps", "seminorm", "tube_epsilon", "threshold", "criteria"});
  if (j.contains("preset")) c.preset = text(j["preset"], "config.preset");
  if (j.contains("subcommand")) c.subcommand = text(j["subcommand"], "config.subcommand");
  if (j.contains("grid")) {
    const auto& g = j["grid"];
    check_keys(g, "config.grid", {"min", "max", "count"});
    for (const char* k : {"min", "max", "count"})
      if (!g.contains(k)) bad(std::string("config.grid.") + k, "missing");
    c.grid = GridSpec{number(g["min"], "config.grid.min"), number(g["max"], "config.grid.max"),
                      integer(g["count"], "config.grid.count")};
  }
  if (j.contains("quadrature")) {
    const auto& q = j["quadrature"];
    check_keys(q, "config.quadrature",
               {"rel_tol", "abs_tol", "max_subdivisions", "order", "truncation"});
    if (q.contains("rel_tol")) c.quadrature.rel_tol = number(q["rel_tol"], "config.quadrature.rel_tol");
    if (q.contains("abs_tol")) c.quadrature.abs_tol = number(q["abs_tol"], "config.quadrature.abs_tol");
    if (q.contains("max_subdivisions"))
      c.quadrature.max_subdivisions =
          integer(q["max_subdivisions"], "config.quadrature.max_subdivisions");
    if (q.contains("order")) c.quadrature.order = integer(q["order"], "config.quadrature.order");
    if (q.contains("truncation")) {
      const auto& t = q["truncation"];
      const std::string p = "config.quadrature.truncation";
      check_keys(t, p, {"tail_fraction", "step", "t_cap"});
      auto& tr = c.quadrature.truncation;
      if (t.contains("tail_fraction")) tr.tail_fraction = number(t["tail_fraction"], p + ".tail_fraction");
      if (t.contains("step")) tr.step = number(t["step"], p + ".step");
      if (t.contains("t_cap")) tr.t_cap = number(t["t_cap"], p + ".t_cap");
    }
  }
  if (j.contains("output")) {
    const auto& o = j["output"];
    check_keys(o, "config.output", {"format", "path"});
    if (o.contains("format")) c.format = text(o["format"], "config.output.format");
    if (o.contains("path")) c.out = text(o["path"], "config.output.path");
  }
  if (j.contains("profile")) {
    const auto& p = j["profile"];
    check_keys(p, "config.profile", {"name", "s", "power"});
    if (p.contains("name")) c.profile = text(p["name"], "config.profile.name");
    if (p.contains("s")) c.profile_s = number(p["s"], "config.profile.s");
    if (p.contains("power")) c.profile_power = number(p["power"], "config.profile.power");
  }
  if (j.contains("symbol")) {
    const auto& s = j["symbol"];
    check_keys(s, "config.symbol", {"name", "second"});
    if (s.contains("name")) c.symbol = text(s["name"], "config.symbol.name");
    if (s.contains("second")) c.symbol2 = text(s["second"], "config.symbol.second");
  }
  if (j.contains("lambda")) c.lambda = numbers(j["lambda"], "config.lambda");
  if (j.contains("lambda_im")) c.lambda_im = number(j["lambda_im"], "config.lambda_im");
  if (j.contains("eps")) c.eps = numbers(j["eps"], "config.eps");
  if (j.contains("seminorm")) {
    const auto& s = j["seminorm"];
    check_keys(s, "config.seminorm", {"r", "k"});
    if (s.contains("r")) c.r = number(s["r"], "config.seminorm.r");
    if (s.contains("k")) c.k = integer(s["k"], "config.seminorm.k");
  }
  if (j.contains("tube_epsilon")) c.tube_epsilon = number(j["tube_epsilon"], "config.tube_epsilon");
  if (j.contains("threshold")) c.threshold = number(j["threshold"], "config.threshold");
  if (j.contains("criteria")) {
    if (!j["criteria"].is_array()) bad("config.criteria", "expected an array of strings");
    c.criteria.clear();
    for (std::size_t i = 0; i < j["criteria"].size(); ++i)
      c.criteria.push_back(text(j["criteria"][i], "config.criteria[" + std::to_string(i) + "]"));
  }
  return c;
}

ordered_json config_to_json(const RunConfig& c) {
  ordered_json j;
  j["preset"] = c.preset;
  j["subcommand"] = c.subcommand;
  if (c.grid) j["grid"] = {{"min", c.grid->min}, {"max", c.grid->max}, {"count", c.grid->count}};
  j["quadrature"] = {{"rel_tol", c.quadrature.rel_tol},
                     {"abs_tol", c.quadrature.abs_tol},
                     {"max_subdivisions", c.quadrature.max_subdivisions},
                     {"order", c.quadrature.order},
                     {"truncation",
                      {{"tail_fraction", c.quadrature.truncation.tail_fraction},
                       {"step", c.quadrature.truncation.step},
                       {"t_cap", c.quadrature.truncation.t_cap}}}};
  j["output"] = {{"format", c.format}, {"path", c.out}};
  j["profile"] = {{"name", c.profile}, {"s", c.profile_s}, {"power", c.profile_power}};
  j["symbol"] = {{"name", c.symbol}, {"second", c.symbol2}};
  j["lambda"] = c.lambda;
  j["lambda_im"] = c.lambda_im;
  j["eps"] = c.eps;
  j["seminorm"] = {{"r", c.r}, {"k", c.k}};
  j["tube_epsilon"] = c.tube_epsilon;
  j["threshold"] = c.threshold;
  j["criteria"] = c.criteria;
  return j;
}

void validate(const RunConfig& c) {
  const auto& subs = subcommands();
  if (std::find(subs.begin(), subs.end(), c.subcommand) == subs.end())
    bad("config.subcommand", "unknown subcommand '" + c.subcommand + "'");
  groups::structural(c.preset);
  if (c.format != "csv" && c.format != "json")
    bad("config.output.format", "must be csv or json");
  try {
    c.quadrature.validate();
  } catch (const ValidationError& e) {
    bad("config.quadrature", e.what());
  }
  if (c.grid) {
    const GridSpec& g = *c.grid;
    if (!std::isfinite(g.min) || !std::isfinite(g.max)) bad("config.grid", "bounds must be finite");
    if (g.count < 1) bad("config.grid.count", "must be positive");
    if (g.count > 1 && !(g.min < g.max)) bad("config.grid", "min must be below max");
    if (spectral_grid_command(c.subcommand)) {
      if (g.count % 2 == 0) bad("config.grid.count", "spectral grid count must be odd");
      if (g.min != -g.max) bad("config.grid", "spectral grid must be symmetric (min = -max)");
      if (g.count < SpectralFunction::kStencil) bad("config.grid.count", "need at least 8 samples");
    }
    if ((c.subcommand == "phi" || c.subcommand == "invert" || c.subcommand == "seminorm") &&
        g.min < 0.0)
      bad("config.grid.min", "radial grid must start at t >= 0");
  }
  if (!(c.threshold > 0.0)) bad("config.threshold", "must be positive");
  if (!(c.profile_s > 0.0)) bad("config.profile.s", "must be positive");
  if (c.eps.empty()) bad("config.eps", "must not be empty");
  if (c.lambda.empty()) bad("config.lambda", "must not be empty");
  if (c.k < 0 || c.k > 2) bad("config.seminorm.k", "must be 0, 1 or 2");
  if (!(c.r >= 0.0)) bad("config.seminorm.r", "must be >= 0");
  for (const auto& id : c.criteria) {
    const auto& ids = acceptance::criterion_ids();
    if (std::find(ids.begin(), ids.end(), id) == ids.end())
      bad("config.criteria", "unknown criterion '" + id + "'");
  }
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    validate(c);
    const GridSpec grid = c.grid.value_or(default_grid(c.subcommand));
    Report r;
    bool ok = true;
    const std::string& s = c.subcommand;
    if (s == "presets") {
      r = op_presets();
    } else if (s == "accept") {
      r = op_accept(c, ok, err);
    } else {
      const GroupDatum g = groups::preset(c.preset);
      if (s == "phi") r = op_phi(c, g, grid);
      else if (s == "cfun") r = op_cfun(g, grid);
      else if (s == "transform") r = op_transform(c, g, grid);
      else if (s == "invert") r = op_invert(c, g, grid);
      else if (s == "plancherel") r = op_plancherel(c, g);
      else if (s == "expansion") r = op_expansion(c, g);
      else if (s == "seminorm") r = op_seminorm(c, g, grid);
      else if (s == "membership") r = op_membership(c, g, grid, !c.symbol.empty());
      else if (s == "roundtrip") r = op_roundtrip(c, g, grid, ok);
    }
    r.inputs = config_to_json(c);
    r.inputs.erase("output");
    const std::string body = render(c, r);
    if (c.out.empty())
      out << body << std::flush;
    else
      write_atomic(c.out, body);
    if (!ok) {
      err << "error: " << s << ": accuracy check failed\n";
      return 3;
    }
    return 0;
  } catch (const AccuracyError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

int main(int argc, char** argv) {
  CLI::App app{"Spherical transform toolkit for rank-one groups"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string config_path, preset, format, out, grid, profile, symbol, symbol2, criteria;
  std::optional<double> tol, threshold, r, tube_eps, lambda_im, power, s;
  std::optional<int> k;
  std::vector<double> lambda, eps;
  app.add_option("--config", config_path, "JSON run configuration");
  app.add_option("--preset", preset, "group preset (SL2R, SL2C, H3, H4, CH2)");
  app.add_option("--format", format, "csv or json");
  app.add_option("--out", out, "output path (written atomically)");
  app.add_option("--grid", grid, "grid as min:max:count");
  app.add_option("--tol", tol, "quadrature relative tolerance");
  app.add_option("--profile", profile, "gaussian, poly_gaussian, sech, xi_weighted");
  app.add_option("--s", s, "Gaussian width parameter of the profile");
  app.add_option("--power", power, "exponent p of the xi_weighted profile");
  app.add_option("--symbol", symbol, "spectral symbol name");
  app.add_option("--symbol2", symbol2, "second symbol (plancherel)");
  app.add_option("--lambda", lambda, "spectral parameters")->delimiter(',');
  app.add_option("--lambda-im", lambda_im, "imaginary part added to every lambda (phi)");
  app.add_option("--eps", eps, "mollifier widths (expansion)")->delimiter(',');
  app.add_option("--r", r, "seminorm weight exponent");
  app.add_option("--k", k, "seminorm derivative order");
  app.add_option("--tube-epsilon", tube_eps, "tube parameter for the extension probe (membership)");
  app.add_option("--threshold", threshold, "relative error budget (roundtrip)");
  app.add_option("--only", criteria, "comma-separated acceptance criteria (accept)");
  static const std::map<std::string, std::string> about{
      {"presets", "list group presets with calibrated Plancherel constants"},
      {"phi", "spherical function on a t grid"},
      {"cfun", "c-function and Plancherel density on a lambda grid"},
      {"transform", "spherical transform of a radial profile"},
      {"invert", "wave packet of a symbol on a t grid"},
      {"plancherel", "Plancherel pairing against convolution at the identity"},
      {"expansion", "mollified expansion error at each lambda and eps"},
      {"seminorm", "Schwartz seminorm of a profile"},
      {"membership", "image membership criteria for a symbol"},
      {"roundtrip", "transform of the wave packet of a symbol"},
      {"accept", "run acceptance criteria"}};
  for (const auto& name : subcommands()) app.add_subcommand(name, about.at(name));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  RunConfig c;
  try {
    if (!config_path.empty()) {
      std::ifstream f(config_path);
      if (!f) throw ValidationError("cli", "config", "cannot read " + config_path);
      json j;
      try {
        j = json::parse(f);
      } catch (const json::parse_error& e) {
        throw ValidationError("cli", "config", std::string("malformed JSON: ") + e.what());
      }
      c = config_from_json(j);
    }
    c.subcommand = app.get_subcommands().front()->get_name();
    if (!preset.empty()) c.preset = preset;
    if (!format.empty()) c.format = format;
    if (!out.empty()) c.out = out;
    if (!grid.empty()) c.grid = parse_grid(grid);
    if (tol) c.quadrature.rel_tol = *tol;
    if (!profile.empty()) c.profile = profile;
    if (s) c.profile_s = *s;
    if (power) c.profile_power = *power;
    if (!symbol.empty()) c.symbol = symbol;
    if (!symbol2.empty()) c.symbol2 = symbol2;
    if (!lambda.empty()) c.lambda = lambda;
    if (lambda_im) c.lambda_im = *lambda_im;
    if (!eps.empty()) c.eps = eps;
    if (r) c.r = *r;
    if (k) c.k = *k;
    if (threshold) c.threshold = *threshold;
    if (tube_eps) c.tube_epsilon = *tube_eps;
    if (!criteria.empty()) {
      c.criteria.clear();
      std::stringstream ss(criteria);
      for (std::string id; std::getline(ss, id, ',');) c.criteria.push_back(id);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return run(c, std::cout, std::cerr);
}

}  // namespace rankone::cli
