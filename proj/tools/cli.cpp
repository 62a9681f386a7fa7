#include "cli.hpp"

#include "jacang/asymptotics.hpp"
#include "jacang/operators.hpp"
#include "jacang/orthogonality.hpp"
#include "jacang/recurrence.hpp"
#include "jacang/zeros.hpp"
#include "svg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace jacang::cli {

namespace {

using Json = nlohmann::ordered_json;
using Cell = std::variant<long long, double, std::string>;

constexpr int kRecurrenceRowCap = 100000;
constexpr int kSampleCap = 10000000;
constexpr double kFigureMassTol = 1e-6;

struct Table {
  std::string type;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  Json meta = Json::object();
};

// Exit with a message; code is one of ExitCode.
struct Failure {
  int code;
  std::string message;
};

std::string cell_text(const Cell& c) {
  if (auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
  if (auto* d = std::get_if<double>(&c)) return format_double(*d);
  return std::get<std::string>(c);
}

void write_csv(std::ostream& out, const Table& t) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_text(row[i]);
    out << '\n';
  }
}

// nlohmann's own dump prints the shortest round-trip form; floats here go
// through %.17g instead so every emitted value has 17 significant digits.
void dump_json(std::ostream& out, const Json& j) {
  switch (j.type()) {
    case Json::value_t::object: {
      out << '{';
      bool first = true;
      for (const auto& [k, v] : j.items()) {
        if (!first) out << ',';
        first = false;
        out << Json(k).dump() << ':';
        dump_json(out, v);
      }
      out << '}';
      break;
    }
    case Json::value_t::array: {
      out << '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out << ',';
        dump_json(out, j[i]);
      }
      out << ']';
      break;
    }
    case Json::value_t::number_float: {
      double v = j.get<double>();
      if (std::isfinite(v))
        out << format_double(v);
      else
        out << "null";
      break;
    }
    default:
      out << j.dump();
  }
}

Json cell_json(const Cell& c) {
  if (auto* i = std::get_if<long long>(&c)) return *i;
  if (auto* d = std::get_if<double>(&c)) return *d;
  return std::get<std::string>(c);
}

void write_json(std::ostream& out, const std::string& name, const Json& args, const Table& t) {
  Json payload = Json::object();
  payload["type"] = t.type;
  for (const auto& [k, v] : t.meta.items()) payload[k] = v;
  payload["columns"] = t.columns;
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    Json jr = Json::array();
    for (const auto& c : row) jr.push_back(cell_json(c));
    rows.push_back(std::move(jr));
  }
  payload["rows"] = std::move(rows);
  Json rec = Json::object();
  rec["schema_version"] = "1";
  rec["command"] = {{"name", name}, {"args", args}};
  rec["payload"] = std::move(payload);
  dump_json(out, rec);
  out << '\n';
}

struct Common {
  int r = 2;
  double alpha = 0;
  double beta = 0;
  std::string format = "csv";
};

void add_params(CLI::App* sc, Common& c) {
  sc->add_option("--r", c.r, "number of rays (>= 1)")->capture_default_str();
  sc->add_option("--alpha", c.alpha, "exponent of (1 - x^r), > -1")->capture_default_str();
  sc->add_option("--beta", c.beta, "exponent of |x|, > -1")->capture_default_str();
}

void add_format(CLI::App* sc, Common& c) {
  sc->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

Json params_json(const Common& c) { return {{"r", c.r}, {"alpha", c.alpha}, {"beta", c.beta}}; }

// coeffs ----------------------------------------------------------------------

struct CoeffsOpts {
  int n = -1;
  std::string family = "base";
  std::optional<int> k;
};

Table cmd_coeffs(const Common& c, const CoeffsOpts& o) {
  Params P(c.r, c.alpha, c.beta);
  if (o.n < 0) throw Failure{kUsage, "--n must be >= 0"};
  bool needs_k = o.family == "up" || o.family == "down";
  if (needs_k && !o.k) throw Failure{kUsage, "--family " + o.family + " needs --k in 1..r"};
  if (!needs_k && o.k) throw Failure{kUsage, "--k applies only to --family up|down"};
  if (needs_k && (*o.k < 1 || *o.k > c.r))
    throw Failure{kUsage, "--k must be in 1.." + std::to_string(c.r)};

  Table t;
  t.meta["family"] = o.family;
  t.meta["n"] = o.n;
  if (o.family == "base") {
    t.type = "coefficients";
    t.columns = {"k", "re", "im"};
    auto p = p_coeffs<double>(o.n, P);
    for (int k = 0; k <= p.degree(); ++k) t.rows.push_back({(long long)k, p[k], 0.0});
    return t;
  }
  if (o.family == "diag" && o.n < 1) throw Failure{kUsage, "--family diag needs --n >= 1"};
  if (needs_k && o.n < 1) throw Failure{kUsage, "--family " + o.family + " needs --n >= 1"};
  TypeIVector<double> v = o.family == "diag" ? type1_diagonal<double>(o.n, P)
                          : o.family == "up" ? type1_up<double>(o.n, *o.k, P)
                                             : type1_down<double>(o.n, *o.k, P);
  if (o.k) t.meta["k"] = *o.k;
  t.meta["multi_index"] = v.tag.describe();
  t.type = "vector";
  t.columns = {"ray", "k", "re", "im"};
  for (std::size_t j = 0; j < v.polys.size(); ++j) {
    const auto& p = v.polys[j];
    for (int k = 0; k <= p.degree(); ++k)
      t.rows.push_back({(long long)(j + 1), (long long)k, p[k].real(), p[k].imag()});
  }
  return t;
}

// verify ----------------------------------------------------------------------

struct VerifyOpts {
  std::string suite;
  int n_max = 8;
  std::optional<double> tol;
};

const std::map<std::string, double> kDefaultTol{
    {"orthogonality", 1e-9}, {"recurrence", 1e-9}, {"ode", 1e-8},
    {"lowering", 1e-13},     {"raising", 1e-11},   {"zeros", 1e-10}};

double ortho_residual(int n, const Params& P, double tol) {
  auto worst = [&](const TypeIVector<hp::Real>& v) {
    OrthoReport rep = verify_type1(v, tol);
    return std::max(rep.max_ortho_residual, std::abs(rep.norm_value - Complex(1, 0)));
  };
  double w = worst(type1_diagonal<hp::Real>(n, P));
  for (int k = 1; k <= P.r; ++k) {
    w = std::max(w, worst(type1_up<hp::Real>(n, k, P)));
    w = std::max(w, worst(type1_down<hp::Real>(n, k, P)));
  }
  return w;
}

double suite_residual(const std::string& suite, int n, const Params& P, double tol) {
  if (suite == "orthogonality") return ortho_residual(n, P, tol);
  if (suite == "recurrence") {
    auto pts = ray_sample_points(P.r, std::max(16, n + 3));
    double w = 0;
    for (int k = 1; k <= P.r; ++k) w = std::max(w, recurrence_residual(n, k, P, pts));
    return w;
  }
  if (suite == "ode") {
    auto pts = linspace(0.05, 0.95, 32);
    return ode_residual(ode_coeffs(n, P), pts);
  }
  if (suite == "lowering") return lowering_check(n, P);
  if (suite == "raising") return raising_check(n, P);
  // zeros: count, ordering and residual
  try {
    ZeroSet zs = find_zeros(n, P);
    if (static_cast<int>(zs.zeros.size()) != n) return std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < zs.zeros.size(); ++i) {
      double x = zs.zeros[i];
      if (!(x > 0 && x < 1)) return std::numeric_limits<double>::infinity();
      if (i && !(x > zs.zeros[i - 1])) return std::numeric_limits<double>::infinity();
    }
    return zs.residuals.empty() ? 0.0 : *std::max_element(zs.residuals.begin(), zs.residuals.end());
  } catch (const PrecisionError&) {
    return std::numeric_limits<double>::quiet_NaN();
  }
}

Table cmd_verify(const Common& c, const VerifyOpts& o, std::ostream& err, bool& all_pass) {
  Params P(c.r, c.alpha, c.beta);
  if (!kDefaultTol.count(o.suite)) throw Failure{kUsage, "unknown suite " + o.suite};
  if (o.n_max < 1) throw Failure{kUsage, "--n-max must be >= 1"};
  if (o.n_max > kDegreeCap)
    throw Failure{kResource, "--n-max exceeds the degree cap " + std::to_string(kDegreeCap)};
  double tol = o.tol.value_or(kDefaultTol.at(o.suite));
  if (!(tol > 0)) throw Failure{kUsage, "--tol must be > 0"};
  if (o.suite == "recurrence" && c.r < 2)
    throw Failure{kUsage, "recurrence suite needs r >= 2 (b is not defined for r = 1)"};
  if (o.suite == "raising" && !(c.alpha > c.r - 1 && c.beta > c.r - 1))
    throw Failure{kUsage, "raising suite needs alpha > r-1 and beta > r-1"};

  Table t;
  t.type = "report";
  t.meta["suite"] = o.suite;
  t.meta["tol"] = tol;
  t.columns = {"n", "residual", "pass"};
  all_pass = true;
  double worst = 0;
  int failed = 0;
  for (int n = 1; n <= o.n_max; ++n) {
    double res = suite_residual(o.suite, n, P, tol);
    bool ok = res <= tol;  // NaN fails
    if (!ok) {
      all_pass = false;
      ++failed;
    }
    worst = std::isnan(res) || res > worst ? res : worst;
    t.rows.push_back({(long long)n, res, std::string(ok ? "true" : "false")});
  }
  t.meta["pass"] = all_pass;
  err << "verify " << o.suite << ": r=" << c.r << " alpha=" << format_double(c.alpha)
      << " beta=" << format_double(c.beta) << " n=1.." << o.n_max << " tol=" << format_double(tol)
      << " worst=" << format_double(worst) << " failed=" << failed << " -> "
      << (all_pass ? "PASS" : "FAIL") << '\n';
  return t;
}

// zeros / recurrence / density ------------------------------------------------

Table cmd_zeros(const Common& c, int n) {
  Params P(c.r, c.alpha, c.beta);
  if (n < 1) throw Failure{kUsage, "--n must be >= 1"};
  ZeroSet zs = find_zeros(n, P);
  Table t;
  t.type = "zeros";
  t.meta["n"] = n;
  t.columns = {"i", "x", "residual"};
  for (std::size_t i = 0; i < zs.zeros.size(); ++i)
    t.rows.push_back({(long long)(i + 1), zs.zeros[i], zs.residuals[i]});
  return t;
}

Table cmd_recurrence(const Common& c, int n_max) {
  Params P(c.r, c.alpha, c.beta);
  if (n_max < 1) throw Failure{kUsage, "--n-max must be >= 1"};
  if (n_max > kRecurrenceRowCap)
    throw Failure{kResource, "--n-max exceeds " + std::to_string(kRecurrenceRowCap)};
  Table t;
  t.type = "table";
  bool has_b = c.r >= 2;
  t.columns = has_b ? std::vector<std::string>{"n", "a", "b", "a_limit", "b_limit"}
                    : std::vector<std::string>{"n", "a", "a_limit"};
  double al = a_limit(c.r);
  for (int n = 1; n <= n_max; ++n) {
    RecurrenceRow row = recurrence_row(n, P);
    if (has_b)
      t.rows.push_back({(long long)n, row.a_scalar, *row.b_scalar, al, b_limit(c.r)});
    else
      t.rows.push_back({(long long)n, row.a_scalar, al});
  }
  return t;
}

void check_samples(int samples) {
  if (samples < 1) throw Failure{kUsage, "--samples must be >= 1"};
  if (samples > kSampleCap) throw Failure{kResource, "--samples exceeds " + std::to_string(kSampleCap)};
}

Table curve_table(const DensityCurve& curve) {
  Table t;
  t.type = "curve";
  t.columns = {"x", "u", "F"};
  for (const auto& s : curve.samples) t.rows.push_back({s.x, s.u, s.F});
  return t;
}

Table cmd_density(int r, int samples) {
  if (r < 1) throw DomainError("r must be an integer >= 1");
  check_samples(samples);
  Table t = curve_table(density_curve_uniform(r, samples));
  t.meta["r"] = r;
  return t;
}

// figure2 ---------------------------------------------------------------------

Table cmd_figure2(int samples, const std::string& out_dir, bool& all_pass) {
  check_samples(samples);
  if (samples < 2) throw Failure{kUsage, "figure2 needs --samples >= 2"};
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw Failure{kResource, "cannot create " + out_dir + ": " + ec.message()};

  Table t;
  t.type = "table";
  t.columns = {"r", "file", "samples", "mass"};
  all_pass = true;
  std::vector<DensityCurve> curves;
  for (int r = 1; r <= 5; ++r) {
    DensityCurve curve = density_curve_theta(r, samples);
    std::string name = "figure2_r" + std::to_string(r) + ".csv";
    std::ofstream f(fs::path(out_dir) / name);
    if (!f) throw Failure{kResource, "cannot write " + name};
    write_csv(f, curve_table(curve));
    if (!f) throw Failure{kResource, "write failed for " + name};
    double mass = curve_mass(curve);
    if (!(std::abs(mass - 1) <= kFigureMassTol)) all_pass = false;
    t.rows.push_back({(long long)r, name, (long long)samples, mass});
    curves.push_back(std::move(curve));
  }
  std::ofstream svg(fs::path(out_dir) / "figure2.svg");
  if (!svg) throw Failure{kResource, "cannot write figure2.svg"};
  svg << density_svg(curves, 3.0);
  if (!svg) throw Failure{kResource, "write failed for figure2.svg"};
  return t;
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Type I Jacobi-Angelesco multiple orthogonal polynomials on the r-star"};
  app.name("jacang");
  app.require_subcommand(1);

  Common common;

  CoeffsOpts co;
  auto* sc_coeffs = app.add_subcommand("coeffs", "coefficients of p_n or a type I vector");
  add_params(sc_coeffs, common);
  add_format(sc_coeffs, common);
  sc_coeffs->add_option("--n", co.n, "degree (base) or diagonal level")->required();
  sc_coeffs->add_option("--family", co.family, "base | diag | up | down")
      ->check(CLI::IsMember({"base", "diag", "up", "down"}))
      ->capture_default_str();
  sc_coeffs->add_option("--k", co.k, "ray index for up/down");

  VerifyOpts vo;
  auto* sc_verify = app.add_subcommand("verify", "run a residual suite over n = 1..n-max");
  add_params(sc_verify, common);
  add_format(sc_verify, common);
  sc_verify->add_option("--suite", vo.suite, "suite")
      ->required()
      ->check(CLI::IsMember({"orthogonality", "recurrence", "ode", "lowering", "raising", "zeros"}));
  sc_verify->add_option("--n-max", vo.n_max, "largest n")->capture_default_str();
  sc_verify->add_option("--tol", vo.tol, "pass threshold (suite default if omitted)");

  int zeros_n = 0;
  auto* sc_zeros = app.add_subcommand("zeros", "zeros of p_n in (0,1)");
  add_params(sc_zeros, common);
  add_format(sc_zeros, common);
  sc_zeros->add_option("--n", zeros_n, "degree")->required();

  int rec_n_max = 10;
  auto* sc_rec = app.add_subcommand("recurrence", "diagonal recurrence coefficients and limits");
  add_params(sc_rec, common);
  add_format(sc_rec, common);
  sc_rec->add_option("--n-max", rec_n_max, "largest n")->capture_default_str();

  int dens_samples = 99;
  auto* sc_dens = app.add_subcommand("density", "limit zero density u_r and its CDF on x = i/(N+1)");
  sc_dens->add_option("--r", common.r, "number of rays (>= 1)")->capture_default_str();
  add_format(sc_dens, common);
  sc_dens->add_option("--samples", dens_samples, "number of interior points")->capture_default_str();

  int fig_samples = 8001;
  std::string fig_dir = ".";
  auto* sc_fig = app.add_subcommand("figure2", "density curves for r = 1..5 as CSV and SVG");
  add_format(sc_fig, common);
  sc_fig->add_option("--samples", fig_samples, "points per curve")->capture_default_str();
  sc_fig->add_option("--out-dir", fig_dir, "output directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "jacang: " << e.what() << '\n';
    return kUsage;
  }

  try {
    Table t;
    int code = kPass;
    std::string name;
    Json args = Json::object();
    if (*sc_coeffs) {
      name = "coeffs";
      args = params_json(common);
      args["n"] = co.n;
      args["family"] = co.family;
      if (co.k) args["k"] = *co.k;
      t = cmd_coeffs(common, co);
    } else if (*sc_verify) {
      name = "verify";
      args = params_json(common);
      args["suite"] = vo.suite;
      args["n_max"] = vo.n_max;
      if (vo.tol) args["tol"] = *vo.tol;
      bool ok = true;
      t = cmd_verify(common, vo, err, ok);
      if (!ok) code = kVerifyFail;
    } else if (*sc_zeros) {
      name = "zeros";
      args = params_json(common);
      args["n"] = zeros_n;
      t = cmd_zeros(common, zeros_n);
    } else if (*sc_rec) {
      name = "recurrence";
      args = params_json(common);
      args["n_max"] = rec_n_max;
      t = cmd_recurrence(common, rec_n_max);
    } else if (*sc_dens) {
      name = "density";
      args["r"] = common.r;
      args["samples"] = dens_samples;
      t = cmd_density(common.r, dens_samples);
    } else {
      name = "figure2";
      args["samples"] = fig_samples;
      args["out_dir"] = fig_dir;
      bool ok = true;
      t = cmd_figure2(fig_samples, fig_dir, ok);
      if (!ok) {
        code = kVerifyFail;
        err << "figure2: a curve mass differs from 1 by more than " << format_double(kFigureMassTol)
            << '\n';
      }
    }
    if (common.format == "json")
      write_json(out, name, args, t);
    else
      write_csv(out, t);
    return code;
  } catch (const Failure& f) {
    err << "jacang: " << f.message << '\n';
    return f.code;
  } catch (const CapExceeded& e) {
    err << "jacang: " << e.what() << '\n';
    return kResource;
  } catch (const DomainError& e) {
    err << "jacang: " << e.what() << '\n';
    return kUsage;
  } catch (const PrecisionError& e) {
    err << "jacang: " << e.what() << '\n';
    return kVerifyFail;
  }
}

}  // namespace jacang::cli
