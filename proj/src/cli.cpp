#include "entrogeo/cli.hpp"

#include "entrogeo/efficiency.hpp"
#include "entrogeo/errors.hpp"
#include "entrogeo/figures.hpp"
#include "entrogeo/geometry.hpp"
#include "entrogeo/pathmetrics.hpp"
#include "entrogeo/report.hpp"
#include "entrogeo/schemes.hpp"
#include "entrogeo/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <optional>
#include <sstream>

namespace entrogeo::cli {

namespace {

using report::format_number;

struct Emit {
  std::ostream& out;
  std::string path;  // empty or "-" means `out`

  void operator()(const std::string& text) const {
    if (path.empty() || path == "-") {
      out << text;
    } else {
      report::write_file_atomic(path, text);
    }
  }
};

// Canonical "key=value" list feeding the config hash; output paths are left
// out so the same physics hashes the same wherever it is written.
class Canon {
 public:
  explicit Canon(std::string command) : text_(std::move(command)) {}
  Canon& add(const std::string& key, double value) {
    text_ += ' ' + key + '=' + format_number(value);
    return *this;
  }
  Canon& add(const std::string& key, const std::string& value) {
    text_ += ' ' + key + '=' + value;
    return *this;
  }
  Canon& add(const std::string& key, const figures::Grid& g) {
    text_ += ' ' + key + '=' + format_number(g.start) + ':' + format_number(g.stop) + ':' +
             std::to_string(g.count);
    return *this;
  }
  std::string hash() const { return report::config_hash(text_); }

 private:
  std::string text_;
};

std::string csv(const report::Table& table, const Canon& canon) {
  std::ostringstream s;
  report::write_csv(s, table, canon.hash());
  return s.str();
}

nlohmann::ordered_json json_header(const std::string& command, const Canon& canon) {
  nlohmann::ordered_json j;
  j["entrogeo"] = ENTROGEO_VERSION;
  j["command"] = command;
  j["config_hash"] = canon.hash();
  return j;
}

// ---- metrics ----

struct MetricsArgs {
  std::string scheme;
  double gamma = 1.0;
  double lambda = 0.0;
  double hbar = 1.0;
  bool resonant = false;
  double theta0 = 1.0;
  double thetadot0 = 1.0;
  double xi0 = 0.0;
  double tau = 1.0;
  std::optional<double> tau0;
  std::string output;
};

DrivingScheme make_scheme(const std::string& name, bool resonant, double gamma, double lambda,
                          double hbar) {
  const SchemeKind kind = parse_scheme_kind(name);
  return resonant ? DrivingScheme::resonant(kind, lambda, hbar)
                  : DrivingScheme::unconstrained(kind, gamma, lambda, hbar);
}

void cmd_metrics(const MetricsArgs& a, const Emit& emit) {
  const DrivingScheme scheme = make_scheme(a.scheme, a.resonant, a.gamma, a.lambda, a.hbar);
  const double tau0 = a.tau0.value_or(a.xi0);
  const PathMetricsReport r = path_metrics(scheme, a.xi0, a.theta0, a.thetadot0, a.tau, tau0);

  const double v = 2.0 * scheme.gamma() / scheme.hbar() * std::abs(scheme.profile(a.theta0)) *
                   a.thetadot0;
  Canon canon("metrics");
  canon.add("scheme", std::string(to_string(scheme.kind())))
      .add("gamma", scheme.gamma())
      .add("lambda", scheme.lambda())
      .add("hbar", scheme.hbar())
      .add("theta0", a.theta0)
      .add("thetadot0", a.thetadot0)
      .add("xi0", a.xi0)
      .add("tau0", tau0)
      .add("tau", a.tau);

  nlohmann::ordered_json j = json_header("metrics", canon);
  j["scheme"] = to_string(scheme.kind());
  j["gamma"] = scheme.gamma();
  j["lambda"] = scheme.lambda();
  j["hbar"] = scheme.hbar();
  j["theta0"] = a.theta0;
  j["thetadot0"] = a.thetadot0;
  j["xi0"] = a.xi0;
  j["tau0"] = tau0;
  j["tau"] = a.tau;
  j["v_E"] = r.v_E;
  j["r_E"] = r.r_E;
  j["L"] = r.length;
  j["I"] = r.divergence;
  j["C"] = r.igc;
  j["dC_dtau"] = r.igc_rate;
  j["v_E_closed"] = v;
  j["r_E_closed"] = v * v;
  j["L_closed"] = v * a.tau;
  j["I_closed"] = v * v * a.tau;
  j["C_closed"] = v * a.tau / 2.0;
  j["dC_dtau_closed"] = v / 2.0;
  emit(j.dump(2) + "\n");
}

// ---- geodesic ----

struct GeodesicArgs {
  std::string scheme;
  double gamma = 1.0;
  double lambda = 0.0;
  double hbar = 1.0;
  bool resonant = false;
  double theta0 = 1.0;
  double thetadot0 = 0.1;
  double xi0 = 0.0;
  double span = 1.0;
  std::size_t count = 101;
  std::string output;
};

void cmd_geodesic(const GeodesicArgs& a, const Emit& emit) {
  const DrivingScheme scheme = make_scheme(a.scheme, a.resonant, a.gamma, a.lambda, a.hbar);
  const figures::Grid grid{a.xi0, a.xi0 + a.span, a.count};
  const std::vector<double> xs = grid.closed();
  const Geodesic closed = geodesic_closed_form(scheme, a.xi0, a.theta0, a.thetadot0);
  const NumericGeodesic chr =
      geodesic_numeric(scheme, a.xi0, a.theta0, a.thetadot0, grid.stop, GeodesicForm::Christoffel);
  const NumericGeodesic div =
      geodesic_numeric(scheme, a.xi0, a.theta0, a.thetadot0, grid.stop, GeodesicForm::Divergence);
  const MetricField metric = fisher_closed_form(scheme);

  report::Table table;
  table.command = "geodesic";
  table.columns = {
      {"xi", "affine parameter"},
      {"theta_closed", "closed-form geodesic"},
      {"theta_christoffel", "theta'' + g'/(2g) theta'^2 = 0, Dormand-Prince 5(4)"},
      {"theta_divergence", "(g theta')' - g'/2 theta'^2 = 0, Dormand-Prince 5(4)"},
      {"thetadot_closed", "d theta / d xi of the closed form"},
      {"v_E", "sqrt(g(theta)) thetadot along the closed form"},
  };
  table.notes.push_back("scheme=" + std::string(to_string(scheme.kind())) +
                        " validity_end=" + format_number(closed.validity_end()));
  for (double xi : xs) {
    const double th = closed.theta(xi);
    const double td = closed.thetadot(xi);
    table.rows.push_back({xi, th, chr.theta(xi), div.theta(xi), td, std::sqrt(metric.g(th)) * td});
  }
  Canon canon("geodesic");
  canon.add("scheme", std::string(to_string(scheme.kind())))
      .add("gamma", scheme.gamma())
      .add("lambda", scheme.lambda())
      .add("hbar", scheme.hbar())
      .add("theta0", a.theta0)
      .add("thetadot0", a.thetadot0)
      .add("xi", grid);
  emit(csv(table, canon));
}

// ---- figures ----

void add_grid_options(CLI::App* app, const std::string& name, figures::Grid& grid) {
  app->add_option("--" + name + "-start", grid.start, name + " range start")->capture_default_str();
  app->add_option("--" + name + "-stop", grid.stop, name + " range stop")->capture_default_str();
  app->add_option("--" + name + "-count", grid.count, name + " range point count")->capture_default_str();
}

struct Figure1Args {
  figures::Figure1Config config;
  std::string panel = "rates";
  std::string output;
};

void cmd_figure1(const Figure1Args& a, const Emit& emit) {
  const auto& c = a.config;
  Canon canon("figure1");
  canon.add("panel", a.panel).add("theta0", c.theta0).add("thetadot0", c.thetadot0)
      .add("gamma", c.gamma).add("hbar", c.hbar);
  if (a.panel == "rates") {
    canon.add("lambda", c.lambda);
    emit(csv(figures::figure1_rates(c), canon));
  } else {
    canon.add("tau", c.tau).add("complexity_lambda", c.complexity_lambda);
    emit(csv(figures::figure1_complexity(c), canon));
  }
}

struct Figure2Args {
  figures::Figure2Config config;
  std::string panel = "rates";
  std::string output;
};

void cmd_figure2(const Figure2Args& a, const Emit& emit) {
  const auto& c = a.config;
  Canon canon("figure2");
  canon.add("panel", a.panel).add("gamma", c.gamma).add("hbar", c.hbar);
  if (a.panel == "rates") {
    canon.add("theta0", c.theta0).add("thetadot0", c.thetadot0).add("lambda", c.lambda);
    emit(csv(figures::figure2_rates(c), canon));
  } else {
    canon.add("region_theta0", c.region_theta0).add("region_lambda", c.region_lambda);
    emit(csv(figures::figure2_region(c), canon));
  }
}

// ---- table1 ----

struct Table1Args {
  std::vector<double> lambdas{18.0};
  double theta0 = 1.0;
  double thetadot0 = 1.0;
  double hbar = 1.0;
  std::string format = "csv";
  std::string output;
};

void cmd_table1(const Table1Args& a, const Emit& emit) {
  Canon canon("table1");
  canon.add("theta0", a.theta0).add("thetadot0", a.thetadot0).add("hbar", a.hbar).add("format", a.format);
  for (double l : a.lambdas) canon.add("lambda", l);

  report::Table table;
  table.command = "table1";
  table.label_column = "scheme";
  table.columns = {
      {"lambda", "frequency parameter; Gamma = (pi/2) hbar lambda"},
      {"rank", "1 = most efficient, by eta_sym descending"},
      {"r_E", "geodesic entropy production rate g(theta0) thetadot0^2"},
      {"eta1", "1 - r_E / r_max"},
      {"eta2", "r_min / r_E"},
      {"eta_sym", "1 - |r_E - r_min| / (r_E + r_min)"},
      {"igc_slope", "dC/dtau = (Gamma/hbar) thetadot0 |w(theta0)| = v_E / 2"},
      {"conforms", "1 if the order is exponential > powerlaw > oscillating > constant"},
      {"ties", "1 if two schemes share the same rate"},
  };
  table.notes.push_back("theta0=" + format_number(a.theta0) + " thetadot0=" + format_number(a.thetadot0));

  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (double lambda : a.lambdas) {
    std::vector<DrivingScheme> schemes;
    for (SchemeKind k : kAllSchemes) schemes.push_back(DrivingScheme::resonant(k, lambda, a.hbar));
    const EfficiencyRanking ranking = rank_schemes(schemes, a.theta0, a.thetadot0);
    const bool conforms = matches_reference_order(ranking);
    for (std::size_t pos = 0; pos < ranking.order.size(); ++pos) {
      const RankingEntry& e = ranking.entries[ranking.order[pos]];
      const double rank = static_cast<double>(pos + 1);
      table.row_labels.push_back(e.label);
      table.rows.push_back({lambda, rank, e.r_E, e.eta1, e.eta2, e.eta_sym, e.igc_slope,
                            conforms ? 1.0 : 0.0, ranking.has_ties ? 1.0 : 0.0});
      nlohmann::ordered_json row;
      row["lambda"] = lambda;
      row["scheme"] = e.label;
      row["rank"] = pos + 1;
      row["r_E"] = e.r_E;
      row["eta1"] = e.eta1;
      row["eta2"] = e.eta2;
      row["eta_sym"] = e.eta_sym;
      row["igc_slope"] = e.igc_slope;
      row["conforms"] = conforms;
      row["ties"] = ranking.has_ties;
      rows.push_back(row);
    }
  }

  if (a.format == "json") {
    nlohmann::ordered_json j = json_header("table1", canon);
    j["theta0"] = a.theta0;
    j["thetadot0"] = a.thetadot0;
    j["rows"] = rows;
    emit(j.dump(2) + "\n");
  } else {
    emit(csv(table, canon));
  }
}

// ---- crossover ----

struct CrossoverArgs {
  std::string a = "exponential";
  std::string b = "powerlaw";
  double theta0 = 1.0;
  double lo = 1.0;
  double hi = 4.0;
  double hbar = 1.0;
  std::string output;
};

void cmd_crossover(const CrossoverArgs& a, const Emit& emit) {
  const SchemeKind ka = parse_scheme_kind(a.a);
  const SchemeKind kb = parse_scheme_kind(a.b);
  const double lambda = rate_crossover(ka, kb, a.theta0, a.lo, a.hi, a.hbar);
  const double u = lambda * a.theta0;
  Canon canon("crossover");
  canon.add("a", std::string(to_string(ka))).add("b", std::string(to_string(kb)))
      .add("theta0", a.theta0).add("lo", a.lo).add("hi", a.hi).add("hbar", a.hbar);
  nlohmann::ordered_json j = json_header("crossover", canon);
  j["scheme_a"] = to_string(ka);
  j["scheme_b"] = to_string(kb);
  j["theta0"] = a.theta0;
  j["lambda_star"] = lambda;
  j["u_star"] = u;
  // Exponential against power law crosses where (1 + u)^2 = e^u.
  j["boundary_residual"] = (1 + u) * (1 + u) - std::exp(u);
  emit(j.dump(2) + "\n");
}

// ---- verify ----

int cmd_verify(const verify::VerifyOptions& options, std::ostream& out, std::ostream& err) {
  const auto results = verify::run_checks(options);
  if (results.empty()) {
    err << "no checks match filter '" << options.filter << "'\n";
    return kUsageError;
  }
  std::size_t passed = 0;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << " measured=" << format_number(r.measured)
        << " tol=" << format_number(r.tolerance);
    if (!r.error.empty()) out << " error=" << r.error;
    out << '\n';
    if (r.passed) ++passed;
  }
  out << passed << '/' << results.size() << " checks passed\n";
  if (passed == results.size()) return kOk;
  for (const auto& r : results) {
    if (!r.passed) err << "invariant violated: " << r.name << '\n';
  }
  return kVerifyFailure;
}

CLI::Option* add_scheme_options(CLI::App* sub, std::string& scheme, double& gamma, double& lambda,
                                double& hbar, bool& resonant) {
  auto* opt = sub->add_option("--scheme", scheme, "constant|oscillating|powerlaw|exponential")->required();
  sub->add_option("--gamma", gamma, "peak field intensity Gamma")->capture_default_str();
  sub->add_option("--lambda", lambda, "frequency parameter lambda")->capture_default_str();
  sub->add_option("--hbar", hbar, "reduced Planck constant")->capture_default_str();
  sub->add_flag("--resonant", resonant, "couple Gamma = (pi/2) hbar lambda");
  return opt;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"entrogeo: entropic efficiency and complexity of driven two-level quantum paths"};
  app.name("entrogeo");
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ENTROGEO_VERSION));

  MetricsArgs metrics;
  auto* m = app.add_subcommand("metrics", "path metrics of one closed-form geodesic (JSON)");
  add_scheme_options(m, metrics.scheme, metrics.gamma, metrics.lambda, metrics.hbar, metrics.resonant);
  m->add_option("--theta0", metrics.theta0)->capture_default_str();
  m->add_option("--thetadot0", metrics.thetadot0)->capture_default_str();
  m->add_option("--xi0", metrics.xi0)->capture_default_str();
  m->add_option("--tau", metrics.tau, "window length")->capture_default_str();
  m->add_option("--tau0", metrics.tau0, "window start (default xi0)");
  m->add_option("-o,--output", metrics.output, "output file (default stdout)");

  GeodesicArgs geo;
  auto* g = app.add_subcommand("geodesic", "closed-form vs numeric geodesic (CSV)");
  add_scheme_options(g, geo.scheme, geo.gamma, geo.lambda, geo.hbar, geo.resonant);
  g->add_option("--theta0", geo.theta0)->capture_default_str();
  g->add_option("--thetadot0", geo.thetadot0)->capture_default_str();
  g->add_option("--xi0", geo.xi0)->capture_default_str();
  g->add_option("--span", geo.span, "length of the xi range")->capture_default_str();
  g->add_option("--count", geo.count, "sample count")->capture_default_str();
  g->add_option("-o,--output", geo.output);

  Figure1Args f1;
  auto* f1app = app.add_subcommand("figure1", "rescaled rates, efficiencies, complexity (CSV)");
  add_grid_options(f1app, "lambda", f1.config.lambda);
  add_grid_options(f1app, "tau", f1.config.tau);
  f1app->add_option("--panel", f1.panel, "rates (lambda sweep) or complexity (tau sweep)")
      ->check(CLI::IsMember({"rates", "complexity"}))->capture_default_str();
  f1app->add_option("--theta0", f1.config.theta0)->capture_default_str();
  f1app->add_option("--thetadot0", f1.config.thetadot0)->capture_default_str();
  f1app->add_option("--gamma", f1.config.gamma)->capture_default_str();
  f1app->add_option("--hbar", f1.config.hbar)->capture_default_str();
  f1app->add_option("--complexity-lambda", f1.config.complexity_lambda)->capture_default_str();
  f1app->add_option("-o,--output", f1.output);

  Figure2Args f2;
  auto* f2app = app.add_subcommand("figure2", "exponential vs power-law comparison (CSV)");
  add_grid_options(f2app, "lambda", f2.config.lambda);
  add_grid_options(f2app, "region-theta0", f2.config.region_theta0);
  add_grid_options(f2app, "region-lambda", f2.config.region_lambda);
  f2app->add_option("--panel", f2.panel, "rates (lambda sweep) or region ((theta0, lambda) grid)")
      ->check(CLI::IsMember({"rates", "region"}))->capture_default_str();
  f2app->add_option("--theta0", f2.config.theta0)->capture_default_str();
  f2app->add_option("--thetadot0", f2.config.thetadot0)->capture_default_str();
  f2app->add_option("--gamma", f2.config.gamma)->capture_default_str();
  f2app->add_option("--hbar", f2.config.hbar)->capture_default_str();
  f2app->add_option("-o,--output", f2.output);

  Table1Args t1;
  auto* t1app = app.add_subcommand("table1", "efficiency ranking of the four schemes");
  t1app->add_option("--lambda", t1.lambdas, "lambda value (repeatable)")->capture_default_str();
  t1app->add_option("--theta0", t1.theta0)->capture_default_str();
  t1app->add_option("--thetadot0", t1.thetadot0)->capture_default_str();
  t1app->add_option("--hbar", t1.hbar)->capture_default_str();
  t1app->add_option("--format", t1.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  t1app->add_option("-o,--output", t1.output);

  CrossoverArgs cx;
  auto* cxapp = app.add_subcommand("crossover", "lambda at which two resonant schemes have equal rates");
  cxapp->add_option("--scheme-a", cx.a)->capture_default_str();
  cxapp->add_option("--scheme-b", cx.b)->capture_default_str();
  cxapp->add_option("--theta0", cx.theta0)->capture_default_str();
  cxapp->add_option("--lambda-lo", cx.lo)->capture_default_str();
  cxapp->add_option("--lambda-hi", cx.hi)->capture_default_str();
  cxapp->add_option("--hbar", cx.hbar)->capture_default_str();
  cxapp->add_option("-o,--output", cx.output);

  verify::VerifyOptions vopts;
  auto* v = app.add_subcommand("verify", "run the invariant suite");
  v->add_option("--filter", vopts.filter, "run only checks whose name contains this text");
  v->add_option("--inject-breach", vopts.inject_breach, "force the named check to fail (test hook)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*m) cmd_metrics(metrics, {out, metrics.output});
    else if (*g) cmd_geodesic(geo, {out, geo.output});
    else if (*f1app) cmd_figure1(f1, {out, f1.output});
    else if (*f2app) cmd_figure2(f2, {out, f2.output});
    else if (*t1app) cmd_table1(t1, {out, t1.output});
    else if (*cxapp) cmd_crossover(cx, {out, cx.output});
    else if (*v) return cmd_verify(vopts, out, err);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const NumericalFailure& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const Error& e) {
    // Remaining library errors concern inputs and output files.
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kNumericalFailure;
  }
  return kOk;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace entrogeo::cli
