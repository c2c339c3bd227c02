#include "faskl/cli.hpp"

#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "faskl/baselines.hpp"
#include "faskl/capacity.hpp"
#include "faskl/errors.hpp"
#include "faskl/infotheory.hpp"
#include "faskl/outage.hpp"
#include "faskl/spectral.hpp"
#include "faskl/version.hpp"

namespace faskl::cli {
namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> grid;
  if (text.find(':') != std::string::npos) {
    double start = 0.0, step = 0.0, stop = 0.0;
    if (std::sscanf(text.c_str(), "%lf:%lf:%lf", &start, &step, &stop) != 3 || step <= 0.0)
      throw std::invalid_argument("bad grid '" + text + "' (want start:step:stop)");
    for (double v = start; v <= stop + 1e-9; v += step) grid.push_back(v);
  } else {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) grid.push_back(std::stod(item));
  }
  if (grid.empty()) throw std::invalid_argument("empty SNR grid");
  return grid;
}

// Table sink: stdout by default, a file when --out is given.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw IoError("cannot open '" + path + "' for writing");
      os_ = file_.get();
    } else {
      os_ = &fallback;
    }
  }
  std::ostream& os() { return *os_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* os_ = nullptr;
};

struct CommonOpts {
  int n = 20;
  double w = 3.0;
  double eta = 1.0;
  double gamma_th_db = 0.0;
  double snr_db = 10.0;
  std::string snr_grid;
  int k = 1;
  int q = 10;
  int d = 4;
  double trials = 1e5;
  std::uint64_t seed = 42;
  std::string method = "exact_mc";
  std::string out;
};

Scenario make_scenario(const CommonOpts& o, double snr_db) {
  Scenario s;
  s.ports = o.n;
  s.aperture = o.w;
  s.eta = o.eta;
  s.avg_snr = std::pow(10.0, snr_db / 10.0);
  s.gamma_th = std::pow(10.0, o.gamma_th_db / 10.0);
  s.validate();
  return s;
}

std::vector<double> grid_or_point(const CommonOpts& o, bool grid_given, bool point_given) {
  if (grid_given) return parse_grid(o.snr_grid);
  if (point_given) return {o.snr_db};
  return parse_grid("-10:2:30");
}

nlohmann::json modeling_choices() {
  return {
      {"bcm_rho_fit", "within-block mean of the true correlations, clamped to [-1/(B-1), 1]"},
      {"vbcm_rule", "new block when R(anchor, port) < 0 with anchor = first port of the block"},
      {"block_evaluation", "Monte Carlo over the block-diagonal covariance"},
  };
}

void write_sidecar(const std::string& path, const std::string& figure,
                   const nlohmann::json& config) {
  nlohmann::json j;
  j["figure"] = figure;
  j["config"] = config;
  j["library_version"] = kVersion;
  j["modeling_choices"] = modeling_choices();
  char stamp[32];
  std::time_t now = std::time(nullptr);
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  j["timestamp"] = stamp;
  std::ofstream f(path);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << j.dump(2) << "\n";
}

// ---- eig ----------------------------------------------------------------

int cmd_eig(const CommonOpts& o, std::ostream& out) {
  Sink sink(o.out, out);
  const EigenSystem eig = eigendecompose(jakes_matrix(o.n, o.w));
  const int n_pos = positive_entropy_modes(eig);
  sink.os() << "k,lambda,power_frac,entropy_frac\n";
  double cum = 0.0;
  for (int k = 0; k < eig.size; ++k) {
    cum += eig.eigenvalues[k];
    sink.os() << (k + 1) << ',' << fmt(eig.eigenvalues[k]) << ',' << fmt(cum / eig.size) << ',';
    if (k < n_pos) sink.os() << fmt(entropy_fraction(eig, o.eta, k + 1));
    sink.os() << '\n';
  }
  return kExitOk;
}

// ---- outage / capacity ---------------------------------------------------

int cmd_outage(const CommonOpts& o, bool grid_given, bool point_given, std::ostream& out) {
  Sink sink(o.out, out);
  const Method method = parse_method(o.method, o.k, o.q, o.d);
  const auto grid = grid_or_point(o, grid_given, point_given);
  const Scenario scenario = make_scenario(o, grid.front());
  const auto curve = outage_curve(scenario, method, grid,
                                  static_cast<std::uint64_t>(o.trials), o.seed);
  sink.os() << "snr_db,method,trials,p_out,std_error\n";
  for (const auto& pt : curve)
    sink.os() << fmt(pt.snr_db) << ',' << method_label(method) << ',' << pt.estimate.trials
              << ',' << fmt(pt.estimate.value) << ',' << fmt(pt.estimate.std_error) << '\n';
  return kExitOk;
}

int cmd_capacity(const CommonOpts& o, bool grid_given, bool point_given, std::ostream& out) {
  Sink sink(o.out, out);
  const Method method = parse_method(o.method, o.k, o.q, o.d);
  const auto grid = grid_or_point(o, grid_given, point_given);
  const Scenario scenario = make_scenario(o, grid.front());
  const auto curve = capacity_curve(scenario, method, grid,
                                    static_cast<std::uint64_t>(o.trials), o.seed);
  sink.os() << "snr_db,method,trials,capacity,std_error\n";
  for (const auto& pt : curve)
    sink.os() << fmt(pt.snr_db) << ',' << method_label(method) << ',' << pt.estimate.trials
              << ',' << fmt(pt.estimate.value) << ',' << fmt(pt.estimate.std_error) << '\n';
  return kExitOk;
}

// ---- rd -------------------------------------------------------------------

std::vector<double> default_theta_grid(const std::vector<double>& lambdas, double eta) {
  const double top = eta * lambdas.front() * 1.05;
  const double bottom = top * 1e-8;
  std::vector<double> grid;
  const int count = 81;
  for (int i = 0; i < count; ++i)
    grid.push_back(top * std::pow(bottom / top, static_cast<double>(i) / (count - 1)));
  return grid;
}

int cmd_rd(const CommonOpts& o, std::ostream& out) {
  Sink sink(o.out, out);
  const EigenSystem eig = eigendecompose(jakes_matrix(o.n, o.w));
  sink.os() << "kind,k,theta,rate_bits,distortion,distortion_per_port\n";
  const auto thetas = default_theta_grid(eig.eigenvalues, o.eta);
  for (const auto& p : rd_curve(eig.eigenvalues, o.eta, thetas))
    sink.os() << "curve,," << fmt(p.theta) << ',' << fmt(p.rate_bits) << ','
              << fmt(p.distortion) << ',' << fmt(p.distortion_per_port) << '\n';
  for (int k = 1; k < eig.size; ++k) {
    if (eig.eigenvalues[k] <= 0.0 ||
        eig.eigenvalues[k - 1] - eig.eigenvalues[k] < 1e-10)
      break;
    const RdPoint p = kl_rd_point(eig, o.eta, k);
    sink.os() << "kl_point," << k << ',' << fmt(p.theta) << ',' << fmt(p.rate_bits) << ','
              << fmt(p.distortion) << ',' << fmt(p.distortion_per_port) << '\n';
  }
  return kExitOk;
}

// ---- compare ---------------------------------------------------------------

int cmd_compare(const CommonOpts& o, std::ostream& out) {
  Sink sink(o.out, out);
  const CorrelationMatrix r = jakes_matrix(o.n, o.w);
  const EigenSystem eig = eigendecompose(r);
  const std::uint64_t trials = static_cast<std::uint64_t>(o.trials);
  const auto grid = parse_grid("-10:4:30");

  Scenario scenario = make_scenario(o, 10.0);
  const auto exact = outage_curve(scenario, parse_method("exact_mc", 0, 0, 0), grid,
                                  trials, o.seed);

  struct Row {
    std::string name;
    double frob;
    Method method;
  };
  const int kstar = dof_rule(o.w);
  std::vector<Row> rows;
  auto rank_k = [&](int k) {
    SquareMatrix approx(o.n);
    for (int i = 0; i < o.n; ++i)
      for (int j = 0; j < o.n; ++j) {
        double s = 0.0;
        for (int m = 0; m < k; ++m)
          s += eig.eigenvalues[m] * eig.eigenvectors.at(i, m) * eig.eigenvectors.at(j, m);
        approx.at(i, j) = s;
      }
    return frobenius_rel_error(r, approx);
  };
  rows.push_back({"kl_mc_k5", rank_k(5), parse_method("kl_mc", 5, o.q, o.d)});
  rows.push_back({"kl_mc_k" + std::to_string(kstar), rank_k(kstar),
                  parse_method("kl_mc", kstar, o.q, o.d)});
  rows.push_back({"bcm_d" + std::to_string(o.d),
                  frobenius_rel_error(r, block_covariance(bcm_partition(o.n, o.d, r), o.n)),
                  parse_method("bcm", 0, 0, o.d)});
  rows.push_back({"vbcm",
                  frobenius_rel_error(r, block_covariance(vbcm_partition(r), o.n)),
                  parse_method("vbcm", 0, 0, 0)});
  rows.push_back({"iid", frobenius_rel_error(r, SquareMatrix::identity(o.n)),
                  parse_method("iid", 0, 0, 0)});

  sink.os() << "method,frobenius_rel_error,mean_outage_deviation,bias_direction\n";
  for (const auto& row : rows) {
    const auto curve = outage_curve(scenario, row.method, grid, trials, o.seed);
    double dev = 0.0;
    double noise = 0.0;
    int used = 0;
    for (std::size_t i = 0; i < curve.size(); ++i) {
      if (exact[i].estimate.value < 1e-4) continue;
      dev += curve[i].estimate.value - exact[i].estimate.value;
      noise += std::hypot(curve[i].estimate.std_error, exact[i].estimate.std_error);
      ++used;
    }
    dev /= std::max(used, 1);
    noise /= std::max(used, 1);
    const char* direction = dev > 3.0 * noise / std::sqrt(static_cast<double>(std::max(used, 1)))
                                ? "conservative"
                            : dev < -3.0 * noise / std::sqrt(static_cast<double>(std::max(used, 1)))
                                ? "optimistic"
                                : "neutral";
    sink.os() << row.name << ',' << fmt(row.frob) << ',' << fmt(dev) << ',' << direction << '\n';
  }
  return kExitOk;
}

// ---- figures ---------------------------------------------------------------

struct FigureFiles {
  std::ofstream csv;
  std::string csv_path;
  std::string json_path;
};

FigureFiles open_figure(const std::string& dir, const std::string& id) {
  FigureFiles f;
  const std::string base = dir.empty() ? id : dir + "/" + id;
  f.csv_path = base + ".csv";
  f.json_path = base + ".json";
  f.csv.open(f.csv_path);
  if (!f.csv) throw IoError("cannot open '" + f.csv_path + "' for writing");
  return f;
}

void outage_rows(std::ofstream& csv, const Scenario& scenario, const Method& method,
                 const std::vector<double>& grid, std::uint64_t trials, std::uint64_t seed) {
  for (const auto& pt : outage_curve(scenario, method, grid, trials, seed))
    csv << fmt(pt.snr_db) << ',' << method_label(method) << ',' << fmt(pt.estimate.value)
        << ',' << fmt(pt.estimate.std_error) << '\n';
}

int cmd_figure(const std::string& id, const CommonOpts& o, bool grid_given, std::ostream&) {
  auto f = open_figure(o.out, id);
  const std::uint64_t trials = static_cast<std::uint64_t>(o.trials);
  const auto grid = grid_given ? parse_grid(o.snr_grid) : parse_grid("-10:2:30");
  nlohmann::json config = {
      {"n", o.n}, {"w", o.w}, {"eta", o.eta}, {"gamma_th_db", o.gamma_th_db},
      {"trials", trials}, {"seed", o.seed}, {"q", o.q},
  };

  if (id == "fig1") {
    const Scenario s = make_scenario(o, grid.front());
    f.csv << "snr_db,method,p_out,std_error\n";
    outage_rows(f.csv, s, parse_method("exact_mc", 0, 0, 0), grid, trials, o.seed);
    for (int k : {1, 3, 5, 8})
      outage_rows(f.csv, s, parse_method("kl_mc", k, o.q, o.d), grid, trials, o.seed);
    outage_rows(f.csv, s, parse_method("rank1", 0, 0, 0), grid, trials, o.seed);
  } else if (id == "fig2") {
    f.csv << "w,n,k,epsilon\n";
    const std::pair<double, int> cases[] = {{1, 20}, {2, 20}, {3, 10}, {3, 20}, {3, 40}, {5, 20}};
    for (const auto& [w, n] : cases) {
      const EigenSystem eig = eigendecompose(jakes_matrix(n, w));
      double cum = 0.0;
      for (int k = 0; k < eig.size; ++k) {
        cum += eig.eigenvalues[k];
        f.csv << fmt(w) << ',' << n << ',' << (k + 1) << ',' << fmt(1.0 - cum / eig.size) << '\n';
      }
    }
    config["cases"] = "W,N in {(1,20),(2,20),(3,10),(3,20),(3,40),(5,20)}";
  } else if (id == "fig3") {
    const Scenario s = make_scenario(o, grid.front());
    f.csv << "snr_db,method,p_out,std_error\n";
    outage_rows(f.csv, s, parse_method("exact_mc", 0, 0, 0), grid, trials, o.seed);
    for (int k : {5, 8})
      outage_rows(f.csv, s, parse_method("kl_mc", k, o.q, o.d), grid, trials, o.seed);
    outage_rows(f.csv, s, parse_method("bcm", 0, 0, 4), grid, trials, o.seed);
    outage_rows(f.csv, s, parse_method("vbcm", 0, 0, 0), grid, trials, o.seed);
    outage_rows(f.csv, s, parse_method("iid", 0, 0, 0), grid, trials, o.seed);
    outage_rows(f.csv, s, parse_method("single", 0, 0, 0), grid, trials, o.seed);
  } else if (id == "fig4") {
    f.csv << "n,method,rel_frobenius_error\n";
    for (int n : {10, 20, 40, 60, 80, 100}) {
      const CorrelationMatrix r = jakes_matrix(n, o.w);
      const EigenSystem eig = eigendecompose(r);
      auto rank_err = [&](int k) {
        SquareMatrix approx(n);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            double sum = 0.0;
            for (int m = 0; m < k; ++m)
              sum += eig.eigenvalues[m] * eig.eigenvectors.at(i, m) * eig.eigenvectors.at(j, m);
            approx.at(i, j) = sum;
          }
        return frobenius_rel_error(r, approx);
      };
      f.csv << n << ",kl_k5," << fmt(rank_err(5)) << '\n';
      f.csv << n << ",kl_k7," << fmt(rank_err(7)) << '\n';
      f.csv << n << ",bcm_d5,"
            << fmt(frobenius_rel_error(r, block_covariance(bcm_partition(n, 5, r), n))) << '\n';
      const int dprop = (n + 3) / 4;
      f.csv << n << ",bcm_dceil_n4,"
            << fmt(frobenius_rel_error(r, block_covariance(bcm_partition(n, dprop, r), n)))
            << '\n';
    }
  } else if (id == "fig5") {
    f.csv << "w,k,power_frac,entropy_frac,kstar\n";
    for (double w : {1.0, 2.0, 3.0, 5.0}) {
      const int n = 40;
      const EigenSystem eig = eigendecompose(jakes_matrix(n, w));
      const int n_pos = positive_entropy_modes(eig);
      double cum = 0.0;
      for (int k = 1; k <= n_pos; ++k) {
        cum += eig.eigenvalues[k - 1];
        f.csv << fmt(w) << ',' << k << ',' << fmt(cum / n) << ','
              << fmt(entropy_fraction(eig, o.eta, k)) << ',' << dof_rule(w) << '\n';
      }
    }
    config["n"] = 40;
  } else if (id == "fig6") {
    const std::uint64_t cap_trials = trials;
    const Scenario s = make_scenario(o, grid.front());
    f.csv << "snr_db,method,capacity,std_error\n";
    auto rows = [&](const Method& m) {
      for (const auto& pt : capacity_curve(s, m, grid, cap_trials, o.seed))
        f.csv << fmt(pt.snr_db) << ',' << method_label(m) << ',' << fmt(pt.estimate.value)
              << ',' << fmt(pt.estimate.std_error) << '\n';
    };
    rows(parse_method("exact_mc", 0, 0, 0));
    for (int k : {1, 3, 5, 8}) rows(parse_method("kl_mc", k, o.q, o.d));
    rows(parse_method("rank1", 0, 0, 0));
    rows(parse_method("bcm", 0, 0, 4));
  } else if (id == "fig7") {
    f.csv << "curve,kind,k,theta,rate_bits,distortion,distortion_per_port\n";
    const CorrelationMatrix r = jakes_matrix(o.n, o.w);
    const EigenSystem eig = eigendecompose(r);
    const auto thetas = default_theta_grid(eig.eigenvalues, o.eta);
    auto emit_curve = [&](const std::string& name, const std::vector<double>& lambdas) {
      for (const auto& p : rd_curve(lambdas, o.eta, thetas))
        f.csv << name << ",curve,," << fmt(p.theta) << ',' << fmt(p.rate_bits) << ','
              << fmt(p.distortion) << ',' << fmt(p.distortion_per_port) << '\n';
    };
    emit_curve("true", eig.eigenvalues);
    emit_curve("bcm_d4",
               eigendecompose(block_covariance(bcm_partition(o.n, 4, r), o.n)).eigenvalues);
    emit_curve("iid", std::vector<double>(o.n, 1.0));
    for (int k = 1; k <= std::min(9, eig.size - 1); ++k) {
      const RdPoint p = kl_rd_point(eig, o.eta, k);
      f.csv << "true,kl_point," << k << ',' << fmt(p.theta) << ',' << fmt(p.rate_bits) << ','
            << fmt(p.distortion) << ',' << fmt(p.distortion_per_port) << '\n';
    }
  } else {
    throw std::invalid_argument("unknown figure id '" + id + "' (fig1..fig7)");
  }

  write_sidecar(f.json_path, id, config);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"KL-expansion outage and capacity experiments for fluid antenna systems"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string figure_id;

  auto add_common = [&](CLI::App* cmd, double default_trials) {
    o.trials = default_trials;
    cmd->add_option("--n", o.n, "number of ports");
    cmd->add_option("--w", o.w, "normalized aperture W");
    cmd->add_option("--eta", o.eta, "mean channel power per port");
    cmd->add_option("--gamma-th-db", o.gamma_th_db, "outage SNR threshold (dB)");
    cmd->add_option("--trials", o.trials, "Monte Carlo trials");
    cmd->add_option("--seed", o.seed, "PRNG seed");
    cmd->add_option("--q", o.q, "Gauss-Hermite order");
    cmd->add_option("--k", o.k, "retained KL modes");
    cmd->add_option("--d", o.d, "BCM block count");
    cmd->add_option("--out", o.out, "output path");
  };

  CLI::App* eig = app.add_subcommand("eig", "eigen-spectrum table");
  add_common(eig, 1e5);

  CLI::App* outage = app.add_subcommand("outage", "outage probability");
  add_common(outage, 1e5);
  auto* og = outage->add_option("--snr-grid-db", o.snr_grid, "SNR grid start:step:stop or list");
  auto* op = outage->add_option("--snr-db", o.snr_db, "single SNR point (dB)");
  outage->add_option("--method", o.method, "evaluator");

  CLI::App* capacity = app.add_subcommand("capacity", "ergodic capacity");
  add_common(capacity, 2e5);
  auto* cg = capacity->add_option("--snr-grid-db", o.snr_grid, "SNR grid");
  auto* cp = capacity->add_option("--snr-db", o.snr_db, "single SNR point (dB)");
  capacity->add_option("--method", o.method, "evaluator");

  CLI::App* rd = app.add_subcommand("rd", "rate-distortion curve and KL points");
  add_common(rd, 1e5);

  CLI::App* compare = app.add_subcommand("compare", "model comparison summary");
  add_common(compare, 1e5);

  CLI::App* figure = app.add_subcommand("figure", "reproduce a figure as CSV + JSON sidecar");
  figure->add_option("--id", figure_id, "fig1..fig7")->required();
  add_common(figure, 1e5);
  auto* fg = figure->add_option("--snr-grid-db", o.snr_grid, "SNR grid");

  std::vector<const char*> argv;
  argv.push_back("faskl");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (figure->parsed() && figure_id == "fig6" && !figure->count("--trials")) o.trials = 2e5;
    if (eig->parsed()) return cmd_eig(o, out);
    if (outage->parsed()) return cmd_outage(o, og->count() > 0, op->count() > 0, out);
    if (capacity->parsed()) return cmd_capacity(o, cg->count() > 0, cp->count() > 0, out);
    if (rd->parsed()) return cmd_rd(o, out);
    if (compare->parsed()) return cmd_compare(o, out);
    if (figure->parsed()) return cmd_figure(figure_id, o, fg->count() > 0, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace faskl::cli
