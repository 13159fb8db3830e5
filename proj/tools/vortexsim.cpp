#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <numbers>
#include <sstream>

#include "vortex/drift.hpp"
#include "vortex/scenario.hpp"
#include "vortex/stability.hpp"

using namespace vortex;
namespace fs = std::filesystem;

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitPhysics = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path.string());
  out << text;
}

Vec3 parse_vec3(const std::string& s) {
  Vec3 v;
  char c1, c2;
  std::istringstream is(s);
  if (!(is >> v.x() >> c1 >> v.y() >> c2 >> v.z()) || c1 != ',' || c2 != ',')
    throw ConfigError("expected X,Y,Z but got '" + s + "'");
  return v;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::FormallyStable: return "FormallyStable";
    case Verdict::Indefinite: return "Indefinite";
    default: return "Degenerate";
  }
}

int cmd_simulate(const std::string& config_path, const std::string& out_dir) {
  ScenarioConfig cfg = scenario_from_json(read_file(config_path));
  fs::create_directories(out_dir);
  ScenarioResult res = run_scenario(cfg);
  write_file(fs::path(out_dir) / "trajectory.csv",
             trajectory_csv(res.run.trajectory));
  write_file(fs::path(out_dir) / "conservation.txt",
             conservation_to_text(res.conservation));
  if (cfg.preqs.size() == 2)
    write_file(fs::path(out_dir) / "summary.json",
               summary_to_json(res.summary));
  if (!res.run.completed) {
    std::cerr << "run stopped early at step " << res.run.failed_step << ": "
              << res.run.error << "\n";
    return kExitPhysics;
  }
  return 0;
}

int cmd_releq(const std::string& domain, int n, double alpha, double gamma,
              double radius) {
  nlohmann::json j;
  j["domain"] = domain;
  j["n"] = n;
  j["alpha"] = alpha;
  j["gamma"] = gamma;
  if (domain == "sphere") {
    SphereReleq re = build_sphere_releq(n, alpha, gamma, radius);
    j["radius"] = radius;
    j["strengths"] = re.sys.strengths;
    j["positions"] = nlohmann::json::array();
    for (const Vec3& x : re.state.x)
      j["positions"].push_back({x.x(), x.y(), x.z()});
    j["generator"] = {re.generator.x(), re.generator.y(), re.generator.z()};
    j["lambda_outer"] = re.lambda_outer;
    j["lambda_central"] = re.lambda_central;
  } else if (domain == "plane") {
    PlanarReleq re = build_planar_releq(n, alpha, gamma);
    j["strengths"] = re.sys.strengths;
    j["positions"] = nlohmann::json::array();
    for (const Complex& z : re.state.z)
      j["positions"].push_back({z.real(), z.imag()});
    j["theta_dot"] = re.theta_dot;
  } else {
    throw ConfigError("domain must be sphere or plane");
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_stability(int n, double alpha_min, double alpha_max, int steps) {
  if (steps < 1) throw ConfigError("steps must be at least 1");
  if (!(alpha_min > 0.0 && alpha_max < std::numbers::pi &&
        alpha_min <= alpha_max))
    throw ConfigError("need 0 < alpha-min <= alpha-max < pi");
  std::printf("alpha, lambda_min, lambda_max, verdict\n");
  for (int k = 0; k < steps; ++k) {
    double alpha =
        steps == 1 ? alpha_min
                   : alpha_min + k * (alpha_max - alpha_min) / (steps - 1);
    StabilityReport rep =
        formal_stability(build_sphere_releq(n, alpha, 1.0, 1.0));
    double lo = 0.0, hi = 0.0;
    if (rep.eigenvalues.size() > 0) {
      lo = rep.eigenvalues.minCoeff();
      hi = rep.eigenvalues.maxCoeff();
    }
    std::printf("%.17g, %.17g, %.17g, %s\n", alpha, lo, hi,
                verdict_name(rep.verdict));
  }
  return 0;
}

int cmd_drift(int n, double alpha, const Vec3& dmu, double duration) {
  SphereReleq re = build_sphere_releq(n, alpha, 1.0, 1.0);
  DriftPrediction pred = predict_drift(re, dmu);
  Perturbation pert = build_perturbation(re, dmu);
  if (pert.spec.warning)
    std::cerr << "warning: kick is large for this ring (|delta/alpha| = "
              << pert.spec.delta_ratio << ", |dalpha/alpha| = "
              << pert.spec.dalpha_ratio << ")\n";
  IntegratorConfig cfg;
  cfg.dt = 0.005 * 2.0 * std::numbers::pi / re.generator.norm();
  long steps = std::lround(duration / cfg.dt);
  cfg.record_every = std::max<long>(1, steps / 4000);
  auto res = integrate(re.sys, pert.state, cfg, steps);
  DriftRateEstimate est =
      estimate_drift_rate(re.sys, res.trajectory, dmu, 50);
  double predicted = pred.angular_velocity.dot(dmu) < 0.0
                         ? -pred.angular_velocity.norm()
                         : pred.angular_velocity.norm();
  std::printf("# predicted rate: %.17g\n", predicted);
  std::printf("# measured mean rate: %.17g\n", est.mean_rate);
  std::printf("# dispersion: %.17g\n", est.dispersion);
  std::printf("window_index, rate\n");
  for (size_t k = 0; k < est.window_rates.size(); ++k)
    std::printf("%zu, %.17g\n", k, est.window_rates[k]);
  if (!res.completed) return kExitPhysics;
  return 0;
}

int cmd_collide(const std::string& kind, double alpha, double speed,
                double impact, const std::string& out_dir) {
  CollisionKind k;
  if (kind == "like") {
    k = CollisionKind::LikePair;
  } else if (kind == "anti") {
    k = CollisionKind::AntiPair;
  } else {
    throw ConfigError("kind must be like or anti");
  }
  ScenarioConfig cfg = collision_scenario(k, alpha, impact, speed);
  ScenarioResult res = run_scenario(cfg);
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    write_file(fs::path(out_dir) / "trajectory.csv",
               trajectory_csv(res.run.trajectory));
    write_file(fs::path(out_dir) / "summary.json",
               summary_to_json(res.summary));
    write_file(fs::path(out_dir) / "conservation.txt",
               conservation_to_text(res.conservation));
  }
  std::cout << summary_to_json(res.summary) << "\n";
  std::cout << conservation_to_text(res.conservation);
  if (!res.run.completed) return kExitPhysics;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"point-vortex ring experiments on the sphere"};
  app.require_subcommand(1);

  auto* sim = app.add_subcommand("simulate", "run a JSON scenario");
  std::string config_path, out_dir = "out";
  sim->add_option("--config", config_path, "scenario JSON file")->required();
  sim->add_option("--out", out_dir, "output directory");

  auto* rel = app.add_subcommand("releq", "print a ring equilibrium");
  std::string domain = "sphere";
  int n = 4;
  double alpha = 0.5, gamma = 1.0, radius = 1.0;
  rel->add_option("--domain", domain, "sphere or plane");
  rel->add_option("--n", n, "number of vortices")->required();
  rel->add_option("--alpha", alpha, "opening angle / ring radius")->required();
  rel->add_option("--gamma", gamma, "central strength")->required();
  rel->add_option("--radius", radius, "sphere radius");

  auto* stab = app.add_subcommand("stability", "sweep formal stability");
  double alpha_min = 0.1, alpha_max = 3.0;
  int steps = 50;
  stab->add_option("--n", n, "number of vortices")->required();
  stab->add_option("--alpha-min", alpha_min, "sweep start")->required();
  stab->add_option("--alpha-max", alpha_max, "sweep end")->required();
  stab->add_option("--steps", steps, "grid points");

  auto* dr = app.add_subcommand("drift", "measure the drift of a kicked ring");
  std::string dmu_str = "0,0,0.01";
  double duration = 100.0;
  dr->add_option("--n", n, "number of vortices")->required();
  dr->add_option("--alpha", alpha, "opening angle")->required();
  dr->add_option("--dmu", dmu_str, "momentum kick X,Y,Z")->required();
  dr->add_option("--duration", duration, "integration time")->required();

  auto* col = app.add_subcommand("collide", "run a two-ring collision preset");
  std::string kind = "like";
  double speed = 1.0, impact = 0.0;
  col->add_option("--kind", kind, "like or anti")->required();
  col->add_option("--alpha", alpha, "opening angle")->required();
  col->add_option("--speed", speed, "closing speed, fraction of the budget")
      ->required();
  col->add_option("--impact", impact, "impact parameter (arc length)");
  std::string collide_out;
  col->add_option("--out", collide_out, "optional output directory");

  try {
    app.parse(argc, argv);
    if (sim->parsed()) return cmd_simulate(config_path, out_dir);
    if (rel->parsed()) return cmd_releq(domain, n, alpha, gamma, radius);
    if (stab->parsed()) return cmd_stability(n, alpha_min, alpha_max, steps);
    if (dr->parsed())
      return cmd_drift(n, alpha, parse_vec3(dmu_str), duration);
    if (col->parsed())
      return cmd_collide(kind, alpha, speed, impact, collide_out);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  } catch (const CollisionError& e) {
    std::cerr << "physics error: " << e.what() << "\n";
    return kExitPhysics;
  } catch (const BudgetExceeded& e) {
    std::cerr << "physics error: " << e.what() << "\n";
    return kExitPhysics;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}
