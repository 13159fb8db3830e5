#include "vortex/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <set>
#include <sstream>

#include <json.hpp>

#include "vortex/geometry.hpp"

namespace vortex {

namespace {

using nlohmann::json;

constexpr double kPi = std::numbers::pi;

Vec3 vec3_from_json(const json& j, const char* field) {
  if (!j.is_array() || j.size() != 3)
    throw ConfigError(std::string(field) + " must be a 3-element array");
  return Vec3(j[0].get<double>(), j[1].get<double>(), j[2].get<double>());
}

double preq_diameter(const PreqSpec& p, double R) {
  return 2.0 * R * std::sin(p.alpha);
}

// Chord distance matrix of one state.
double chord(const Vec3& a, const Vec3& b) { return (a - b).norm(); }

// Connected components under single linkage at the given distance.
std::vector<std::vector<int>> link_components(const SphereState& s,
                                              double link_dist) {
  int n = s.size();
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (chord(s.x[i], s.x[j]) <= link_dist) parent[find(i)] = find(j);
  std::vector<std::vector<int>> comps(n);
  for (int i = 0; i < n; ++i) comps[find(i)].push_back(i);
  std::erase_if(comps, [](const auto& c) { return c.empty(); });
  std::sort(comps.begin(), comps.end());
  return comps;
}

std::vector<double> sorted_pair_distances(const SphereState& s,
                                          const std::vector<int>& idx) {
  std::vector<double> d;
  for (size_t a = 0; a < idx.size(); ++a)
    for (size_t b = a + 1; b < idx.size(); ++b)
      d.push_back(chord(s.x[idx[a]], s.x[idx[b]]));
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

ScenarioConfig scenario_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  try {
    ScenarioConfig cfg;
    cfg.radius = j.value("radius", 1.0);
    if (!(cfg.radius > 0.0)) throw ConfigError("radius must be positive");
    if (!j.contains("duration"))
      throw ConfigError("missing required field: duration");
    cfg.duration = j.at("duration").get<double>();
    if (!(cfg.duration > 0.0)) throw ConfigError("duration must be positive");
    if (j.contains("integrator")) {
      const json& ji = j.at("integrator");
      cfg.integrator.dt = ji.value("dt", cfg.integrator.dt);
      cfg.integrator.record_every =
          ji.value("record_every", cfg.integrator.record_every);
      std::string method = ji.value("method", "strang");
      if (method == "strang") {
        cfg.integrator.method = SplittingMethod::Strang;
      } else if (method == "lie-trotter") {
        cfg.integrator.method = SplittingMethod::LieTrotter;
      } else {
        throw ConfigError("integrator.method must be strang or lie-trotter");
      }
      cfg.integrator.collision_eps =
          ji.value("collision_eps", cfg.integrator.collision_eps);
    }
    if (!(cfg.integrator.dt > 0.0)) throw ConfigError("dt must be positive");
    if (!j.contains("preqs") || !j.at("preqs").is_array() ||
        j.at("preqs").empty())
      throw ConfigError("preqs must be a non-empty array");
    for (const json& jp : j.at("preqs")) {
      PreqSpec p;
      p.N = jp.value("n", 4);
      if (p.N < 3) throw ConfigError("preq n must be at least 3");
      if (!jp.contains("alpha"))
        throw ConfigError("preq is missing required field: alpha");
      p.alpha = jp.at("alpha").get<double>();
      if (!(p.alpha > 0.0 && p.alpha < kPi))
        throw ConfigError("preq alpha must lie in (0, pi)");
      p.Gamma = jp.value("gamma", 1.0);
      if (p.Gamma == 0.0) throw ConfigError("preq gamma must be nonzero");
      if (jp.contains("center")) p.center = vec3_from_json(jp.at("center"), "center");
      if (p.center.norm() == 0.0)
        throw ConfigError("preq center must be a nonzero direction");
      p.orientation = jp.value("orientation", 0.0);
      if (jp.contains("dmu")) p.dmu = vec3_from_json(jp.at("dmu"), "dmu");
      cfg.preqs.push_back(p);
    }
    cfg.seed = j.value("seed", 0u);
    cfg.allow_close_placement = j.value("allow_close_placement", false);
    cfg.shape_tol = j.value("shape_tol", 0.2);
    cfg.dipole_strength_tol = j.value("dipole_strength_tol", 0.05);
    return cfg;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid scenario config: ") + e.what());
  }
}

std::string scenario_to_json(const ScenarioConfig& cfg) {
  json j;
  j["radius"] = cfg.radius;
  j["duration"] = cfg.duration;
  j["integrator"] = {
      {"dt", cfg.integrator.dt},
      {"record_every", cfg.integrator.record_every},
      {"method",
       cfg.integrator.method == SplittingMethod::Strang ? "strang"
                                                        : "lie-trotter"},
      {"collision_eps", cfg.integrator.collision_eps}};
  j["preqs"] = json::array();
  for (const PreqSpec& p : cfg.preqs)
    j["preqs"].push_back(
        {{"n", p.N},
         {"alpha", p.alpha},
         {"gamma", p.Gamma},
         {"center", {p.center.x(), p.center.y(), p.center.z()}},
         {"orientation", p.orientation},
         {"dmu", {p.dmu.x(), p.dmu.y(), p.dmu.z()}}});
  j["seed"] = cfg.seed;
  j["allow_close_placement"] = cfg.allow_close_placement;
  j["shape_tol"] = cfg.shape_tol;
  j["dipole_strength_tol"] = cfg.dipole_strength_tol;
  return j.dump(2);
}

std::string summary_to_json(const InteractionSummary& s) {
  static const char* names[] = {"NoInteraction", "ElasticRebound",
                                "VortexExchange", "DipoleBreakup",
                                "Unclassified"};
  json j;
  j["min_separation"] = s.min_separation;
  j["classification"] = names[static_cast<int>(s.classification)];
  j["final_groups"] = s.final_groups;
  return j.dump(2);
}

std::string conservation_to_text(const ConservationReport& r) {
  std::ostringstream os;
  os << "max relative energy drift: " << r.max_energy_drift << "\n";
  os << "max momentum drift: " << r.max_momentum_drift << "\n";
  return os.str();
}

ScenarioResult run_scenario(const ScenarioConfig& cfg) {
  if (cfg.preqs.empty()) throw ConfigError("no preqs in scenario");
  const double R = cfg.radius;

  std::vector<double> strengths;
  SphereState state;
  std::vector<std::vector<int>> groups;
  for (const PreqSpec& p : cfg.preqs) {
    SphereReleq re = build_sphere_releq(p.N, p.alpha, p.Gamma, R);
    Eigen::Matrix3d A =
        rotation_between(Vec3(0, 0, 1), p.center.normalized());
    Eigen::Matrix3d spin = axis_angle_rotation(Vec3(0, 0, 1), p.orientation);
    Vec3 local_dmu = spin.transpose() * A.transpose() * p.dmu;
    Perturbation pert = build_perturbation(re, local_dmu);
    std::vector<int> idx;
    for (int n = 0; n < p.N; ++n) {
      idx.push_back(static_cast<int>(strengths.size()));
      strengths.push_back(re.sys.strengths[n]);
      state.x.push_back(A * spin * pert.state.x[n]);
    }
    groups.push_back(std::move(idx));
  }
  for (size_t a = 0; a < cfg.preqs.size() && !cfg.allow_close_placement; ++a)
    for (size_t b = a + 1; b < cfg.preqs.size(); ++b) {
      double d = R * (cfg.preqs[a].center.normalized() -
                      cfg.preqs[b].center.normalized())
                         .norm();
      double need = 5.0 * std::max(preq_diameter(cfg.preqs[a], R),
                                   preq_diameter(cfg.preqs[b], R));
      if (d < need)
        throw ConfigError(
            "preqs placed closer than five diameters; set "
            "allow_close_placement to override");
    }

  ScenarioResult out;
  out.sys = VortexSystem::sphere(R, strengths);
  out.groups = groups;
  long steps = std::lround(cfg.duration / cfg.integrator.dt);
  out.run = integrate(out.sys, state, cfg.integrator, steps);

  const Trajectory<SphereState>& traj = out.run.trajectory;
  double h0 = traj.energy.front();
  Vec3 j0 = traj.momentum.front();
  for (size_t k = 0; k < traj.times.size(); ++k) {
    out.conservation.max_energy_drift =
        std::max(out.conservation.max_energy_drift,
                 std::abs(traj.energy[k] - h0) / std::max(1e-300, std::abs(h0)));
    out.conservation.max_momentum_drift =
        std::max(out.conservation.max_momentum_drift,
                 (traj.momentum[k] - j0).norm());
  }
  if (cfg.preqs.size() == 2) {
    double diam = std::max(preq_diameter(cfg.preqs[0], R),
                           preq_diameter(cfg.preqs[1], R));
    out.summary = classify_interaction(out.sys, traj, groups, diam,
                                       cfg.shape_tol, cfg.dipole_strength_tol);
  }
  return out;
}

ScenarioConfig collision_scenario(CollisionKind kind, double alpha,
                                  double impact_parameter,
                                  double closing_speed) {
  if (!(alpha > 0.0 && alpha < 0.5))
    throw ConfigError("collision presets expect a small opening angle");
  if (!(closing_speed > 0.0))
    throw ConfigError("closing speed must be positive");
  const double G = 1.0, R = 1.0;
  DriftForm f = drift_form_sphere(4, alpha, R);
  double budget = 0.1 * alpha * G;  // kick size at the smallness bound
  double kick = 0.5 * closing_speed * budget;  // each preq takes half
  if (kick > budget)
    throw BudgetExceeded("requested closing speed exceeds the kick budget");

  double sep = 16.0 * alpha;  // center separation along the equator
  double lat = 0.5 * impact_parameter / R;
  double speed = std::abs(f.j1) * kick * R;

  ScenarioConfig cfg;
  cfg.radius = R;
  auto make = [&](double lon, double latitude, double gamma,
                  double direction) {
    PreqSpec p;
    p.N = 4;
    p.alpha = alpha;
    p.Gamma = gamma;
    p.center = Vec3(std::cos(latitude) * std::cos(lon),
                    std::cos(latitude) * std::sin(lon), std::sin(latitude));
    Vec3 east(-std::sin(lon), std::cos(lon), 0.0);
    // dmu = c (center x tangent) makes the location drift along tangent
    double c = kick * (f.j1 > 0 ? 1.0 : -1.0);
    p.dmu = c * p.center.normalized().cross(direction * east);
    return p;
  };
  cfg.preqs.push_back(make(-0.5 * sep, lat, G, +1.0));
  cfg.preqs.push_back(
      make(0.5 * sep, -lat, kind == CollisionKind::AntiPair ? -G : G, -1.0));

  double travel = sep / std::max(2.0 * speed, 1e-12);
  cfg.duration = 3.75 * travel;
  cfg.integrator.dt = 2e-4 / std::max(1.0, speed / alpha);
  long steps = std::lround(cfg.duration / cfg.integrator.dt);
  cfg.integrator.record_every = std::max<long>(1, steps / 4000);
  cfg.allow_close_placement = sep < 5.0 * 2.0 * std::sin(alpha);
  return cfg;
}

InteractionSummary classify_interaction(
    const VortexSystem& sys, const Trajectory<SphereState>& traj,
    const std::vector<std::vector<int>>& initial_groups, double diameter,
    double shape_tol, double dipole_strength_tol) {
  if (initial_groups.size() != 2)
    throw DomainError("classification expects exactly two clusters");
  if (traj.states.size() < 2)
    throw InsufficientSamples("trajectory is too short to classify");

  InteractionSummary out;
  out.min_separation = std::numeric_limits<double>::infinity();
  for (const SphereState& s : traj.states)
    for (int i : initial_groups[0])
      for (int j : initial_groups[1])
        out.min_separation = std::min(out.min_separation, chord(s.x[i], s.x[j]));

  const SphereState& last = traj.states.back();
  out.final_groups = link_components(last, 2.5 * diameter);

  if (out.min_separation > 2.0 * diameter) {
    out.classification = Interaction::NoInteraction;
    return out;
  }

  // trailing window for persistence checks
  size_t n = traj.states.size();
  size_t tail = std::max<size_t>(2, n / 10);
  double max_gamma = 0.0;
  for (double g : sys.strengths) max_gamma = std::max(max_gamma, std::abs(g));

  // dipole: a separated low-net-strength pair that persists to the end
  for (const auto& comp : out.final_groups) {
    if (comp.size() != 2) continue;
    if (std::abs(sys.strengths[comp[0]] + sys.strengths[comp[1]]) >=
        dipole_strength_tol * max_gamma)
      continue;
    bool persistent = true;
    for (size_t k = n - tail; k < n && persistent; ++k) {
      const SphereState& s = traj.states[k];
      if (chord(s.x[comp[0]], s.x[comp[1]]) > 1.5 * diameter)
        persistent = false;
      for (int other = 0; other < s.size() && persistent; ++other) {
        if (other == comp[0] || other == comp[1]) continue;
        if (chord(s.x[comp[0]], s.x[other]) < 2.0 * diameter ||
            chord(s.x[comp[1]], s.x[other]) < 2.0 * diameter)
          persistent = false;
      }
    }
    if (persistent) {
      out.classification = Interaction::DipoleBreakup;
      return out;
    }
  }

  if (out.final_groups.size() == 2 &&
      out.final_groups[0].size() == initial_groups[0].size() &&
      out.final_groups[1].size() == initial_groups[1].size()) {
    auto as_set = [](const std::vector<int>& v) {
      return std::set<int>(v.begin(), v.end());
    };
    bool same = (as_set(out.final_groups[0]) == as_set(initial_groups[0]) &&
                 as_set(out.final_groups[1]) == as_set(initial_groups[1])) ||
                (as_set(out.final_groups[0]) == as_set(initial_groups[1]) &&
                 as_set(out.final_groups[1]) == as_set(initial_groups[0]));
    if (!same) {
      out.classification = Interaction::VortexExchange;
      return out;
    }
    // shapes intact?
    bool intact = true;
    for (size_t g = 0; g < 2 && intact; ++g) {
      auto d0 = sorted_pair_distances(traj.states.front(), initial_groups[g]);
      auto d1 = sorted_pair_distances(last, initial_groups[g]);
      for (size_t i = 0; i < d0.size(); ++i)
        if (std::abs(d1[i] - d0[i]) > shape_tol * d0[i]) intact = false;
    }
    out.classification =
        intact ? Interaction::ElasticRebound : Interaction::Unclassified;
    return out;
  }

  out.classification = Interaction::Unclassified;
  return out;
}

}  // namespace vortex
