#ifndef VORTEX_SCENARIO_HPP
#define VORTEX_SCENARIO_HPP

#include <string>
#include <vector>

#include "vortex/drift.hpp"
#include "vortex/integrator.hpp"

namespace vortex {

/// One ring-plus-center cluster in a scenario: where it sits, how its ring
/// is phased, and the momentum kick that sets it moving. dmu is given in
/// world coordinates.
struct PreqSpec {
  int N = 4;
  double alpha = 0.1;
  double Gamma = 1.0;
  Vec3 center{0.0, 0.0, 1.0};
  double orientation = 0.0;  // ring phase about the local axis
  Vec3 dmu = Vec3::Zero();
};

struct ScenarioConfig {
  double radius = 1.0;
  double duration = 1.0;
  std::vector<PreqSpec> preqs;
  IntegratorConfig integrator;
  unsigned seed = 0;
  bool allow_close_placement = false;
  // classification thresholds
  double shape_tol = 0.2;
  double dipole_strength_tol = 0.05;
};

/// Parses the JSON scenario format; throws ConfigError with a description
/// of the offending field.
ScenarioConfig scenario_from_json(const std::string& text);
std::string scenario_to_json(const ScenarioConfig& cfg);

enum class Interaction {
  NoInteraction,
  ElasticRebound,
  VortexExchange,
  DipoleBreakup,
  Unclassified
};

struct InteractionSummary {
  double min_separation = 0.0;  // closest cross-cluster chord distance
  Interaction classification = Interaction::Unclassified;
  std::vector<std::vector<int>> final_groups;
};

std::string summary_to_json(const InteractionSummary& s);

struct ConservationReport {
  double max_energy_drift = 0.0;    // relative to the initial energy
  double max_momentum_drift = 0.0;  // norm of the momentum change
};

std::string conservation_to_text(const ConservationReport& r);

struct ScenarioResult {
  VortexSystem sys;
  std::vector<std::vector<int>> groups;  // vortex indices per preq
  IntegrationResult<SphereState> run;
  ConservationReport conservation;
  InteractionSummary summary;  // filled for two-cluster scenarios
};

/// Builds the composite state (each preq rotated into place with its
/// perturbation applied), integrates it, and reports conservation plus, for
/// two-preq scenarios, the interaction classification.
ScenarioResult run_scenario(const ScenarioConfig& cfg);

enum class CollisionKind { LikePair, AntiPair };

/// Two preqs on the equator aimed at each other. closing_speed is a
/// fraction of the momentum budget (the kick at which the perturbation
/// smallness bound is reached); impact_parameter is an arc-length offset.
/// Throws BudgetExceeded when the implied kick is past the budget.
ScenarioConfig collision_scenario(CollisionKind kind, double alpha,
                                  double impact_parameter,
                                  double closing_speed);

/// Nearest-cluster membership analysis of a two-preq trajectory.
InteractionSummary classify_interaction(
    const VortexSystem& sys, const Trajectory<SphereState>& traj,
    const std::vector<std::vector<int>>& initial_groups, double diameter,
    double shape_tol = 0.2, double dipole_strength_tol = 0.05);

}  // namespace vortex

#endif
