#ifndef FUSIONFORGE_JSON_IO_HPP
#define FUSIONFORGE_JSON_IO_HPP

#include "fusionforge/conv_engine.hpp"
#include "fusionforge/graded_ring.hpp"
#include "fusionforge/metric_group.hpp"
#include "fusionforge/modular.hpp"
#include "fusionforge/pointed.hpp"

#include <json.hpp>

namespace fusionforge {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kLibraryVersion = "1.0.0";

Json ring_to_json(const FusionRing& ring);
FusionRing ring_from_json(const Json& j);

Json modular_to_json(const ModularData& md);
ModularData modular_from_json(const Json& j);

Json graded_to_json(const GradedFusionRing& ring, const std::vector<double>* dplus = nullptr);
GradedFusionRing graded_from_json(const Json& j);

Json spec_to_json(const GradedAlgebraSpec& spec);
GradedAlgebraSpec spec_from_json(const Json& j);

Json recovery_to_json(const RecoveryOutput& out);

Json metric_to_json(const MetricGroup& B);
MetricGroup metric_from_json(const Json& j);

/// Bundle of inputs for a pointed-extension run:
/// {metric_group, lagrangian: [...], action: {G, pi, omega}}.
struct PointedProblem {
    MetricGroup B;
    LagrangianSubgroup L;
    OrthogonalAction action;
};

Json pointed_problem_to_json(const PointedProblem& p);
PointedProblem pointed_problem_from_json(const Json& j);

} // namespace fusionforge

#endif
