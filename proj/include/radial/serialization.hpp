#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "radial/continuation.hpp"
#include "radial/estimates.hpp"

namespace radial {

using Json = nlohmann::ordered_json;

/// %.17g, so that parsing the text recovers the double exactly.
std::string format_double(double x);

Json to_json(const ConditionReport& report);
Json to_json(const Nonlinearity& nl);
Json to_json(const SourceTerm& f);
Json to_json(const RadialProblem& problem);
Json to_json(const IntegrationStats& stats);
/// Metadata plus the node arrays when with_data is set.
Json to_json(const SolutionProfile& profile, bool with_data = true);
Json to_json(const SolutionSet& set, bool with_profiles = false);
Json to_json(const ClassificationReport& report);
Json to_json(const BoundsReport& report);
Json to_json(const std::vector<Branch>& branches);
Json to_json(const std::vector<Transition>& transitions);

SolutionProfile profile_from_json(const Json& j, const RadialProblem& problem);

void write_profile_csv(std::ostream& os, const SolutionProfile& profile);
/// Reads columns t,u,du (header required). u'' is estimated from u'.
SolutionProfile read_profile_csv(std::istream& is, const RadialProblem& problem);

void write_zeros_csv(std::ostream& os, const ClassificationReport& report);
void write_critical_points_csv(std::ostream& os, const ClassificationReport& report);
void write_branches_csv(std::ostream& os, const std::vector<Branch>& branches);

/// One row per entry: name, lhs, rhs, margin, pass.
std::string bounds_table(const BoundsReport& report);

}  // namespace radial
