#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "streaklab/gamelog.hpp"
#include "streaklab/permute.hpp"
#include "streaklab/stats.hpp"
#include "streaklab/streaks.hpp"

// CSV and JSON renderings of every table the toolkit produces, plus parsers
// for the two file kinds the `report` command joins (an exact census CSV and
// a study JSON).

namespace streaklab {

using json = nlohmann::json;

// Exact census rows are `length,count`; cumulative rows use a `count_ge`
// header so the two files cannot be confused on input.
std::string census_csv(const StreakCensus& c, bool cumulative);
json census_json(const StreakCensus& c);
StreakCensus census_from_csv(std::istream& in);
StreakCensus load_census_csv(const std::string& path);

std::string attrition_csv(const AttritionTable& table);
json attrition_json(const AttritionTable& table);

json aggregate_json(const TrialAggregate& agg, bool include_trials);
TrialAggregate aggregate_from_json(const json& doc);
TrialAggregate load_study_json(const std::string& path);

json convergence_json(const ConvergenceReport& report);

std::string windows_csv(const WindowAnalytics& analytics);
json window_summary_json(const WindowSummary& summary);
json window_analytics_json(const WindowAnalytics& analytics);

std::string comparison_csv(std::span<const ComparisonRow> rows,
                           std::span<const std::optional<EmpiricalTail>> empiricals);
json comparison_json(std::span<const ComparisonRow> rows,
                     std::span<const std::optional<EmpiricalTail>> empiricals);

std::string validation_text(const ValidationSummary& v);
json validation_json(const ValidationSummary& v);

}  // namespace streaklab
