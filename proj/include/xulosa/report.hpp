#ifndef XULOSA_REPORT_HPP
#define XULOSA_REPORT_HPP

#include <string>

#include <json.hpp>

#include "xulosa/pipeline.hpp"

namespace xulosa {

/// All numeric output is rendered at 6 significant digits, in both the text
/// and the JSON format, so the two always show identical values and diffs
/// stay reproducible.
double round_sig6(double value);
std::string format_sig6(double value);

nlohmann::json stats_to_json(const DistributionStats& stats);
nlohmann::json decision_to_json(const SegmentDecision& decision);
nlohmann::json summary_to_json(const Summary& summary);
nlohmann::json config_to_json(const PipelineConfig& config);
nlohmann::json counts_to_json(const PipelineCounts& counts);

nlohmann::json report_to_json(const SummaryReport& report);
nlohmann::json stats_report_to_json(const StatsReport& report);

/// Table-style rendering of the distribution statistics.
std::string stats_to_text(const DistributionStats& stats);
std::string decision_to_text(const SegmentDecision& decision);

const char* rounding_name(Rounding r);
const char* ordering_name(VocabOrdering o);
const char* idf_variant_name(IdfVariant v);
const char* tf_variant_name(TfVariant v);
const char* mode_name(SummaryMode m);
const char* boundary_mode_name(BoundaryMode b);

}  // namespace xulosa

#endif  // XULOSA_REPORT_HPP
