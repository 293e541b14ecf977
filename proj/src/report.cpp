#include "xulosa/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace xulosa {

double round_sig6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", value);
  return std::strtod(buf, nullptr);
}

std::string format_sig6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", value);
  return buf;
}

const char* rounding_name(Rounding r) {
  switch (r) {
    case Rounding::nearest: return "nearest";
    case Rounding::floor_mode: return "floor";
    case Rounding::ceil_mode: return "ceil";
  }
  return "nearest";
}

const char* ordering_name(VocabOrdering o) {
  switch (o) {
    case VocabOrdering::first_occurrence: return "first_occurrence";
    case VocabOrdering::by_weight: return "by_weight";
    case VocabOrdering::alphabetical: return "alphabetical";
  }
  return "first_occurrence";
}

const char* idf_variant_name(IdfVariant v) {
  return v == IdfVariant::smoothed ? "smoothed" : "plain";
}

const char* tf_variant_name(TfVariant v) {
  return v == TfVariant::ratio ? "ratio" : "raw_count";
}

const char* mode_name(SummaryMode m) {
  return m == SummaryMode::token ? "token" : "sentence";
}

const char* boundary_mode_name(BoundaryMode b) {
  return b == BoundaryMode::filtered ? "filtered" : "original";
}

nlohmann::json stats_to_json(const DistributionStats& stats) {
  nlohmann::json j;
  j["E"] = round_sig6(stats.expectation);
  j["D"] = round_sig6(stats.dispersion);
  j["sigma"] = round_sig6(stats.sigma);
  j["sigma3"] = round_sig6(stats.sigma * stats.sigma * stats.sigma);
  j["E1"] = round_sig6(stats.expectation);
  j["E2"] = round_sig6(stats.e2);
  j["E3"] = round_sig6(stats.e3);
  j["mu3"] = round_sig6(stats.mu3);
  j["degenerate"] = stats.degenerate;
  j["unique_words"] = stats.vocab_size;
  if (stats.skew) j["As"] = round_sig6(*stats.skew);
  if (stats.k_idx) j["k_idx"] = *stats.k_idx;
  if (stats.m_idx) j["m_idx"] = *stats.m_idx;
  return j;
}

std::string stats_to_text(const DistributionStats& stats) {
  std::ostringstream out;
  out << "Variable\tValue\n";
  out << "E\t" << format_sig6(stats.expectation) << '\n';
  out << "D\t" << format_sig6(stats.dispersion) << '\n';
  out << "σ\t" << format_sig6(stats.sigma) << '\n';
  out << "σ³\t"
      << format_sig6(stats.sigma * stats.sigma * stats.sigma) << '\n';
  out << "E₁\t" << format_sig6(stats.expectation) << '\n';
  out << "E₂\t" << format_sig6(stats.e2) << '\n';
  out << "E₃\t" << format_sig6(stats.e3) << '\n';
  out << "μ₃\t" << format_sig6(stats.mu3) << '\n';
  if (stats.degenerate) {
    out << "A_s\tundefined (degenerate)\n";
  } else {
    out << "A_s\t" << format_sig6(*stats.skew) << '\n';
    out << "k\t" << *stats.k_idx << '\n';
    out << "m\t" << *stats.m_idx << '\n';
  }
  return out.str();
}

nlohmann::json decision_to_json(const SegmentDecision& decision) {
  nlohmann::json j;
  j["kind"] = segment_kind_name(decision.kind);
  j["token_range"] = {{"begin", decision.token_range.begin},
                      {"end", decision.token_range.end}};
  j["char_range"] = {{"begin", decision.char_range.begin},
                     {"end", decision.char_range.end}};
  if (decision.k1) j["k1"] = *decision.k1;
  if (decision.m1) j["m1"] = *decision.m1;
  if (!decision.k_word.empty()) j["k_word"] = decision.k_word;
  if (!decision.m_word.empty()) j["m_word"] = decision.m_word;
  return j;
}

std::string decision_to_text(const SegmentDecision& decision) {
  std::ostringstream out;
  out << "kind\t" << segment_kind_name(decision.kind) << '\n';
  if (decision.k1) {
    out << "k1\t" << *decision.k1 << "\t(" << decision.k_word << ")\n";
  }
  if (decision.m1) {
    out << "m1\t" << *decision.m1 << "\t(" << decision.m_word << ")\n";
  }
  out << "tokens\t[" << decision.token_range.begin << ", "
      << decision.token_range.end << ")\n";
  out << "chars\t[" << decision.char_range.begin << ", "
      << decision.char_range.end << ")\n";
  return out.str();
}

nlohmann::json summary_to_json(const Summary& summary) {
  nlohmann::json j;
  j["summary"] = summary.text;
  j["mode"] = mode_name(summary.mode);
  j["budget"] = summary.budget;
  j["word_count"] = summary.word_count;
  j["truncated"] = summary.truncated;
  j["selected"] = nlohmann::json::array();
  for (const auto& range : summary.selected) {
    j["selected"].push_back(
        {{"char_start", range.begin}, {"char_end", range.end}});
  }
  return j;
}

nlohmann::json config_to_json(const PipelineConfig& config) {
  return {
      {"n", config.n},
      {"ratio", round_sig6(config.ratio)},
      {"epsilon_skew", round_sig6(config.skew_epsilon)},
      {"rounding", rounding_name(config.rounding)},
      {"ordering", ordering_name(config.ordering)},
      {"idf", idf_variant_name(config.idf)},
      {"tf", tf_variant_name(config.tf)},
      {"mode", mode_name(config.mode)},
      {"allow_degenerate", config.allow_degenerate},
      {"boundaries_in", boundary_mode_name(config.boundaries_in)},
      {"collocation_fixpoint", config.collocation_fixpoint},
  };
}

nlohmann::json counts_to_json(const PipelineCounts& counts) {
  return {
      {"original_tokens", counts.original_tokens},
      {"filtered_tokens", counts.filtered_tokens},
      {"unique_words", counts.unique_words},
  };
}

nlohmann::json report_to_json(const SummaryReport& report) {
  nlohmann::json j = summary_to_json(report.summary);
  j["n"] = report.config.n;
  j["stats"] = stats_to_json(report.stats);
  j["segment"] = decision_to_json(report.decision);
  j["counts"] = counts_to_json(report.counts);
  j["config"] = config_to_json(report.config);
  return j;
}

nlohmann::json stats_report_to_json(const StatsReport& report) {
  nlohmann::json j;
  j["stats"] = stats_to_json(report.stats);
  j["counts"] = counts_to_json(report.counts);
  j["config"] = config_to_json(report.config);
  return j;
}

}  // namespace xulosa
