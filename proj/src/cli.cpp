#include "xulosa/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "xulosa/error.hpp"
#include "xulosa/pipeline.hpp"
#include "xulosa/report.hpp"

namespace xulosa::cli {

namespace {

namespace fs = std::filesystem;

struct CommonArgs {
  std::string input;
  std::string stopwords_dir;
  std::string index_path;
  std::string format = "text";
  std::string output;
  PipelineConfig config;
};

std::string read_file_or_stdin(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw Error(ErrorCode::IoError, "cannot open " + path);
  }
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

void write_output(const std::string& payload, const std::string& output_path,
                  std::ostream& out) {
  if (output_path.empty()) {
    out << payload;
    return;
  }
  std::ofstream file(output_path, std::ios::binary);
  if (!file) {
    throw Error(ErrorCode::IoError, "cannot write " + output_path);
  }
  file << payload;
}

StopwordSet load_stopwords(const CommonArgs& args) {
  if (args.stopwords_dir.empty()) {
    return {};
  }
  return load_stopword_dir(args.stopwords_dir);
}

void add_config_flags(CLI::App* cmd, CommonArgs& args, bool with_summary_flags) {
  cmd->add_option("file", args.input, "input text file, or - for stdin")
      ->required();
  cmd->add_option("-s,--stopwords-dir", args.stopwords_dir,
                  "directory with unigrams.txt / collocations.txt / "
                  "rulebase.txt (each optional)");
  cmd->add_option("-i,--index", args.index_path,
                  "corpus document-frequency index (JSON)")
      ->required();
  cmd->add_option("-f,--format", args.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("-o,--output", args.output, "write output to a file");
  cmd->add_option("--epsilon-skew", args.config.skew_epsilon,
                  "threshold below which the skewness counts as zero");
  cmd->add_flag("--allow-degenerate", args.config.allow_degenerate,
                "summarize single-unique-word texts instead of failing");
  cmd->add_flag("--collocation-fixpoint", args.config.collocation_fixpoint,
                "repeat collocation removal until nothing changes");

  std::map<std::string, Rounding> rounding{{"nearest", Rounding::nearest},
                                           {"floor", Rounding::floor_mode},
                                           {"ceil", Rounding::ceil_mode}};
  cmd->add_option("--rounding", args.config.rounding,
                  "how E±σ becomes an integer position")
      ->transform(CLI::CheckedTransformer(rounding, CLI::ignore_case));
  std::map<std::string, VocabOrdering> ordering{
      {"first_occurrence", VocabOrdering::first_occurrence},
      {"by_weight", VocabOrdering::by_weight},
      {"alphabetical", VocabOrdering::alphabetical}};
  cmd->add_option("--ordering", args.config.ordering,
                  "vocabulary ordering for the distribution")
      ->transform(CLI::CheckedTransformer(ordering, CLI::ignore_case));
  std::map<std::string, IdfVariant> idf{{"smoothed", IdfVariant::smoothed},
                                        {"plain", IdfVariant::plain}};
  cmd->add_option("--idf", args.config.idf, "IDF variant")
      ->transform(CLI::CheckedTransformer(idf, CLI::ignore_case));
  std::map<std::string, TfVariant> tf{{"ratio", TfVariant::ratio},
                                      {"raw_count", TfVariant::raw_count}};
  cmd->add_option("--tf", args.config.tf, "TF variant")
      ->transform(CLI::CheckedTransformer(tf, CLI::ignore_case));
  std::map<std::string, BoundaryMode> boundaries{
      {"filtered", BoundaryMode::filtered},
      {"original", BoundaryMode::original}};
  cmd->add_option("--boundaries-in", args.config.boundaries_in,
                  "locate boundary words in the filtered or original text")
      ->transform(CLI::CheckedTransformer(boundaries, CLI::ignore_case));

  if (with_summary_flags) {
    cmd->add_option("-n,--n", args.config.n, "gram order");
    cmd->add_option("-r,--ratio", args.config.ratio,
                    "compression budget as a fraction of the input words");
    std::map<std::string, SummaryMode> mode{{"token", SummaryMode::token},
                                            {"sentence", SummaryMode::sentence}};
    cmd->add_option("-m,--mode", args.config.mode, "summary assembly mode")
        ->transform(CLI::CheckedTransformer(mode, CLI::ignore_case));
  }
}

int check_input_exists(const CommonArgs& args, std::ostream& err) {
  if (args.input != "-" && !fs::exists(args.input)) {
    err << "error: input file not found: " << args.input << "\n"
        << "run with --help for usage\n";
    return 1;
  }
  return 0;
}

int run_summarize(const CommonArgs& args, std::ostream& out, std::ostream& err,
                  std::istream& in) {
  if (int rc = check_input_exists(args, err)) return rc;
  const std::string raw = read_file_or_stdin(args.input, in);
  const auto stopwords = load_stopwords(args);
  const auto index = load_index(args.index_path);
  const auto report = summarize(raw, args.config, stopwords, index);
  if (args.format == "json") {
    write_output(report_to_json(report).dump(2) + "\n", args.output, out);
  } else {
    write_output(report.summary.text + "\n", args.output, out);
  }
  return 0;
}

int run_stats(const CommonArgs& args, bool vocab_tsv, std::ostream& out,
              std::ostream& err, std::istream& in) {
  if (int rc = check_input_exists(args, err)) return rc;
  const std::string raw = read_file_or_stdin(args.input, in);
  const auto stopwords = load_stopwords(args);
  const auto index = load_index(args.index_path);

  if (vocab_tsv) {
    validate_config(args.config);
    const auto tokens = analyze(raw);
    if (tokens.empty()) {
      throw Error(ErrorCode::EmptyInput, "input contains no word tokens");
    }
    const auto filtered =
        filter(tokens, stopwords, args.config.collocation_fixpoint);
    if (filtered.tokens.empty()) {
      throw Error(ErrorCode::EmptyAfterFiltering, "all tokens were stop words");
    }
    const auto vocab = build_weighted_vocabulary(
        filtered, index,
        {args.config.tf, args.config.idf, args.config.ordering});
    if (args.format == "json") {
      nlohmann::json entries = nlohmann::json::array();
      for (std::size_t i = 0; i < vocab.size(); ++i) {
        const auto& entry = vocab.entries[i];
        entries.push_back({{"rank", i + 1},
                           {"word", entry.word},
                           {"first_pos", entry.first_pos},
                           {"w", round_sig6(entry.weight)},
                           {"p", round_sig6(entry.prob)}});
      }
      write_output(nlohmann::json{{"vocabulary", entries}}.dump(2) + "\n",
                   args.output, out);
    } else {
      std::ostringstream tsv;
      tsv << "rank\tword\tfirst_pos\tw\tp\n";
      for (std::size_t i = 0; i < vocab.size(); ++i) {
        const auto& entry = vocab.entries[i];
        tsv << i + 1 << '\t' << entry.word << '\t' << entry.first_pos << '\t'
            << format_sig6(entry.weight) << '\t' << format_sig6(entry.prob)
            << '\n';
      }
      write_output(tsv.str(), args.output, out);
    }
    return 0;
  }

  const auto report = stats_report(raw, args.config, stopwords, index);
  if (args.format == "json") {
    write_output(stats_report_to_json(report).dump(2) + "\n", args.output, out);
  } else {
    std::ostringstream text;
    text << stats_to_text(report.stats);
    text << "original_tokens\t" << report.counts.original_tokens << '\n';
    text << "filtered_tokens\t" << report.counts.filtered_tokens << '\n';
    text << "unique_words\t" << report.counts.unique_words << '\n';
    write_output(text.str(), args.output, out);
  }
  return 0;
}

int run_segment(const CommonArgs& args, std::ostream& out, std::ostream& err,
                std::istream& in) {
  if (int rc = check_input_exists(args, err)) return rc;
  const std::string raw = read_file_or_stdin(args.input, in);
  const auto stopwords = load_stopwords(args);
  const auto index = load_index(args.index_path);
  const auto report = summarize(raw, args.config, stopwords, index);
  if (args.format == "json") {
    write_output(decision_to_json(report.decision).dump(2) + "\n", args.output,
                 out);
  } else {
    write_output(decision_to_text(report.decision), args.output, out);
  }
  return 0;
}

int run_index_build(const std::string& dir, const std::string& output,
                    std::ostream& out) {
  if (!fs::is_directory(dir)) {
    throw Error(ErrorCode::ResourceMissing, "not a directory: " + dir);
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<std::string> documents;
  documents.reserve(files.size());
  for (const auto& file : files) {
    std::ifstream docstream(file, std::ios::binary);
    std::ostringstream buf;
    buf << docstream.rdbuf();
    documents.push_back(buf.str());
  }
  const auto index = build_corpus_index(documents);
  save_index(index, output);
  out << "indexed " << index.num_docs << " documents, "
      << index.doc_freq.size() << " terms -> " << output << "\n";
  return 0;
}

int run_index_show(const std::string& path, const std::string& format,
                   std::ostream& out) {
  const auto index = load_index(path);
  if (format == "json") {
    out << index_to_json(index) << "\n";
  } else {
    out << "num_docs\t" << index.num_docs << '\n'
        << "terms\t" << index.doc_freq.size() << '\n'
        << "fingerprint\t" << index.fingerprint << '\n';
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, std::istream& in) {
  CLI::App app{"extractive summarizer for Uzbek (Latin-script) text"};
  app.name("xulosa");
  app.require_subcommand(1);

  CommonArgs summarize_args;
  auto* cmd_summarize =
      app.add_subcommand("summarize", "produce a summary of a text");
  add_config_flags(cmd_summarize, summarize_args, true);

  CommonArgs stats_args;
  bool vocab_tsv = false;
  auto* cmd_stats = app.add_subcommand(
      "stats", "print the unique-word distribution statistics");
  add_config_flags(cmd_stats, stats_args, false);
  cmd_stats->add_flag("--vocab", vocab_tsv,
                      "print the weighted vocabulary instead of the stats");

  CommonArgs segment_args;
  auto* cmd_segment = app.add_subcommand(
      "segment", "show which part of the text the skewness rule keeps");
  add_config_flags(cmd_segment, segment_args, true);

  auto* cmd_index = app.add_subcommand("index", "manage corpus indexes");
  cmd_index->require_subcommand(1);
  std::string index_dir;
  std::string index_out;
  auto* cmd_index_build = cmd_index->add_subcommand(
      "build", "index a directory of .txt documents");
  cmd_index_build->add_option("dir", index_dir, "directory of .txt files")
      ->required();
  cmd_index_build->add_option("-o,--output", index_out, "output index path")
      ->required();
  std::string index_show_path;
  std::string index_show_format = "text";
  auto* cmd_index_show =
      cmd_index->add_subcommand("show", "print an index summary");
  cmd_index_show->add_option("file", index_show_path, "index JSON path")
      ->required();
  cmd_index_show->add_option("-f,--format", index_show_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);  // CLI11's vector overload expects reversed arguments
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (cmd_summarize->parsed()) {
      return run_summarize(summarize_args, out, err, in);
    }
    if (cmd_stats->parsed()) {
      return run_stats(stats_args, vocab_tsv, out, err, in);
    }
    if (cmd_segment->parsed()) {
      return run_segment(segment_args, out, err, in);
    }
    if (cmd_index->parsed()) {
      if (cmd_index_build->parsed()) {
        return run_index_build(index_dir, index_out, out);
      }
      if (cmd_index_show->parsed()) {
        return run_index_show(index_show_path, index_show_format, out);
      }
    }
    err << "error: no command given; run with --help\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.code_name() << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: InternalError: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace xulosa::cli
