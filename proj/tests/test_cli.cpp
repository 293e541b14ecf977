#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "testutil.hpp"
#include "xulosa/cli.hpp"
#include "xulosa/corpus.hpp"
#include "xulosa/report.hpp"

using namespace xulosa;
using testutil::TempDir;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args,
                  const std::string& stdin_data = "") {
  std::ostringstream out;
  std::ostringstream err;
  std::istringstream in(stdin_data);
  const int code = cli::run(args, out, err, in);
  return {code, out.str(), err.str()};
}

/// Fixture directory with toy.txt, an index built from the toy corpus and
/// an empty stop-word directory.
struct CliFixture {
  TempDir dir;
  std::string input;
  std::string index;
  std::string stopwords;

  CliFixture() {
    input = dir.write("toy.txt", "olma olma anor");
    const std::vector<std::string> docs = {"olma nok", "olma uzum", "anor"};
    index = (dir.path() / "index.json").string();
    save_index(build_corpus_index(docs), index);
    std::filesystem::create_directories(dir.path() / "empty");
    stopwords = (dir.path() / "empty").string();
  }
};

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("help exits zero") {
  const auto result = run_cli({"--help"});
  CHECK(result.code == 0);
  CHECK(result.out.find("xulosa") != std::string::npos);
  CHECK(result.out.find("summarize") != std::string::npos);
}

TEST_CASE("usage errors exit one") {
  CliFixture fx;

  SUBCASE("missing input file") {
    const auto result = run_cli(
        {"summarize", "missing.txt", "--index", fx.index});
    CHECK(result.code == 1);
    CHECK(result.err.find("missing.txt") != std::string::npos);
  }

  SUBCASE("missing required index flag") {
    const auto result = run_cli({"summarize", fx.input});
    CHECK(result.code == 1);
  }

  SUBCASE("unknown flag") {
    const auto result = run_cli(
        {"summarize", fx.input, "--index", fx.index, "--bogus"});
    CHECK(result.code == 1);
  }

  SUBCASE("no subcommand") {
    CHECK(run_cli({}).code == 1);
  }
}

TEST_CASE("pipeline errors exit two with the code name") {
  CliFixture fx;
  TempDir extra;
  const auto stops = extra.write("unigrams.txt", "va\nham\n");
  (void)stops;
  const auto input = extra.write("stopsonly.txt", "va ham va");
  const auto result = run_cli({"summarize", input, "--index", fx.index,
                               "--stopwords-dir", extra.path().string()});
  CHECK(result.code == 2);
  CHECK(result.err.find("EmptyAfterFiltering") != std::string::npos);
}

TEST_CASE("summarize text and json") {
  CliFixture fx;

  SUBCASE("text prints the summary only") {
    const auto result = run_cli({"summarize", fx.input, "--index", fx.index,
                                 "--stopwords-dir", fx.stopwords, "--n", "2",
                                 "--ratio", "1.0"});
    CHECK(result.code == 0);
    CHECK(result.out == "olma\n");
  }

  SUBCASE("json carries the full report") {
    const auto result = run_cli({"summarize", fx.input, "--index", fx.index,
                                 "--n", "2", "--ratio", "1.0", "--format",
                                 "json"});
    REQUIRE(result.code == 0);
    const auto j = nlohmann::json::parse(result.out);
    CHECK(j["summary"] == "olma");
    CHECK(j["mode"] == "token");
    CHECK(j["n"] == 2);
    CHECK(j["word_count"] == 1);
    CHECK(j["budget"] == 1);
    CHECK(j["counts"]["original_tokens"] == 3);
    CHECK(j["counts"]["unique_words"] == 2);
    CHECK(j["segment"]["kind"] == "prefix");
    CHECK(j["stats"]["As"] == round_sig6(0.42248250184947606));
    CHECK(j["config"]["ratio"] == 1.0);
  }
}

TEST_CASE("stats text and json values agree at 6 significant digits") {
  CliFixture fx;
  const auto json_run = run_cli({"stats", fx.input, "--index", fx.index,
                                 "--stopwords-dir", fx.stopwords, "--format",
                                 "json"});
  REQUIRE(json_run.code == 0);
  const auto j = nlohmann::json::parse(json_run.out);
  // Frozen oracle values, rounded to 6 significant digits.
  CHECK(j["stats"]["E"] == round_sig6(1.396659877756349));
  CHECK(j["stats"]["D"] == round_sig6(0.23932081913466724));
  CHECK(j["stats"]["sigma"] == round_sig6(0.4892042713781915));
  CHECK(j["stats"]["E2"] == round_sig6(2.1899796332690467));
  CHECK(j["stats"]["E3"] == round_sig6(3.7766191442944423));
  CHECK(j["stats"]["mu3"] == round_sig6(0.04946288540965593));
  CHECK(j["stats"]["As"] == round_sig6(0.42248250184947606));
  CHECK(j["stats"]["k_idx"] == 1);
  CHECK(j["stats"]["m_idx"] == 2);
  CHECK(j["counts"]["original_tokens"] == 3);

  const auto text_run = run_cli({"stats", fx.input, "--index", fx.index});
  REQUIRE(text_run.code == 0);
  // every numeric field of the text table renders the same value
  for (const char* key : {"E", "D", "E2", "E3", "mu3", "As"}) {
    const std::string rendered = format_sig6(j["stats"][key].get<double>());
    CHECK(text_run.out.find(rendered) != std::string::npos);
  }
  CHECK(text_run.out.find("original_tokens\t3") != std::string::npos);
}

TEST_CASE("stats --vocab prints the weighted vocabulary") {
  CliFixture fx;
  const auto result =
      run_cli({"stats", fx.input, "--index", fx.index, "--vocab"});
  REQUIRE(result.code == 0);
  CHECK(result.out.find("rank\tword\tfirst_pos\tw\tp") != std::string::npos);
  CHECK(result.out.find("1\tolma\t0\t") != std::string::npos);
  CHECK(result.out.find("2\tanor\t2\t") != std::string::npos);
  CHECK(result.out.find(format_sig6(0.6033401222436512)) != std::string::npos);

  const auto as_json = run_cli(
      {"stats", fx.input, "--index", fx.index, "--vocab", "--format", "json"});
  REQUIRE(as_json.code == 0);
  const auto j = nlohmann::json::parse(as_json.out);
  REQUIRE(j["vocabulary"].size() == 2);
  CHECK(j["vocabulary"][0]["word"] == "olma");
  CHECK(j["vocabulary"][0]["rank"] == 1);
  CHECK(j["vocabulary"][0]["p"] == round_sig6(0.6033401222436512));
  CHECK(j["vocabulary"][1]["first_pos"] == 2);
}

TEST_CASE("segment command") {
  CliFixture fx;
  const auto result = run_cli({"segment", fx.input, "--index", fx.index,
                               "--format", "json"});
  REQUIRE(result.code == 0);
  const auto j = nlohmann::json::parse(result.out);
  CHECK(j["kind"] == "prefix");
  CHECK(j["k1"] == 0);
  CHECK(j["k_word"] == "olma");
  CHECK(j["token_range"]["begin"] == 0);
  CHECK(j["token_range"]["end"] == 1);
}

TEST_CASE("index build and show") {
  TempDir dir;
  dir.write("a.txt", "olma nok");
  dir.write("b.txt", "olma uzum");
  dir.write("c.txt", "anor");
  dir.write("ignored.md", "zzz");
  const auto out_path = (dir.path() / "built.json").string();

  const auto build = run_cli({"index", "build", dir.path().string(), "-o",
                              out_path});
  REQUIRE(build.code == 0);
  CHECK(build.out.find("3 documents") != std::string::npos);

  const auto show = run_cli({"index", "show", out_path});
  REQUIRE(show.code == 0);
  CHECK(show.out.find("num_docs\t3") != std::string::npos);

  const auto show_json = run_cli({"index", "show", out_path, "--format",
                                  "json"});
  REQUIRE(show_json.code == 0);
  const auto j = nlohmann::json::parse(show_json.out);
  CHECK(j["num_docs"] == 3);
  CHECK(j["doc_freq"]["olma"] == 2);

  SUBCASE("corrupt index exits two") {
    const auto bad = dir.write("bad.json", "{\"version\": 1, \"num_docs\"");
    const auto result = run_cli({"index", "show", bad});
    CHECK(result.code == 2);
    CHECK(result.err.find("IndexCorrupt") != std::string::npos);
  }
}

TEST_CASE("stdin input via dash") {
  CliFixture fx;
  const auto result = run_cli({"summarize", "-", "--index", fx.index, "--n",
                               "2", "--ratio", "1.0"},
                              "olma olma anor");
  CHECK(result.code == 0);
  CHECK(result.out == "olma\n");
}

TEST_CASE("output file flag") {
  CliFixture fx;
  const auto out_file = (fx.dir.path() / "summary.txt").string();
  const auto result = run_cli({"summarize", fx.input, "--index", fx.index,
                               "--n", "2", "--ratio", "1.0", "-o", out_file});
  REQUIRE(result.code == 0);
  CHECK(result.out.empty());
  std::ifstream in(out_file);
  std::string content((std::istreambuf_iterator<char>(in)), {});
  CHECK(content == "olma\n");
}

}  // TEST_SUITE
