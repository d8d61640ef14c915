#include <cstdlib>
#include <filesystem>
#include <string>
#include <sys/wait.h>

#include "doctest.h"

#include "fatcat/error.hpp"
#include "fatcat/json_io.hpp"
#include "fatcat/pipeline.hpp"

using namespace fatcat;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("fatcat_test_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

int run(const std::string& args) {
  const std::string cmd = std::string(FATCAT_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

const SyntheticConfig kCorpus{42, 3, 50, 20, 10};

} // namespace

TEST_CASE("run_pipeline on the synthetic corpus") {
  const auto result = run_pipeline(generate_synthetic(kCorpus), PipelineConfig{});
  const auto m = manifest(result);
  CHECK(m["stages"].get<std::vector<std::string>>() == pipeline_stages());
  CHECK(result.timings.size() == pipeline_stages().size());
  CHECK(result.threshold.reached);
  CHECK(result.threshold.achieved_density <= result.threshold.target_density);
  CHECK(m["context"]["density"].get<double>() <= 0.1);
  CHECK(result.directory_topic_context.context.object_count() == 3);
  CHECK(result.directory_topic_context.context.attributes() == result.context.attributes());
  CHECK(result.final_lattice.attribute_labels.size() == 20);
  CHECK(result.final_lattice.object_labels.size() == 3);
  CHECK(result.dot.find("// topics") != std::string::npos);
}

TEST_CASE("pipeline artifacts are byte-identical across runs") {
  const auto weights = generate_synthetic(kCorpus);
  const auto a = scratch("det_a");
  const auto b = scratch("det_b");
  write_artifacts(run_pipeline(weights, PipelineConfig{}), a);
  write_artifacts(run_pipeline(weights, PipelineConfig{}), b);
  for (const char* name : {"context.json", "directory_icebergs.json", "directory_topic_context.json", "lattice.json",
                           "lattice.dot", "manifest.json"})
    CHECK_MESSAGE(read_file(a / name) == read_file(b / name), name);
  CHECK(fs::exists(a / "timings.json"));
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST_CASE("raising minsupp_directory never adds directory concepts") {
  const auto weights = generate_synthetic(kCorpus);
  PipelineConfig low, high;
  low.minsupp_directory = Rate::parse("0.1");
  high.minsupp_directory = Rate::parse("0.5");
  const auto lo = run_pipeline(weights, low);
  const auto hi = run_pipeline(weights, high);
  for (const auto& [dir, ice] : lo.directory_icebergs)
    CHECK(hi.directory_icebergs.at(dir).lattice.concepts.size() <= ice.lattice.concepts.size());
}

TEST_CASE("pipeline stage failures name the stage") {
  // Every weight equal: no threshold reaches density 0.1.
  const WeightedDocTopicMatrix flat({{"a", "D/a"}, {"b", "D/b"}}, {0, 1}, {{0, 0, 1.0}, {0, 1, 1.0}, {1, 0, 1.0}, {1, 1, 1.0}});
  CHECK_THROWS_WITH_AS(run_pipeline({flat, {}}, PipelineConfig{}), doctest::Contains("stage select_threshold"),
                       DomainError);

  const WeightedDocTopicMatrix many({{"a", "D/a"}, {"b", "E/b"}}, {0, 1}, {{0, 0, 1.0}, {1, 1, 1.0}});
  PipelineConfig cfg;
  cfg.target_density = Rate::parse("0.5");
  cfg.max_exact_attributes = 1;
  CHECK_THROWS_WITH_AS(run_pipeline({many, {}}, cfg), doctest::Contains("stage directory_lattice"), DomainError);
  cfg.minsupp_final = Rate::parse("0.5");
  CHECK_NOTHROW(run_pipeline({many, {}}, cfg));
}

TEST_CASE("CLI subcommands and exit codes") {
  const auto dir = scratch("cli");
  const std::string w = (dir / "w.json").string();
  CHECK(run("gen --seed 7 --n-dirs 3 --docs-per-dir 50 --n-topics 20 --out " + w) == 0);
  CHECK(run("threshold --weights " + w + " --out " + (dir / "t.json").string()) == 0);
  CHECK(parse_json(read_file(dir / "t.json"))["reached"].get<bool>());
  CHECK(run("binarize --weights " + w + " --out " + (dir / "ctx.json").string()) == 0);
  CHECK(run("iceberg --context " + (dir / "ctx.json").string() + " --minsupp 0.05 --out " +
            (dir / "ice.json").string() + " --dot " + (dir / "ice.dot").string()) == 0);
  CHECK(run("aggregate --context " + (dir / "ctx.json").string() + " --out " + (dir / "dtc.json").string()) == 0);
  CHECK(parse_context(read_file(dir / "dtc.json")).role == std::string(kDirectoryTopicRole));
  CHECK(run("lattice --context " + (dir / "dtc.json").string() + " --weights " + w + " --out " +
            (dir / "lat.json").string() + " --dot " + (dir / "lat.dot").string()) == 0);
  CHECK(read_file(dir / "lat.dot").find("// topics") != std::string::npos);
  CHECK(run("pipeline --weights " + w + " --out-dir " + (dir / "out").string()) == 0);
  CHECK(read_file(dir / "out" / "lattice.json") == read_file(dir / "lat.json"));

  // input errors
  CHECK(run("pipeline --weights " + (dir / "missing.json").string() + " --out-dir " + (dir / "x").string()) == 1);
  write_file(dir / "bad.json", "{\"documents\": [}");
  CHECK(run("threshold --weights " + (dir / "bad.json").string()) == 1);
  CHECK(run("iceberg --context " + (dir / "ctx.json").string() + " --minsupp 1.5") == 1);
  CHECK(run("frobnicate") == 1);
  CHECK(run("gen --n-dirs 0") == 1);

  // domain errors
  write_file(dir / "flat.csv", "doc,path,topic,weight\na,D/a,0,1\na,D/a,1,1\nb,D/b,0,1\nb,D/b,1,1\n");
  CHECK(run("pipeline --weights " + (dir / "flat.csv").string() + " --out-dir " + (dir / "y").string()) == 2);
  CHECK(run("lattice --context " + (dir / "dtc.json").string() + " --max-exact-attributes 3") == 2);
  fs::remove_all(dir);
}
