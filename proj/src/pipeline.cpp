#include "fatcat/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <system_error>

#include "fatcat/error.hpp"
#include "fatcat/json_io.hpp"
#include "fatcat/log.hpp"

namespace fatcat {

namespace {

using Json = nlohmann::ordered_json;

template <typename Fn>
auto run_stage(PipelineResult& result, const std::string& name, Fn&& fn) {
  log(LogLevel::info, "stage " + name);
  const auto start = std::chrono::steady_clock::now();
  auto finish = [&] {
    const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
    result.timings.push_back({name, ms.count()});
  };
  try {
    if constexpr (std::is_void_v<decltype(fn())>) {
      fn();
      finish();
    } else {
      auto value = fn();
      finish();
      return value;
    }
  } catch (const InputError& e) {
    throw InputError("stage " + name + ": " + e.what());
  } catch (const DomainError& e) {
    throw DomainError("stage " + name + ": " + e.what());
  }
}

Json rate_json(const Rate& r) { return r.value(); }

Json config_json(const PipelineConfig& c) {
  Json j = Json::object();
  j["target_density"] = rate_json(c.target_density);
  j["minsupp_directory"] = rate_json(c.minsupp_directory);
  j["minsupp_final"] = c.minsupp_final ? rate_json(*c.minsupp_final) : Json(nullptr);
  j["directory_depth"] = c.directory_depth;
  j["words_per_topic"] = c.words_per_topic;
  j["max_exact_attributes"] = c.max_exact_attributes;
  return j;
}

} // namespace

const std::vector<std::string>& pipeline_stages() {
  static const std::vector<std::string> stages = {
      "normalize", "select_threshold", "binarize", "split_by_directory", "directory_icebergs",
      "directory_topic_context", "directory_lattice", "export"};
  return stages;
}

Json threshold_report_json(const ThresholdReport& report) {
  Json j = Json::object();
  j["delta"] = report.reached ? Json(report.delta) : Json(nullptr);
  j["reached"] = report.reached;
  j["achieved_density"] = report.achieved_density;
  j["target_density"] = report.target_density;
  j["candidates_examined"] = report.candidates_examined;
  j["rule"] = "smallest distinct weight with density <= target";
  return j;
}

PipelineResult run_pipeline(const WeightsFile& weights, const PipelineConfig& config) {
  const auto& stages = pipeline_stages();
  PipelineResult r;
  r.config = config;

  auto normalized = run_stage(r, stages[0], [&] { return row_normalize(weights.matrix); });

  r.threshold = run_stage(r, stages[1], [&] {
    ThresholdReport report = select_threshold(normalized, config.target_density);
    if (!report.reached) {
      const double at_max = normalized.entries().empty() ? 0.0 : density(normalized, [&] {
        double mx = 0.0;
        for (const auto& e : normalized.entries()) mx = std::max(mx, e.weight);
        return mx;
      }());
      throw DomainError("no weight value reaches target density " + config.target_density.to_string() +
                        "; thresholding at the largest weight still leaves density " + std::to_string(at_max));
    }
    return report;
  });
  log(LogLevel::info, "delta = " + std::to_string(r.threshold.delta) +
                          ", density = " + std::to_string(r.threshold.achieved_density));

  r.context = run_stage(r, stages[2], [&] { return binarize(normalized, r.threshold.delta, config.directory_depth); });
  r.directory_contexts = run_stage(r, stages[3], [&] { return split_by_directory(r.context, config.directory_depth); });
  r.directory_icebergs =
      run_stage(r, stages[4], [&] { return directory_icebergs(r.directory_contexts, config.minsupp_directory); });
  r.directory_topic_context = run_stage(r, stages[5], [&] { return directory_topic_context(r.directory_icebergs); });
  ConceptSet lattice = run_stage(r, stages[6], [&] {
    return directory_lattice(r.directory_topic_context, config.minsupp_final,
                             EnumerationOptions{config.max_exact_attributes});
  });
  run_stage(r, stages[7], [&] {
    std::optional<double> minsupp;
    if (config.minsupp_final) minsupp = config.minsupp_final->value();
    r.final_lattice = reduced_labels(lattice, r.directory_topic_context.context, minsupp);
    r.json = to_json(r.final_lattice);
    r.dot = to_dot(r.final_lattice, &weights.topics, config.words_per_topic);
  });
  return r;
}

Json manifest(const PipelineResult& r) {
  Json j = Json::object();
  j["schema"] = "fatcat.manifest/1";
  j["config"] = config_json(r.config);
  j["stages"] = pipeline_stages();
  j["threshold"] = threshold_report_json(r.threshold);

  Json ctx = Json::object();
  ctx["documents"] = r.context.object_count();
  ctx["topics"] = r.context.attribute_count();
  ctx["density"] = r.context.density();
  j["context"] = std::move(ctx);

  Json dirs = Json::array();
  for (const auto& [id, sub] : r.directory_contexts) {
    const auto& ice = r.directory_icebergs.at(id);
    Json d = Json::object();
    d["id"] = id;
    d["documents"] = sub.object_count();
    d["iceberg_concepts"] = ice.lattice.concepts.size();
    d["topics_present"] = topics_in_frequent_intents(ice).count();
    dirs.push_back(std::move(d));
  }
  j["directories"] = std::move(dirs);

  const auto& dtc = r.directory_topic_context.context;
  Json dt = Json::object();
  dt["directories"] = dtc.object_count();
  dt["topics"] = dtc.attribute_count();
  dt["density"] = dtc.density();
  j["directory_topic_context"] = std::move(dt);

  Json fl = Json::object();
  fl["minsupp"] = r.final_lattice.minsupp ? Json(*r.final_lattice.minsupp) : Json(nullptr);
  fl["concepts"] = r.final_lattice.lattice.concepts.size();
  fl["covers"] = r.final_lattice.lattice.covers.size();
  j["final_lattice"] = std::move(fl);

  j["artifacts"] = Json::array({"context.json", "directory_icebergs.json", "directory_topic_context.json",
                                "lattice.json", "lattice.dot", "manifest.json", "timings.json"});
  return j;
}

std::vector<std::filesystem::path> write_artifacts(const PipelineResult& r, const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw InputError("cannot create output directory '" + out_dir.string() + "': " + ec.message());

  std::vector<std::filesystem::path> written;
  auto emit = [&](const char* name, const std::string& contents) {
    write_file(out_dir / name, contents);
    written.push_back(out_dir / name);
  };

  emit("context.json", context_to_json(r.context));

  Json ice = Json::object();
  ice["schema"] = "fatcat.directory-icebergs/1";
  ice["minsupp"] = r.config.minsupp_directory.value();
  Json dirs = Json::array();
  for (const auto& [id, lattice] : r.directory_icebergs) {
    Json d = Json::object();
    d["id"] = id;
    d["lattice"] = lattice_to_json_value(
        reduced_labels(lattice.lattice, r.directory_contexts.at(id), lattice.minsupp.value()));
    dirs.push_back(std::move(d));
  }
  ice["directories"] = std::move(dirs);
  emit("directory_icebergs.json", format_json(ice));

  emit("directory_topic_context.json", context_to_json(r.directory_topic_context.context, kDirectoryTopicRole));
  emit("lattice.json", r.json);
  emit("lattice.dot", r.dot);
  emit("manifest.json", format_json(manifest(r)));

  Json timings = Json::array();
  for (const auto& t : r.timings) timings.push_back(Json{{"stage", t.stage}, {"milliseconds", t.milliseconds}});
  emit("timings.json", format_json(Json{{"timings", timings}}));
  return written;
}

} // namespace fatcat
