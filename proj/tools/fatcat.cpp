// fatcat: command-line driver for the directory-topic concept lattice
// pipeline. Exit codes: 0 success, 1 input error, 2 pipeline/domain error.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "fatcat/aggregation.hpp"
#include "fatcat/error.hpp"
#include "fatcat/iceberg.hpp"
#include "fatcat/json_io.hpp"
#include "fatcat/lattice_export.hpp"
#include "fatcat/log.hpp"
#include "fatcat/pipeline.hpp"
#include "fatcat/thresholding.hpp"
#include "fatcat/weights_io.hpp"

namespace {

using namespace fatcat;

ParsedWeights load_weights(const std::string& path) {
  const std::string text = read_file(path);
  try {
    if (std::filesystem::path(path).extension() == ".csv") return parse_weights_csv(text);
    return parse_weights(text);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

FormalContext load_context(const std::string& path) {
  try {
    return parse_context(read_file(path)).context;
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void emit(const std::string& out, const std::string& contents) {
  if (out.empty() || out == "-") {
    std::cout << contents;
  } else {
    write_file(out, contents);
    log(LogLevel::info, "wrote " + out);
  }
}

std::optional<Rate> optional_rate(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return Rate::parse(text);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"fatcat: directory-topic concept lattices from document-topic weights"};
  app.require_subcommand(1);

  // gen
  SyntheticConfig gen_cfg;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Write a seeded synthetic weights file");
  gen->add_option("--seed", gen_cfg.seed, "Generator seed")->capture_default_str();
  gen->add_option("--n-dirs", gen_cfg.n_dirs, "Number of directories")->capture_default_str();
  gen->add_option("--docs-per-dir", gen_cfg.docs_per_dir, "Documents per directory")->capture_default_str();
  gen->add_option("--n-topics", gen_cfg.n_topics, "Number of topics")->capture_default_str();
  gen->add_option("--topics-per-doc", gen_cfg.topics_per_doc, "Weights per document")->capture_default_str();
  gen->add_option("--out", gen_out, "Output file (stdout when omitted)");

  // shared option storage
  std::string weights_path, context_path, out_path, dot_path, out_dir;
  std::string target_density = "0.1", minsupp = "0.1", minsupp_directory = "0.1", minsupp_final, delta_text;
  std::size_t depth = kDefaultDirectoryDepth;
  std::size_t words_per_topic = kDefaultWordsPerTopic;
  std::size_t max_exact = EnumerationOptions{}.max_attributes;

  auto* threshold = app.add_subcommand("threshold", "Normalize weights and report the density-driven threshold");
  threshold->add_option("--weights", weights_path, "Weights file (.json or .csv)")->required();
  threshold->add_option("--target-density", target_density, "Density target in (0, 1]")->capture_default_str();
  threshold->add_option("--out", out_path, "Report file (stdout when omitted)");

  auto* binarize_cmd = app.add_subcommand("binarize", "Threshold normalized weights into a document-topic context");
  binarize_cmd->add_option("--weights", weights_path, "Weights file (.json or .csv)")->required();
  binarize_cmd->add_option("--target-density", target_density, "Density target in (0, 1]")->capture_default_str();
  binarize_cmd->add_option("--delta", delta_text, "Explicit threshold; skips the density search");
  binarize_cmd->add_option("--directory-depth", depth, "Directory components per group")->capture_default_str();
  binarize_cmd->add_option("--out", out_path, "Context file (stdout when omitted)");

  auto* iceberg = app.add_subcommand("iceberg", "Iceberg concept lattice of a context");
  iceberg->add_option("--context", context_path, "Context JSON")->required();
  iceberg->add_option("--minsupp", minsupp, "Minimum support in [0, 1]")->capture_default_str();
  iceberg->add_option("--out", out_path, "Lattice JSON (stdout when omitted)");
  iceberg->add_option("--dot", dot_path, "Also write a DOT diagram");

  auto* aggregate = app.add_subcommand("aggregate", "Directory-topic context from a document-topic context");
  aggregate->add_option("--context", context_path, "Context JSON with object_paths")->required();
  aggregate->add_option("--minsupp-directory", minsupp_directory, "Per-directory minimum support")
      ->capture_default_str();
  aggregate->add_option("--directory-depth", depth, "Directory components per group")->capture_default_str();
  aggregate->add_option("--out", out_path, "Context file (stdout when omitted)");

  auto* lattice = app.add_subcommand("lattice", "Concept lattice of a (directory-topic) context");
  lattice->add_option("--context", context_path, "Context JSON")->required();
  lattice->add_option("--minsupp-final", minsupp_final, "Iceberg instead of the full lattice");
  lattice->add_option("--weights", weights_path, "Weights file supplying topic words for the legend");
  lattice->add_option("--words-per-topic", words_per_topic, "Legend words per topic")->capture_default_str();
  lattice->add_option("--max-exact-attributes", max_exact, "Attribute limit for full enumeration")
      ->capture_default_str();
  lattice->add_option("--out", out_path, "Lattice JSON (stdout when omitted)");
  lattice->add_option("--dot", dot_path, "Also write a DOT diagram");

  auto* pipeline = app.add_subcommand("pipeline", "Run every stage and write all artifacts");
  pipeline->add_option("--weights", weights_path, "Weights file (.json or .csv)")->required();
  pipeline->add_option("--out-dir", out_dir, "Artifact directory")->required();
  pipeline->add_option("--target-density", target_density, "Density target in (0, 1]")->capture_default_str();
  pipeline->add_option("--minsupp-directory", minsupp_directory, "Per-directory minimum support")
      ->capture_default_str();
  pipeline->add_option("--minsupp-final", minsupp_final, "Iceberg the final lattice at this support");
  pipeline->add_option("--directory-depth", depth, "Directory components per group")->capture_default_str();
  pipeline->add_option("--words-per-topic", words_per_topic, "Legend words per topic")->capture_default_str();
  pipeline->add_option("--max-exact-attributes", max_exact, "Attribute limit for full enumeration")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*gen) {
      emit(gen_out, write_weights(generate_synthetic(gen_cfg)));
    } else if (*threshold) {
      auto parsed = load_weights(weights_path);
      auto report = select_threshold(row_normalize(parsed.file.matrix), Rate::parse(target_density));
      emit(out_path, format_json(threshold_report_json(report)));
      if (!report.reached) {
        log(LogLevel::error, "no weight value reaches the target density");
        return 2;
      }
    } else if (*binarize_cmd) {
      auto parsed = load_weights(weights_path);
      auto normalized = row_normalize(parsed.file.matrix);
      double delta = 0.0;
      if (!delta_text.empty()) {
        try {
          delta = std::stod(delta_text);
        } catch (const std::exception&) {
          throw InputError("invalid --delta '" + delta_text + "'");
        }
      } else {
        auto report = select_threshold(normalized, Rate::parse(target_density));
        if (!report.reached) throw DomainError("no weight value reaches target density " + target_density);
        delta = report.delta;
        log(LogLevel::info, "delta = " + std::to_string(delta));
      }
      emit(out_path, context_to_json(binarize(normalized, delta, depth)));
    } else if (*iceberg) {
      auto ctx = load_context(context_path);
      const Rate rate = Rate::parse(minsupp);
      auto ll = reduced_labels(iceberg_concepts(ctx, rate).lattice, ctx, rate.value());
      emit(out_path, to_json(ll));
      if (!dot_path.empty()) write_file(dot_path, to_dot(ll));
    } else if (*aggregate) {
      auto ctx = load_context(context_path);
      auto dtc = directory_topic_context(split_by_directory(ctx, depth), Rate::parse(minsupp_directory));
      emit(out_path, context_to_json(dtc.context, kDirectoryTopicRole));
    } else if (*lattice) {
      auto ctx = load_context(context_path);
      const auto rate = optional_rate(minsupp_final);
      auto cs = directory_lattice(DirectoryTopicContext{ctx}, rate, EnumerationOptions{max_exact});
      std::optional<double> shown;
      if (rate) shown = rate->value();
      auto ll = reduced_labels(cs, ctx, shown);
      emit(out_path, to_json(ll));
      if (!dot_path.empty()) {
        std::optional<ParsedWeights> parsed;
        if (!weights_path.empty()) parsed = load_weights(weights_path);
        write_file(dot_path, to_dot(ll, parsed ? &parsed->file.topics : nullptr, words_per_topic));
      }
    } else if (*pipeline) {
      auto parsed = load_weights(weights_path);
      PipelineConfig cfg;
      cfg.target_density = Rate::parse(target_density);
      cfg.minsupp_directory = Rate::parse(minsupp_directory);
      cfg.minsupp_final = optional_rate(minsupp_final);
      cfg.directory_depth = depth;
      cfg.words_per_topic = words_per_topic;
      cfg.max_exact_attributes = max_exact;
      auto result = run_pipeline(parsed.file, cfg);
      for (const auto& p : write_artifacts(result, out_dir)) log(LogLevel::info, "wrote " + p.string());
    }
  } catch (const InputError& e) {
    log(LogLevel::error, e.what());
    return 1;
  } catch (const DomainError& e) {
    log(LogLevel::error, e.what());
    return 2;
  } catch (const std::exception& e) {
    log(LogLevel::error, e.what());
    return 2;
  }
  return 0;
}
