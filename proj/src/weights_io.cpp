#include "fatcat/weights_io.hpp"

#include <charconv>
#include <cmath>
#include <set>
#include <unordered_map>

#include "fatcat/error.hpp"
#include "fatcat/json_io.hpp"
#include "fatcat/log.hpp"

namespace fatcat {

namespace {

using Json = nlohmann::ordered_json;

InputError at(const std::string& where, const std::string& what) { return InputError(where + ": " + what); }

const Json& field(const Json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw at(where + "." + key, "missing");
  return *it;
}

const Json& array_field(const Json& obj, const char* key, const std::string& where) {
  const Json& v = field(obj, key, where);
  if (!v.is_array()) throw at(where + "." + key, "expected an array");
  return v;
}

std::string string_field(const Json& obj, const char* key, const std::string& where) {
  const Json& v = field(obj, key, where);
  if (!v.is_string()) throw at(where + "." + key, "expected a string");
  return v.get<std::string>();
}

TopicId topic_field(const Json& obj, const char* key, const std::string& where) {
  const Json& v = field(obj, key, where);
  if (!v.is_number_unsigned()) throw at(where + "." + key, "expected a non-negative integer topic id");
  return v.get<TopicId>();
}

double weight_field(const Json& obj, const std::string& where) {
  const Json& v = field(obj, "weight", where);
  if (!v.is_number()) throw at(where + ".weight", "expected a number");
  double w = v.get<double>();
  if (!std::isfinite(w) || w < 0.0) throw at(where + ".weight", "must be finite and non-negative");
  return w;
}

/// Shared by the JSON and CSV readers: resolves references and checks the
/// per-document warning bound.
class Builder {
public:
  void add_document(std::string id, std::string path, const std::string& where) {
    if (id.empty()) throw at(where + ".id", "document id must not be empty");
    if (path.empty()) throw at(where + ".path", "document path must not be empty");
    if (!doc_index_.emplace(id, documents_.size()).second) throw at(where + ".id", "duplicate document id '" + id + "'");
    documents_.push_back({std::move(id), std::move(path)});
  }

  void add_topic(TopicInfo info, const std::string& where) {
    if (!topic_index_.emplace(info.topic_id, topic_ids_.size()).second)
      throw at(where + ".id", "duplicate topic id " + std::to_string(info.topic_id));
    topic_ids_.push_back(info.topic_id);
    topics_.emplace(info.topic_id, std::move(info));
  }

  bool has_document(const std::string& id) const { return doc_index_.contains(id); }
  bool has_topic(TopicId id) const { return topic_index_.contains(id); }

  void add_weight(const std::string& doc, TopicId topic, double weight, const std::string& where) {
    auto d = doc_index_.find(doc);
    if (d == doc_index_.end()) throw at(where + ".doc", "unknown document '" + doc + "'");
    auto t = topic_index_.find(topic);
    if (t == topic_index_.end()) throw at(where + ".topic", "unknown topic " + std::to_string(topic));
    const auto cell = static_cast<std::uint64_t>(d->second) << 32 ^ t->second;
    if (!cells_.emplace(cell).second)
      throw at(where, "duplicate weight for (" + doc + ", " + std::to_string(topic) + ")");
    entries_.push_back({d->second, t->second, weight});
  }

  ParsedWeights finish() {
    ParsedWeights out;
    std::vector<std::size_t> per_doc(documents_.size(), 0);
    for (const auto& e : entries_) ++per_doc[e.document];
    for (std::size_t i = 0; i < documents_.size(); ++i)
      if (per_doc[i] > kTopTopicsPerDocument)
        out.warnings.push_back("document '" + documents_[i].id + "' has " + std::to_string(per_doc[i]) +
                               " weights; expected at most " + std::to_string(kTopTopicsPerDocument));
    for (const auto& w : out.warnings) log(LogLevel::warn, w);
    out.file.matrix = WeightedDocTopicMatrix(std::move(documents_), std::move(topic_ids_), std::move(entries_));
    out.file.topics = std::move(topics_);
    return out;
  }

private:
  std::vector<Document> documents_;
  std::vector<TopicId> topic_ids_;
  std::map<TopicId, TopicInfo> topics_;
  std::vector<WeightEntry> entries_;
  std::unordered_map<std::string, std::size_t> doc_index_;
  std::unordered_map<TopicId, std::size_t> topic_index_;
  std::set<std::uint64_t> cells_;
};

} // namespace

ParsedWeights parse_weights(std::string_view json_text) {
  const Json root = parse_json(json_text);
  if (!root.is_object()) throw at("$", "expected an object");
  Builder b;

  const Json& docs = array_field(root, "documents", "$");
  for (std::size_t i = 0; i < docs.size(); ++i) {
    const std::string where = "$.documents[" + std::to_string(i) + "]";
    if (!docs[i].is_object()) throw at(where, "expected an object");
    std::string id = string_field(docs[i], "id", where);
    std::string path = docs[i].contains("path") ? string_field(docs[i], "path", where) : id;
    b.add_document(std::move(id), std::move(path), where);
  }

  const Json& topics = array_field(root, "topics", "$");
  for (std::size_t i = 0; i < topics.size(); ++i) {
    const std::string where = "$.topics[" + std::to_string(i) + "]";
    if (!topics[i].is_object()) throw at(where, "expected an object");
    TopicInfo info;
    info.topic_id = topic_field(topics[i], "id", where);
    if (topics[i].contains("words")) {
      const Json& words = array_field(topics[i], "words", where);
      if (words.empty()) throw at(where + ".words", "must not be empty when present");
      for (std::size_t w = 0; w < words.size(); ++w) {
        if (!words[w].is_string()) throw at(where + ".words[" + std::to_string(w) + "]", "expected a string");
        info.words.push_back(words[w].get<std::string>());
      }
    }
    if (topics[i].contains("word_scores")) {
      const Json& scores = array_field(topics[i], "word_scores", where);
      for (std::size_t w = 0; w < scores.size(); ++w) {
        if (!scores[w].is_number()) throw at(where + ".word_scores[" + std::to_string(w) + "]", "expected a number");
        info.word_scores.push_back(scores[w].get<double>());
      }
      if (info.word_scores.size() != info.words.size())
        throw at(where + ".word_scores", "length " + std::to_string(info.word_scores.size()) +
                                             " differs from words length " + std::to_string(info.words.size()));
    }
    b.add_topic(std::move(info), where);
  }

  const Json& weights = array_field(root, "weights", "$");
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const std::string where = "$.weights[" + std::to_string(i) + "]";
    if (!weights[i].is_object()) throw at(where, "expected an object");
    b.add_weight(string_field(weights[i], "doc", where), topic_field(weights[i], "topic", where),
                 weight_field(weights[i], where), where);
  }
  return b.finish();
}

ParsedWeights parse_weights_csv(std::string_view csv_text) {
  std::vector<std::vector<std::string>> rows;
  std::size_t start = 0;
  while (start < csv_text.size()) {
    std::size_t end = csv_text.find('\n', start);
    if (end == std::string_view::npos) end = csv_text.size();
    std::string_view line = csv_text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    start = end + 1;
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::size_t c = 0;
    while (c <= line.size()) {
      std::size_t comma = line.find(',', c);
      if (comma == std::string_view::npos) comma = line.size();
      cells.emplace_back(line.substr(c, comma - c));
      c = comma + 1;
    }
    rows.push_back(std::move(cells));
  }
  if (rows.empty()) throw at("line 1", "missing header");
  const auto& header = rows.front();
  const bool with_path = header == std::vector<std::string>{"doc", "path", "topic", "weight"};
  if (!with_path && header != std::vector<std::string>{"doc", "topic", "weight"})
    throw at("line 1", "expected header doc,topic,weight or doc,path,topic,weight");

  Builder b;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const std::string where = "line " + std::to_string(r + 1);
    const auto& row = rows[r];
    if (row.size() != header.size()) throw at(where, "expected " + std::to_string(header.size()) + " fields");
    const std::string& doc = row[0];
    const std::string& topic_text = row[with_path ? 2 : 1];
    const std::string& weight_text = row[with_path ? 3 : 2];

    TopicId topic = 0;
    auto [tp, tec] = std::from_chars(topic_text.data(), topic_text.data() + topic_text.size(), topic);
    if (tec != std::errc{} || tp != topic_text.data() + topic_text.size() || topic_text.empty())
      throw at(where + ".topic", "expected a non-negative integer topic id");
    double weight = 0.0;
    auto [wp, wec] = std::from_chars(weight_text.data(), weight_text.data() + weight_text.size(), weight);
    if (wec != std::errc{} || wp != weight_text.data() + weight_text.size() || weight_text.empty())
      throw at(where + ".weight", "expected a number");
    if (!std::isfinite(weight) || weight < 0.0) throw at(where + ".weight", "must be finite and non-negative");

    if (!b.has_document(doc)) b.add_document(doc, with_path ? row[1] : doc, where);
    if (!b.has_topic(topic)) b.add_topic(TopicInfo{topic, {}, {}}, where);
    b.add_weight(doc, topic, weight, where);
  }
  return b.finish();
}

std::string write_weights(const WeightsFile& file) {
  const auto& m = file.matrix;
  Json root = Json::object();
  Json docs = Json::array();
  for (const auto& d : m.documents()) docs.push_back(Json{{"id", d.id}, {"path", d.path}});
  root["documents"] = std::move(docs);
  Json topics = Json::array();
  for (TopicId t : m.topics()) {
    Json rec = Json::object();
    rec["id"] = t;
    if (auto it = file.topics.find(t); it != file.topics.end()) {
      if (!it->second.words.empty()) rec["words"] = it->second.words;
      if (!it->second.word_scores.empty()) rec["word_scores"] = it->second.word_scores;
    }
    topics.push_back(std::move(rec));
  }
  root["topics"] = std::move(topics);
  Json weights = Json::array();
  for (const auto& e : m.entries())
    weights.push_back(Json{{"doc", m.documents()[e.document].id}, {"topic", m.topics()[e.topic]}, {"weight", e.weight}});
  root["weights"] = std::move(weights);
  return format_json(root);
}

} // namespace fatcat
