#include "fatcat/lattice_export.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_map>

#include "fatcat/error.hpp"
#include "fatcat/json_io.hpp"

namespace fatcat {

namespace {

using Json = nlohmann::ordered_json;

std::optional<TopicId> parse_topic_id(std::string_view s) {
  if (s.empty()) return std::nullopt;
  TopicId id = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), id);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return id;
}

std::string record_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '{': case '}': case '|': case '<': case '>': case '"': case '\\': case ' ':
        out += '\\';
        out += c;
        break;
      case '\n':
        out += "\\n";
        break;
      default:
        out += c;
    }
  }
  return out;
}

std::string attribute_text(const std::vector<std::string>& names) {
  std::set<TopicId> ids;
  for (const auto& n : names) {
    auto id = parse_topic_id(n);
    if (!id) {
      std::string joined;
      for (const auto& x : names) joined += (joined.empty() ? "" : ", ") + x;
      return joined;
    }
    ids.insert(*id);
  }
  return compress_ranges(ids);
}

} // namespace

LabeledLattice reduced_labels(const ConceptSet& lattice, const FormalContext& context,
                              std::optional<double> minsupp) {
  LabeledLattice out;
  out.lattice = lattice;
  out.minsupp = minsupp;

  std::unordered_map<BitSet, std::size_t, BitSetHash> by_extent;
  for (std::size_t i = 0; i < lattice.concepts.size(); ++i) by_extent.emplace(lattice.concepts[i].extent, i);

  for (std::size_t m = 0; m < context.attribute_count(); ++m) {
    auto it = by_extent.find(context.column(m));
    if (it != by_extent.end()) out.attribute_labels.push_back({context.attributes()[m], it->second});
  }
  for (std::size_t g = 0; g < context.object_count(); ++g) {
    auto it = by_extent.find(context.extent_of(context.row(g)));
    if (it != by_extent.end()) out.object_labels.push_back({context.objects()[g], it->second});
  }
  return out;
}

std::string compress_ranges(const std::set<TopicId>& ids) {
  std::string out;
  for (auto it = ids.begin(); it != ids.end();) {
    const TopicId lo = *it;
    TopicId hi = lo;
    ++it;
    while (it != ids.end() && *it == hi + 1) hi = *it++;
    if (!out.empty()) out += ", ";
    out += std::to_string(lo);
    if (hi != lo) out += "-" + std::to_string(hi);
  }
  return out;
}

std::set<TopicId> expand_ranges(std::string_view text) {
  std::set<TopicId> out;
  auto fail = [&] { return InputError("malformed ID range list '" + std::string(text) + "'"); };
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  if (trim(text).empty()) return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view part = trim(text.substr(start, end - start));
    std::size_t dash = part.find('-');
    auto lo = parse_topic_id(part.substr(0, dash));
    auto hi = dash == std::string_view::npos ? lo : parse_topic_id(part.substr(dash + 1));
    if (!lo || !hi || *hi < *lo) throw fail();
    for (TopicId t = *lo;; ++t) {
      out.insert(t);
      if (t == *hi) break;
    }
    start = end + 1;
  }
  return out;
}

std::string to_dot(const LabeledLattice& lattice, const std::map<TopicId, TopicInfo>* topics,
                   std::size_t words_per_topic) {
  const std::size_t n = lattice.lattice.concepts.size();
  std::vector<std::vector<std::string>> attrs(n), objs(n);
  for (const auto& l : lattice.attribute_labels) attrs[l.concept_index].push_back(l.name);
  for (const auto& l : lattice.object_labels) objs[l.concept_index].push_back(l.name);

  std::string out = "digraph lattice {\n";
  if (n > 0) {
    out += "  rankdir=TB;\n";
    out += "  node [shape=record, fontsize=10];\n";
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::string lower;
    for (const auto& o : objs[i]) lower += (lower.empty() ? "" : "\\n") + record_escape(o);
    out += "  c" + std::to_string(i) + " [label=\"{" + record_escape(attribute_text(attrs[i])) + "|" + lower + "}\"];\n";
  }
  for (const auto& c : lattice.lattice.covers)
    out += "  c" + std::to_string(c.parent) + " -> c" + std::to_string(c.child) + ";\n";

  if (topics) {
    std::set<TopicId> shown;
    for (const auto& l : lattice.attribute_labels)
      if (auto id = parse_topic_id(l.name); id && topics->contains(*id)) shown.insert(*id);
    if (!shown.empty()) out += "  // topics\n";
    for (TopicId id : shown) {
      const auto& words = topics->at(id).words;
      std::string line = "  // " + std::to_string(id) + ":";
      for (std::size_t w = 0; w < std::min(words_per_topic, words.size()); ++w) line += " " + words[w];
      out += line + "\n";
    }
  }
  out += "}\n";
  return out;
}

Json lattice_to_json_value(const LabeledLattice& lattice) {
  const ConceptSet& cs = lattice.lattice;
  Json j = Json::object();
  j["schema"] = std::string(kLatticeSchema);
  if (lattice.minsupp) j["minsupp"] = *lattice.minsupp;
  j["objects"] = cs.objects;
  j["attributes"] = cs.attributes;
  Json concepts = Json::array();
  for (const auto& c : cs.concepts) {
    Json rec = Json::object();
    Json extent = Json::array();
    for (std::size_t g : c.extent.indices()) extent.push_back(cs.objects[g]);
    Json intent = Json::array();
    for (std::size_t m : c.intent.indices()) intent.push_back(cs.attributes[m]);
    rec["extent"] = std::move(extent);
    rec["intent"] = std::move(intent);
    rec["support"] = c.support;
    concepts.push_back(std::move(rec));
  }
  j["concepts"] = std::move(concepts);
  Json covers = Json::array();
  for (const auto& c : cs.covers) covers.push_back(Json::array({c.parent, c.child}));
  j["covers"] = std::move(covers);
  Json attr = Json::object();
  for (const auto& l : lattice.attribute_labels) attr[l.name] = l.concept_index;
  j["attribute_labels"] = std::move(attr);
  Json obj = Json::object();
  for (const auto& l : lattice.object_labels) obj[l.name] = l.concept_index;
  j["object_labels"] = std::move(obj);
  return j;
}

std::string to_json(const LabeledLattice& lattice) { return format_json(lattice_to_json_value(lattice)); }

LabeledLattice lattice_from_json(std::string_view text) { return lattice_from_json_value(parse_json(text)); }

LabeledLattice lattice_from_json_value(const Json& j) {
  auto fail = [](const std::string& where, const std::string& what) { return InputError(where + ": " + what); };
  if (!j.is_object()) throw fail("$", "expected an object");
  auto need = [&](const char* key) -> const Json& {
    auto it = j.find(key);
    if (it == j.end()) throw fail(std::string("$.") + key, "missing");
    return *it;
  };
  if (!need("schema").is_string() || need("schema").get<std::string>() != kLatticeSchema)
    throw fail("$.schema", "expected \"" + std::string(kLatticeSchema) + "\"");

  LabeledLattice out;
  ConceptSet& cs = out.lattice;
  if (j.contains("minsupp")) {
    if (!j["minsupp"].is_number()) throw fail("$.minsupp", "expected a number");
    out.minsupp = j["minsupp"].get<double>();
  }
  auto names = [&](const char* key) {
    const Json& arr = need(key);
    if (!arr.is_array()) throw fail(std::string("$.") + key, "expected an array");
    std::vector<std::string> v;
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      if (!arr[i].is_string()) throw fail(std::string("$.") + key + "[" + std::to_string(i) + "]", "expected a string");
      if (!index.emplace(arr[i].get<std::string>(), i).second)
        throw fail(std::string("$.") + key, "duplicate '" + arr[i].get<std::string>() + "'");
      v.push_back(arr[i].get<std::string>());
    }
    return std::pair{v, index};
  };
  auto [objects, object_index] = names("objects");
  auto [attributes, attribute_index] = names("attributes");
  cs.objects = objects;
  cs.attributes = attributes;

  auto to_bits = [&](const Json& arr, const std::unordered_map<std::string, std::size_t>& index, std::size_t width,
                     const std::string& where) {
    if (!arr.is_array()) throw fail(where, "expected an array");
    BitSet bits(width);
    for (const auto& e : arr) {
      auto it = e.is_string() ? index.find(e.get<std::string>()) : index.end();
      if (it == index.end()) throw fail(where, "unknown member " + e.dump());
      bits.set(it->second);
    }
    return bits;
  };
  const Json& concepts = need("concepts");
  if (!concepts.is_array()) throw fail("$.concepts", "expected an array");
  for (std::size_t i = 0; i < concepts.size(); ++i) {
    const std::string where = "$.concepts[" + std::to_string(i) + "]";
    const Json& rec = concepts[i];
    if (!rec.is_object() || !rec.contains("extent") || !rec.contains("intent") || !rec.contains("support"))
      throw fail(where, "expected {extent, intent, support}");
    if (!rec["support"].is_number()) throw fail(where + ".support", "expected a number");
    FormalConcept c;
    c.extent = to_bits(rec["extent"], object_index, objects.size(), where + ".extent");
    c.intent = to_bits(rec["intent"], attribute_index, attributes.size(), where + ".intent");
    c.support = rec["support"].get<double>();
    cs.concepts.push_back(std::move(c));
  }
  const Json& covers = need("covers");
  if (!covers.is_array()) throw fail("$.covers", "expected an array");
  for (std::size_t i = 0; i < covers.size(); ++i) {
    const Json& p = covers[i];
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_unsigned() || !p[1].is_number_unsigned() ||
        p[0].get<std::size_t>() >= cs.concepts.size() || p[1].get<std::size_t>() >= cs.concepts.size())
      throw fail("$.covers[" + std::to_string(i) + "]", "expected a pair of concept indices");
    cs.covers.push_back({p[0].get<std::size_t>(), p[1].get<std::size_t>()});
  }
  auto labels = [&](const char* key, const std::unordered_map<std::string, std::size_t>& index) {
    const Json& obj = need(key);
    if (!obj.is_object()) throw fail(std::string("$.") + key, "expected an object");
    std::vector<Label> v;
    for (const auto& [name, idx] : obj.items()) {
      if (!index.contains(name)) throw fail(std::string("$.") + key + "." + name, "unknown name");
      if (!idx.is_number_unsigned() || idx.get<std::size_t>() >= cs.concepts.size())
        throw fail(std::string("$.") + key + "." + name, "expected a concept index");
      v.push_back({name, idx.get<std::size_t>()});
    }
    return v;
  };
  out.attribute_labels = labels("attribute_labels", attribute_index);
  out.object_labels = labels("object_labels", object_index);
  return out;
}

} // namespace fatcat
