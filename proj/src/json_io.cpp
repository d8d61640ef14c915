#include "fatcat/json_io.hpp"

#include <fstream>
#include <sstream>

#include "fatcat/error.hpp"

namespace fatcat {

namespace {

using Json = nlohmann::ordered_json;

std::string scalar(const Json& j) { return j.dump(-1, ' ', false, Json::error_handler_t::replace); }

bool is_scalar_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j)
    if (e.is_structured()) return false;
  return true;
}

bool is_flat(const Json& j) {
  if (!j.is_structured() || is_scalar_array(j)) return true;
  if (!j.is_object()) return false;
  for (const auto& [k, v] : j.items())
    if (v.is_structured() && !is_scalar_array(v)) return false;
  return true;
}

void write_inline(std::string& out, const Json& j) {
  if (j.is_array()) {
    out += '[';
    bool first = true;
    for (const auto& e : j) {
      if (!first) out += ", ";
      first = false;
      write_inline(out, e);
    }
    out += ']';
  } else if (j.is_object()) {
    out += '{';
    bool first = true;
    for (const auto& [k, v] : j.items()) {
      if (!first) out += ", ";
      first = false;
      out += scalar(Json(k));
      out += ": ";
      write_inline(out, v);
    }
    out += '}';
  } else {
    out += scalar(j);
  }
}

void write_block(std::string& out, const Json& j, std::size_t indent) {
  const std::string pad(indent + 2, ' ');
  const std::string close(indent, ' ');
  if (j.is_array()) {
    if (j.empty() || is_scalar_array(j)) {
      write_inline(out, j);
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad;
      if (is_flat(j[i])) {
        write_inline(out, j[i]);
      } else {
        write_block(out, j[i], indent + 2);
      }
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += close + "]";
  } else if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    std::size_t i = 0;
    for (const auto& [k, v] : j.items()) {
      out += pad + scalar(Json(k)) + ": ";
      write_block(out, v, indent + 2);
      out += ++i < j.size() ? ",\n" : "\n";
    }
    out += close + "}";
  } else {
    out += scalar(j);
  }
}

const Json& member(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw InputError(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(where + "." + key + ": missing");
  return *it;
}

std::vector<std::string> string_list(const Json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) throw InputError(where + "[" + std::to_string(i) + "]: expected a string");
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

} // namespace

std::string format_json(const Json& value) {
  std::string out;
  write_block(out, value, 0);
  out += '\n';
  return out;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Json context_to_json_value(const FormalContext& context, std::optional<std::string_view> role) {
  Json j = Json::object();
  if (role) j["role"] = std::string(*role);
  j["objects"] = context.objects();
  if (!context.object_paths().empty()) j["object_paths"] = context.object_paths();
  j["attributes"] = context.attributes();
  Json rows = Json::array();
  for (std::size_t g = 0; g < context.object_count(); ++g) {
    Json row = Json::array();
    for (std::size_t m = 0; m < context.attribute_count(); ++m) row.push_back(context.incident(g, m) ? 1 : 0);
    rows.push_back(std::move(row));
  }
  j["incidence"] = std::move(rows);
  return j;
}

std::string context_to_json(const FormalContext& context, std::optional<std::string_view> role) {
  return format_json(context_to_json_value(context, role));
}

ParsedContext parse_context(std::string_view text) {
  const Json j = parse_json(text);
  const std::string root = "$";
  std::optional<std::string> role;
  if (j.is_object() && j.contains("role")) {
    if (!j["role"].is_string()) throw InputError("$.role: expected a string");
    role = j["role"].get<std::string>();
  }
  auto objects = string_list(member(j, "objects", root), "$.objects");
  auto attributes = string_list(member(j, "attributes", root), "$.attributes");
  std::vector<std::string> paths;
  if (j.contains("object_paths")) paths = string_list(j["object_paths"], "$.object_paths");

  const Json& inc = member(j, "incidence", root);
  if (!inc.is_array()) throw InputError("$.incidence: expected an array of rows");
  std::vector<BitSet> rows;
  for (std::size_t g = 0; g < inc.size(); ++g) {
    const std::string where = "$.incidence[" + std::to_string(g) + "]";
    if (!inc[g].is_array() || inc[g].size() != attributes.size())
      throw InputError(where + ": expected an array of " + std::to_string(attributes.size()) + " cells");
    BitSet row(attributes.size());
    for (std::size_t m = 0; m < attributes.size(); ++m) {
      const Json& cell = inc[g][m];
      if (!cell.is_number_integer() || (cell.get<long long>() != 0 && cell.get<long long>() != 1))
        throw InputError(where + "[" + std::to_string(m) + "]: expected 0 or 1");
      if (cell.get<long long>() == 1) row.set(m);
    }
    rows.push_back(std::move(row));
  }
  return {FormalContext::from_rows(std::move(objects), std::move(attributes), std::move(rows), std::move(paths)),
          role};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot open '" + path.string() + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw InputError("failed writing '" + path.string() + "'");
}

} // namespace fatcat
