#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "fatcat/context.hpp"

namespace fatcat {

inline constexpr std::string_view kDirectoryTopicRole = "directory-topic";

/// Deterministic layout used for every JSON artifact: objects expanded one
/// member per line, arrays of scalars kept on one line, and arrays of flat
/// records (incidence rows, concepts, cover pairs) printed one per line.
/// Ends with a newline.
std::string format_json(const nlohmann::ordered_json& value);

/// Parses UTF-8 JSON, throwing InputError with the parser's position.
nlohmann::ordered_json parse_json(std::string_view text);

/// {"role"?, "objects", "object_paths"?, "attributes", "incidence"}
nlohmann::ordered_json context_to_json_value(const FormalContext& context,
                                             std::optional<std::string_view> role = std::nullopt);
std::string context_to_json(const FormalContext& context, std::optional<std::string_view> role = std::nullopt);

struct ParsedContext {
  FormalContext context;
  std::optional<std::string> role;
};
ParsedContext parse_context(std::string_view text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

} // namespace fatcat
