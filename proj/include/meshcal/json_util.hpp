#pragma once

#include <json.hpp>

#include <filesystem>

namespace meshcal {

// Throws IoError when the file cannot be opened, ParseError (with the
// library's line/byte context) when it is not valid JSON.
nlohmann::json load_json_file(const std::filesystem::path& path);

// Two-space indented; nlohmann emits shortest-round-trip doubles, so finite
// values survive save/load bit-exactly.
void save_json_file(const nlohmann::json& j, const std::filesystem::path& path);

} // namespace meshcal
