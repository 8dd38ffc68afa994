// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "tphw/weave.hpp"

namespace tphw {

using Json = nlohmann::ordered_json;

/// %.17g, the form every number in weave files and reports uses.
std::string format_number(double v);

/// Pretty-printed JSON with floating point values written by format_number.
/// Output ends with a newline.
std::string dump_json(const Json& j);

Json weave_to_json(const WeaveSpec& w);
/// Throws ParseError naming the offending field, InvariantViolation or
/// IncommensurateHelix.
WeaveSpec weave_from_json(const Json& j);

std::string serialize_weave(const WeaveSpec& w);
/// Throws ParseError with line and column for malformed text.
WeaveSpec parse_weave(std::string_view text);

void save_weave(const WeaveSpec& w, const std::filesystem::path& path);
WeaveSpec load_weave(const std::filesystem::path& path);

/// Whole file as a string; throws IoError.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace tphw
