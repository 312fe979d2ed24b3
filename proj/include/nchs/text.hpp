#pragma once

// Small text helpers shared by the file parsers.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace nchs::text {

std::string read_file(const std::filesystem::path& path);

std::string_view trim(std::string_view s);
std::vector<std::string> split_ws(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);

/// Splits into lines with `#` comments and surrounding blanks removed; empty lines dropped.
std::vector<std::string> content_lines(std::string_view text);

/// If `line` starts with `key:` returns the trimmed remainder.
bool take_key(std::string_view line, std::string_view key, std::string& rest);

}  // namespace nchs::text
