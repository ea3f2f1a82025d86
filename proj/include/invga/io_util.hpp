#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace invga {

std::string read_text_file(const std::filesystem::path& path);

/// Write-temp-then-rename so readers never observe a half-written file.
void write_text_file_atomic(const std::filesystem::path& path, std::string_view content);

/// %.17g
std::string format_g17(double value);

std::string_view trim(std::string_view text);

/// Strict signed-integer parse: optional '-', digits, nothing else.
std::optional<long long> parse_int64(std::string_view text);

std::optional<double> parse_double(std::string_view text);

} // namespace invga
