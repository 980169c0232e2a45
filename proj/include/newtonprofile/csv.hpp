#pragma once

#include <filesystem>
#include <functional>
#include <ostream>
#include <string>

namespace newtonprofile {

/// Shortest round-trip decimal form of a double ('.' separator, no locale).
std::string format_double(double value);

/// Runs `write` into a sibling temp file and renames it over `path` only after
/// `write` returns normally, so a failed command never leaves partial output.
void write_file_atomically(const std::filesystem::path& path,
                           const std::function<void(std::ostream&)>& write);

}  // namespace newtonprofile
