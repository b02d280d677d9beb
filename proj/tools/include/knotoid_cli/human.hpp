#pragma once

#include <string>

namespace knotoid::cli {

// Plain-text tables for a command's JSON result.
std::string render_human(const std::string& json_text);

}  // namespace knotoid::cli
