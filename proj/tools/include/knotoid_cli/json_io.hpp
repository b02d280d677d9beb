#pragma once

#include <string>

#include "knotoid/code.hpp"
#include "knotoid/laurent.hpp"
#include "knotoid/sbm.hpp"
#include "knotoid/vassiliev.hpp"

// JSON text conversions. nlohmann stays private to the implementation.
namespace knotoid::cli {

std::string to_json(const LaurentPoly& p);
std::string to_json(const SBM& m);
std::string to_json(const FormalSum& s);
std::string report_json(const KnotoidCode& code);

SBM sbm_from_json(const std::string& text);

// Strips '#' comment lines and surrounding whitespace from a Gauss code file.
std::string read_code_text(const std::string& path);
std::string read_file(const std::string& path);

// Hex fingerprint back to its readable payload.
std::string unhex(const std::string& hex);

}  // namespace knotoid::cli
