#include "knotoid_cli/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json_detail.hpp"
#include "knotoid/errors.hpp"
#include "knotoid/invariants.hpp"

namespace knotoid::cli {

namespace detail {

json poly(const LaurentPoly& p) {
  json out = json::object();
  for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = c;
  return out;
}

json sbm(const SBM& m) {
  return json{{"elements", m.labels()}, {"s", m.labels().front()}, {"d", m.labels().back()}, {"matrix", m.matrix()}};
}

json formal_sum(const FormalSum& s) {
  json terms = json::array();
  for (const auto& [fp, c] : s.terms()) terms.push_back({{"fingerprint", fp.hex()}, {"coef", c}});
  return json{{"terms", terms}};
}

json report(const KnotoidCode& code) {
  json out;
  out["code"] = serialize(code);
  out["kind"] = to_string(code.kind());
  bool classical = !code.has_arrows() && !code.has_singular();
  json crossings = json::array();
  for (const auto& r : crossing_reports(code)) {
    json c{{"id", r.chord}, {"flat_weight", r.flat_weight}};
    c["sign"] = r.sign ? json(*r.sign) : json(nullptr);
    c["weight"] = r.weight ? json(*r.weight) : json(nullptr);
    crossings.push_back(c);
  }
  out["crossings"] = crossings;
  if (classical) {
    out["writhe"] = writhe(code);
    out["P"] = poly(affine_index_polynomial(code));
    auto d = affine_decomposition(code);
    out["decomposition"] = {{"Pplus", poly(d.plus)}, {"Pminus", poly(d.minus)}, {"w0prime", d.w0_prime}};
  } else {
    out["writhe"] = nullptr;
    out["P"] = nullptr;
    out["decomposition"] = nullptr;
  }
  out["Q"] = poly(flat_affine_polynomial(code));
  out["cubic"] = cubic_gauss_sum(code);
  return out;
}

json classification(const Classification& c) {
  json elems = json::array();
  for (const auto& e : c.elements)
    elems.push_back({{"element", e.label}, {"class", to_string(e.kind)}, {"partners", e.partners}});
  return json{{"elements", elems}, {"d", to_string(c.d)}};
}

SBM sbm_from(const json& j) {
  try {
    auto labels = j.at("elements").get<std::vector<std::string>>();
    auto matrix = j.at("matrix").get<SBM::Matrix>();
    auto label = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    return SBM(labels, matrix, label(j.at("s")), label(j.at("d")));
  } catch (const json::exception& e) {
    raise(errc::kSyntax, std::string("bad SBM JSON: ") + e.what());
  }
}

}  // namespace detail

std::string to_json(const LaurentPoly& p) { return detail::poly(p).dump(); }
std::string to_json(const SBM& m) { return detail::sbm(m).dump(); }
std::string to_json(const FormalSum& s) { return detail::formal_sum(s).dump(); }
std::string report_json(const KnotoidCode& code) { return detail::report(code).dump(); }

SBM sbm_from_json(const std::string& text) {
  detail::json j;
  try {
    j = detail::json::parse(text);
  } catch (const detail::json::exception& e) {
    raise(errc::kSyntax, std::string("bad JSON: ") + e.what());
  }
  return detail::sbm_from(j);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise("IOError", "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string read_code_text(const std::string& path) {
  std::istringstream in(read_file(path));
  std::string text;
  for (std::string line; std::getline(in, line);) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (!text.empty()) text += ' ';
    text += line;
  }
  return text;
}

std::string unhex(const std::string& hex) {
  std::string out;
  for (std::size_t i = 0; i + 1 < hex.size(); i += 2) out += static_cast<char>(std::stoi(hex.substr(i, 2), nullptr, 16));
  return out;
}

}  // namespace knotoid::cli
