#include "knotoid_cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <sstream>

#include "json_detail.hpp"
#include "knotoid/errors.hpp"
#include "knotoid/invariants.hpp"
#include "knotoid/moves.hpp"
#include "knotoid/surgery.hpp"
#include "knotoid_cli/human.hpp"
#include "knotoid_cli/json_io.hpp"

namespace knotoid::cli {

namespace {

using detail::json;
namespace fs = std::filesystem;

struct Options {
  bool human = false;
  std::string what;
  std::string file;
  std::vector<std::string> files;
  int at = 0;
  int ell1 = 0;
  std::string inv = "F";
  int order = 1;
  int samples = 200;
  int steps = 0;
  std::uint64_t seed = 0;
  int max_chords = 0;
  std::string flavor = "auto";
  int max_classical = 4;
};

KnotoidCode load_code(const std::string& path) { return parse(read_code_text(path)); }

SBM load_sbm(const std::string& path) {
  if (fs::path(path).extension() == ".json") return sbm_from_json(read_file(path));
  return build_sbm(load_code(path));
}

json cmd_validate(const Options& o) {
  KnotoidCode c = load_code(o.file);
  return {{"valid", true},
          {"kind", to_string(c.kind())},
          {"code", serialize(c)},
          {"components", c.component_count()},
          {"chords", c.chord_count()}};
}

json cmd_invariant(const Options& o) {
  KnotoidCode c = load_code(o.file);
  if (o.what == "affine") {
    auto d = affine_decomposition(c);
    return {{"P", detail::poly(affine_index_polynomial(c))},
            {"decomposition",
             {{"Pplus", detail::poly(d.plus)}, {"Pminus", detail::poly(d.minus)}, {"w0prime", d.w0_prime}}},
            {"writhe", writhe(c)}};
  }
  if (o.what == "flat-affine") return {{"Q", detail::poly(flat_affine_polynomial(c))}};
  if (o.what == "intersection")
    return {{"intersection_index", intersection_index(make_ordered(c, o.ell1))}, {"ell1", o.ell1}};
  return detail::report(c);
}

json cmd_smooth(const Options& o) {
  KnotoidCode c = load_code(o.file);
  if (o.what == "zero") return {{"code", serialize(zero_smooth(c, o.at))}};
  auto s = one_smooth(c, o.at);
  return {{"code", serialize(s.code)}, {"ell1", s.view.ell1}, {"intersection_index", intersection_index(s.view)}};
}

json with_invariant(const std::string& name, const InvariantValue& v) {
  if (const auto* f = std::get_if<FormalSum>(&v.value)) {
    json out = detail::formal_sum(*f);
    out["invariant"] = name;
    return out;
  }
  return {{"invariant", name}, {"P", detail::poly(std::get<LaurentPoly>(v.value))}};
}

json cmd_vassiliev(const Options& o) {
  if (o.what == "order") {
    auto kind = parse_invariant_kind(o.inv);
    auto r = order_check(kind, o.order, o.samples, o.seed, o.max_classical);
    return {{"invariant", to_string(kind)}, {"order", r.order},          {"samples", r.samples},
            {"nonzero", r.nonzero},        {"all_zero", r.all_zero()}, {"counterexamples", r.counterexamples}};
  }
  if (o.file.empty()) raise(errc::kPrecondition, "a code file is required");
  KnotoidCode c = load_code(o.file);
  if (o.what == "fingerprint") {
    auto fp = fingerprint(c);
    return {{"fingerprint", fp.hex()}, {"components", fp.component_count}};
  }
  if (o.what == "derivative") {
    auto kind = parse_invariant_kind(o.inv);
    return with_invariant(to_string(kind), derivative(kind, c));
  }
  auto kind = parse_invariant_kind(o.what);
  return with_invariant(to_string(kind), evaluate(kind, c));
}

json cmd_sbm(const Options& o) {
  std::size_t want = o.what == "compare" ? 2 : 1;
  if (o.files.size() != want)
    raise(errc::kPrecondition, "sbm " + o.what + " takes " + std::to_string(want) + " file(s)");
  if (o.what == "build") return detail::sbm(build_sbm(load_code(o.files[0])));
  SBM m = load_sbm(o.files[0]);
  if (o.what == "primitive") {
    auto r = reduce_to_primitive(m);
    return {{"primitive", is_primitive(m)}, {"reduced", detail::sbm(r.result)}, {"steps", r.steps}};
  }
  if (o.what == "classify") return detail::classification(classify(m));
  if (o.what == "certificate") return {{"certificate", homology_certificate(m)}};
  SBM m2 = load_sbm(o.files[1]);
  auto h = homologous(m, m2);
  return {{"homologous", h.homologous}, {"certificate", h.certificate}, {"isomorphic", isomorphic(m, m2)}};
}

json cmd_walk(const Options& o) {
  if (o.steps < 0) raise(errc::kOutOfRange, "steps must be >= 0");
  WalkOptions w;
  w.max_chords = o.max_chords;
  w.flavor = o.flavor == "flat" ? Flavor::Flat : o.flavor == "classical" ? Flavor::Classical : Flavor::Auto;
  KnotoidCode c = random_walk(load_code(o.file), o.steps, o.seed, w);
  return {{"code", serialize(c)}, {"steps", o.steps}, {"seed", o.seed}};
}

// Every key of expected must be present in actual with a matching value. Arrays match
// element-wise and must have equal length.
bool contains(const json& actual, const json& expected) {
  if (expected.is_object()) {
    if (!actual.is_object()) return false;
    for (const auto& [k, v] : expected.items())
      if (!actual.contains(k) || !contains(actual.at(k), v)) return false;
    return true;
  }
  if (expected.is_array()) {
    if (!actual.is_array() || actual.size() != expected.size()) return false;
    for (std::size_t i = 0; i < expected.size(); ++i)
      if (!contains(actual[i], expected[i])) return false;
    return true;
  }
  return actual == expected;
}

json cmd_corpus(const Options& o, int& exit_code) {
  fs::path dir(o.file);
  if (!fs::is_directory(dir)) raise("IOError", "not a directory: " + o.file);
  std::vector<fs::path> cases;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".json") cases.push_back(e.path());
  std::sort(cases.begin(), cases.end());
  json failed = json::array();
  int passed = 0;
  for (const auto& path : cases) {
    json spec;
    std::string name = path.filename().string();
    try {
      spec = json::parse(read_file(path.string()));
      name = spec.value("name", name);
      std::vector<std::string> args;
      for (const auto& a : spec.at("args")) {
        std::string s = a.get<std::string>();
        auto ext = fs::path(s).extension();
        if ((ext == ".gauss" || ext == ".json") && fs::path(s).is_relative()) s = (dir / s).lexically_normal().string();
        args.push_back(s);
      }
      std::ostringstream out, err;
      int code = run(args, out, err);
      int want_code = spec.value("expect_exit", 0);
      json actual = json::parse(out.str());
      if (code != want_code) {
        failed.push_back({{"name", name}, {"reason", "exit " + std::to_string(code)}, {"output", actual}});
      } else if (spec.contains("expect") && !contains(actual, spec.at("expect"))) {
        failed.push_back({{"name", name}, {"reason", "output mismatch"}, {"output", actual}});
      } else {
        ++passed;
      }
    } catch (const std::exception& e) {
      failed.push_back({{"name", name}, {"reason", e.what()}});
    }
  }
  exit_code = failed.empty() ? kOk : kDomainError;
  return {{"cases", cases.size()}, {"passed", passed}, {"failed", failed}};
}

void emit(std::ostream& out, const json& j, bool human) {
  if (human) out << render_human(j.dump());
  else out << j.dump(2) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Invariants of virtual knotoids over Gauss codes"};
  app.name("knotoid");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--human", o.human, "Render tables instead of JSON");

  auto* validate = app.add_subcommand("validate", "Parse and validate a Gauss code");
  validate->add_option("file", o.file, "Gauss code file")->required();

  auto* invariant = app.add_subcommand("invariant", "Polynomial invariants and crossing report");
  invariant->add_option("what", o.what)->required()->check(CLI::IsMember({"affine", "flat-affine", "report", "intersection"}));
  invariant->add_option("file", o.file, "Gauss code file")->required();
  invariant->add_option("--ell1", o.ell1, "Component taken as ell1 for intersection")->check(CLI::Range(0, 1));

  auto* smooth = app.add_subcommand("smooth", "0- or 1-smoothing at a chord");
  smooth->add_option("what", o.what)->required()->check(CLI::IsMember({"zero", "one"}));
  smooth->add_option("--at", o.at, "Chord id")->required();
  smooth->add_option("file", o.file, "Gauss code file")->required();

  auto* gluecmd = app.add_subcommand("glue", "Glue a classical chord into the preferred singular chord");
  gluecmd->add_option("--at", o.at, "Chord id")->required();
  gluecmd->add_option("file", o.file, "Gauss code file")->required();

  auto* vass = app.add_subcommand("vassiliev", "F, L, G, fingerprints, derivatives and order checks");
  vass->add_option("what", o.what)->required()->check(CLI::IsMember({"f", "l", "g", "derivative", "fingerprint", "order"}));
  vass->add_option("file", o.file, "Gauss code file");
  vass->add_option("--inv", o.inv, "Invariant for derivative/order: F, L, G or P");
  vass->add_option("--order", o.order, "Order to check")->check(CLI::NonNegativeNumber);
  vass->add_option("--samples", o.samples, "Random codes for order checks")->check(CLI::NonNegativeNumber);
  vass->add_option("--seed", o.seed, "Seed for order checks");
  vass->add_option("--max-classical", o.max_classical, "Largest number of classical chords in order checks");

  auto* sbmcmd = app.add_subcommand("sbm", "Singular based matrices");
  sbmcmd->add_option("what", o.what)->required()->check(CLI::IsMember({"build", "primitive", "compare", "classify", "certificate"}));
  sbmcmd->add_option("files", o.files, "Gauss code or SBM JSON files")->required();

  auto* walk = app.add_subcommand("walk", "Seeded random walk of moves");
  walk->add_option("--steps", o.steps, "Number of moves")->required();
  walk->add_option("--seed", o.seed, "Seed")->required();
  walk->add_option("--max-chords", o.max_chords, "Chord cap for insertions (0 = none)");
  walk->add_option("--flavor", o.flavor, "Insertion flavor")->check(CLI::IsMember({"auto", "classical", "flat"}));
  walk->add_option("file", o.file, "Gauss code file")->required();

  auto* simp = app.add_subcommand("simplify", "Greedy R1/R2 deletion");
  simp->add_option("file", o.file, "Gauss code file")->required();

  auto* corpus = app.add_subcommand("corpus", "Run a fixture corpus directory");
  corpus->add_option("dir", o.file, "Corpus directory")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    out << json{{"error", "UsageError"}, {"detail", e.what()}}.dump(2) << '\n';
    return kUsageError;
  }

  try {
    json result;
    int code = kOk;
    if (validate->parsed()) result = cmd_validate(o);
    else if (invariant->parsed()) result = cmd_invariant(o);
    else if (smooth->parsed()) result = cmd_smooth(o);
    else if (gluecmd->parsed()) result = {{"code", serialize(glue(load_code(o.file), o.at))}};
    else if (vass->parsed()) result = cmd_vassiliev(o);
    else if (sbmcmd->parsed()) result = cmd_sbm(o);
    else if (walk->parsed()) result = cmd_walk(o);
    else if (simp->parsed()) result = {{"code", serialize(simplify(load_code(o.file)))}};
    else if (corpus->parsed()) result = cmd_corpus(o, code);
    emit(out, result, o.human);
    return code;
  } catch (const Error& e) {
    out << json{{"error", e.kind()}, {"detail", e.detail()}}.dump(2) << '\n';
    return kDomainError;
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    out << json{{"error", "InternalError"}, {"detail", e.what()}}.dump(2) << '\n';
    return kDomainError;
  }
}

}  // namespace knotoid::cli
