// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "knotoid/invariants.hpp"
#include "knotoid/sbm.hpp"
#include "knotoid/surgery.hpp"
#include "knotoid/vassiliev.hpp"
#include "properties.hpp"

using namespace knotoid;
using namespace knotoid::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream why;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) why << "; ";
      why << what;
      ok = false;
    }
  }
};

FormalSum two_term(const Fingerprint& a, const Fingerprint& b) {
  FormalSum s;
  s.add(a, 2);
  s.add(b, -2);
  return s;
}

const Fingerprint& trivial() {
  static const Fingerprint fp = fingerprint(parse("E"));
  return fp;
}

void label_chain(Outcome& o) {
  KnotoidCode d = fixture("fig23");
  std::vector<std::pair<int, int>> want{{1, -1}, {2, 2}, {3, -1}};
  o.expect(flat_weights(d) == want, "W+ of the flat fixture");
  o.expect(flat_nth_writhe(d, 1) == -2 && flat_nth_writhe(d, 2) == 1, "f_1, f_2");
  LaurentPoly q = flat_affine_polynomial(d);
  o.expect(q == LaurentPoly::monomial(2, 1) + LaurentPoly::monomial(1, -2), "Q = " + q.to_string());
  KnotoidCode smoothed = flatten(zero_smooth(fixture("fig19"), 1));
  o.expect(fingerprint(smoothed) == fingerprint(d), "smoothing at c1 matches the flat fixture");
  o.expect(fingerprint(d) != trivial(), "fingerprints distinct");
  o.expect(invariant_F(fixture("fig19")) == two_term(trivial(), fingerprint(d)), "F of the four-crossing fixture");
}

void writhe_fixtures(Outcome& o) {
  KnotoidCode d = fixture("fig19");
  std::vector<int> signs;
  for (int c = 1; c <= 4; ++c) signs.push_back(d.sign_of(c));
  o.expect(signs == std::vector<int>{-1, -1, -1, 1}, "signs");
  o.expect(writhe(d) == -2, "w = -2");
  for (const char* name : {"fig30-D1", "fig30-D2", "fig116-D3", "fig116-D4"})
    o.expect(writhe(fixture(name)) == 0, std::string(name) + " writhe");
}

void sbm_construction(Outcome& o) {
  auto check = [&](const char* code, const char* matrix) {
    SBM built = build_sbm(fixture(code));
    bool same = built.size() == static_cast<int>(sbm_fixture_order(matrix).size()) &&
                built.in_order(sbm_fixture_order(matrix)) == sbm_fixture_matrix(matrix);
    o.expect(same, std::string(code) + " vs " + matrix);
  };
  check("fig31-left", "b5");
  check("fig31-right", "b6");
  check("fig117-left", "b3");
  check("fig117-right", "b4");
}

void sbm_decisions(Outcome& o) {
  for (const char* name : {"b3", "b4", "b5", "b6"}) {
    SBM m = sbm_fixture(name);
    o.expect(is_primitive(m), std::string(name) + " primitive");
    o.expect(classify(m).d == MarkerKind::None, std::string(name) + " d marker");
  }
  o.expect(!homologous(sbm_fixture("b5"), sbm_fixture("b6")).homologous, "b5 ~ b6");
  o.expect(!homologous(sbm_fixture("b3"), sbm_fixture("b4")).homologous, "b3 ~ b4");
}

void intersection(Outcome& o) {
  o.expect(intersection_index(make_ordered(fixture("fig146-left"))) == 1, "left view");
  o.expect(intersection_index(make_ordered(fixture("fig146-right"))) == 0, "right view");
  o.expect(one_smooth(fixture("fig24-plus"), 1).code == fixture("fig146-left"), "one-smoothing of D+");
}

void separation(Outcome& o) {
  KnotoidCode k1 = fixture("fig30-D1"), k2 = fixture("fig30-D2");
  KnotoidCode k3 = fixture("fig116-D3"), k4 = fixture("fig116-D4");
  o.expect(invariant_F(k1) == invariant_F(k2), "F(K1) = F(K2)");
  o.expect(invariant_G(k1) != invariant_G(k2), "G(K1) != G(K2)");
  o.expect(invariant_L(k3) == invariant_L(k4), "L(K3) = L(K4)");
  o.expect(invariant_G(k3) != invariant_G(k4), "G(K3) != G(K4)");
}

void derivatives(Outcome& o) {
  KnotoidCode d = fixture("fig24");
  InvariantValue f = derivative(InvariantKind::F, d);
  InvariantValue want_f{two_term(trivial(), fingerprint(flatten(fixture("fig24-plus"))))};
  o.expect(!f.is_zero() && f == want_f, "F'");
  InvariantValue l = derivative(InvariantKind::L, d);
  InvariantValue want_l{two_term(fingerprint(fixture("fig146-left")), fingerprint(fixture("fig146-right")))};
  o.expect(!l.is_zero() && l == want_l, "L'");
}

void properties(Outcome& o) {
  std::uint64_t seed = 20240601;
  for (const auto& p : property_suite()) {
    PropertyResult r = p.run(p.cases, seed++);
    o.expect(r.cases >= 200, std::string(p.name) + " too few cases");
    if (!r.ok())
      o.expect(false, std::string(p.name) + ": " + std::to_string(r.failures) + "/" + std::to_string(r.cases) +
                          " failed, e.g. " + r.example);
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* title;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria{
      {"labeling chain and F of the four-crossing knotoid", label_chain},
      {"crossing signs and writhe fixtures", writhe_fixtures},
      {"singular based matrix construction", sbm_construction},
      {"primitivity, homology and marker decisions", sbm_decisions},
      {"intersection index of the two-component views", intersection},
      {"separation by G", separation},
      {"first derivatives on the singular fixture", derivatives},
      {"seeded property suites", properties},
  };
  int failed = 0;
  auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].run(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %zu %s (%.2fs)", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].title, secs);
    if (!o.ok) std::printf(": %s", o.why.str().c_str());
    std::printf("\n");
    failed += o.ok ? 0 : 1;
  }
  double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("total %.2fs, %d failed\n", total, failed);
  return failed == 0 && total < 60.0 ? 0 : 1;
}
