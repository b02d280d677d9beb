#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "generators.hpp"
#include "knotoid/sbm.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

using namespace knotoid;
using namespace knotoid::testing;

namespace {

SBM random_sbm(std::mt19937_64& rng, int unmarked) {
  int n = unmarked + 2;
  SBM::Matrix b(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      b[i][j] = uniform(rng, -2, 2);
      b[j][i] = -b[i][j];
    }
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
  return SBM(labels, b, "g0", "g" + std::to_string(n - 1));
}

SBM permuted(const SBM& m, std::mt19937_64& rng) {
  std::vector<std::string> order(m.labels().begin() + 1, m.labels().end() - 1);
  std::shuffle(order.begin(), order.end(), rng);
  order.insert(order.begin(), m.labels().front());
  order.push_back(m.labels().back());
  return SBM(order, m.in_order(order), order.front(), order.back());
}

}  // namespace

TEST_SUITE("sbm") {
  TEST_CASE("construction matches the stored matrices") {
    const std::pair<const char*, const char*> pairs[] = {
        {"fig31-left", "b5"}, {"fig31-right", "b6"}, {"fig117-left", "b3"}, {"fig117-right", "b4"}};
    for (const auto& [code, matrix] : pairs) {
      CAPTURE(code);
      SBM built = build_sbm(fixture(code));
      CHECK(built.in_order(sbm_fixture_order(matrix)) == sbm_fixture_matrix(matrix));
      CHECK(built.matrix() == oracle::sbm_matrix(serialize(fixture(code))));
    }
  }

  TEST_CASE("invalid matrices are rejected") {
    CHECK(error_kind([] { SBM({"s", "d"}, {{0, 1}, {1, 0}}, "s", "d"); }) == errc::kValidity);
    CHECK(error_kind([] { SBM({"s", "d"}, {{0, 1}, {-1, 0}}, "s", "s"); }) == errc::kValidity);
    CHECK(error_kind([] { build_sbm(fixture("fig19")); }) != "");
  }

  TEST_CASE("stored matrices are primitive with plain d markers") {
    for (const char* name : {"b3", "b4", "b5", "b6"}) {
      CAPTURE(name);
      SBM m = sbm_fixture(name);
      CHECK(is_primitive(m));
      CHECK(classify(m).d == MarkerKind::None);
      CHECK(reduce_to_primitive(m).steps.empty());
    }
  }

  TEST_CASE("homology decisions on the stored pairs") {
    CHECK_FALSE(homologous(sbm_fixture("b5"), sbm_fixture("b6")).homologous);
    CHECK_FALSE(homologous(sbm_fixture("b3"), sbm_fixture("b4")).homologous);
    CHECK(homologous(sbm_fixture("b5"), sbm_fixture("b5")).certificate == "isomorphism");
    CHECK(homology_certificate(sbm_fixture("b5")) != homology_certificate(sbm_fixture("b6")));
  }

  TEST_CASE("extensions reduce back") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
      SBM m = random_sbm(rng, uniform(rng, 0, 3));
      SBM e1 = extend_m1(m);
      SBM e2 = extend_m2(m);
      std::vector<int> row(m.size());
      for (auto& x : row) x = uniform(rng, -2, 2);
      SBM e3 = extend_m3(m, row);
      CHECK(!is_primitive(e1));
      CHECK(!is_primitive(e2));
      CHECK(!is_primitive(e3));
      CHECK(isomorphic(reduce_to_primitive(e1).result, reduce_to_primitive(m).result));
      CHECK(homologous(m, e2).homologous);
      CHECK(homologous(e3, m).homologous);
    }
  }

  TEST_CASE("canonical form agrees with brute force") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
      SBM m = random_sbm(rng, uniform(rng, 0, 5));
      SBM p = permuted(m, rng);
      CHECK(canonical_form(m) == canonical_form(p));
      CHECK(isomorphic(m, p));
      CHECK(oracle::brute_canonical(m.matrix()) == oracle::brute_canonical(p.matrix()));
    }
    // Distinct brute-force forms must give distinct canonical forms.
    for (int i = 0; i < 100; ++i) {
      SBM a = random_sbm(rng, 3), b = random_sbm(rng, 3);
      bool same = oracle::brute_canonical(a.matrix()) == oracle::brute_canonical(b.matrix());
      CHECK(same == (canonical_form(a) == canonical_form(b)));
    }
  }

  TEST_CASE("canonical form refuses oversized symmetric classes") {
    int n = 14;
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
    SBM m(labels, SBM::Matrix(n, std::vector<int>(n, 0)), "g0", "g13");
    CHECK(error_kind([&] { canonical_form(m); }) == errc::kSizeLimit);
  }

  TEST_CASE("switch requires the marker condition") {
    SBM m({"s", "a", "d"}, {{0, 1, -1}, {-1, 0, -1}, {1, 1, 0}}, "s", "d");
    SBM n = switch_n(m, m.index_of("a"));
    CHECK(n.labels().back() == "a");
    CHECK(homologous(m, n).homologous);
    SBM bad({"s", "a", "d"}, {{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}, "s", "d");
    CHECK(error_kind([&] { switch_n(bad, 1); }) == errc::kNotApplicable);
  }
}
