#include <algorithm>
#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "knotoid/invariants.hpp"

namespace knotoid {

namespace {

// Signed coefficients of the 2- and 3-arrow subdiagrams, keyed by the subword with
// chords relabelled 1, 2, 3 in order of first occurrence. Unlisted subdiagrams weigh 0.
constexpr std::array<std::pair<std::string_view, int>, 34> kCoefficients{{
    {"A1A2A3B1B2B3", -1},
    {"A1A2A3B1B3B2", -1},
    {"A1A2A3B2B1B3", -1},
    {"A1A2B1A3B2B3", 1},
    {"A1A2B1B2", -1},
    {"A1A2B1B3B2A3", -1},
    {"A1A2B3B1A3B2", 1},
    {"A1A2B3B1B2A3", 1},
    {"A1A2B3B2B1A3", 1},
    {"A1B2A3A2B1B3", 1},
    {"A1B2A3B1A2B3", 1},
    {"A1B2A3B1B3A2", 1},
    {"A1B2B1A3A2B3", -1},
    {"A1B2B1B3A2A3", 1},
    {"A1B2B3A2B1A3", -1},
    {"A1B2B3B1A2A3", -1},
    {"A1B2B3B1A3A2", -1},
    {"B1A2A1A3B2B3", -1},
    {"B1A2A1B3B2A3", 1},
    {"B1A2A3A1B2B3", 1},
    {"B1A2A3A1B3B2", 1},
    {"B1A2A3B2A1B3", 1},
    {"B1A2B3A1A3B2", -1},
    {"B1A2B3A1B2A3", -1},
    {"B1A2B3B2A1A3", -1},
    {"B1B2A1A2", 1},
    {"B1B2A1A3A2B3", 1},
    {"B1B2A1B3A2A3", -1},
    {"B1B2A3A1A2B3", -1},
    {"B1B2A3A1B3A2", -1},
    {"B1B2A3A2A1B3", -1},
    {"B1B2B3A1A2A3", 1},
    {"B1B2B3A1A3A2", 1},
    {"B1B2B3A2A1A3", 1},
}};

int coefficient(std::string_view key) {
  auto it = std::lower_bound(kCoefficients.begin(), kCoefficients.end(), key,
                             [](const auto& e, std::string_view k) { return e.first < k; });
  return it != kCoefficients.end() && it->first == key ? it->second : 0;
}

struct Endpoint {
  int pos;
  int chord;
  bool tail;
};

}  // namespace

int cubic_gauss_sum(const KnotoidCode& code) {
  const Component& word = code.open();
  std::vector<int> ids;
  std::vector<std::array<Endpoint, 2>> ends;
  for (int i = 0; i < static_cast<int>(word.size()); ++i) {
    const Passage& p = word[i];
    bool tail = is_classical(p.role) ? is_tail(flat_role(p.role, p.sign)) : is_tail(p.role);
    auto it = std::find(ids.begin(), ids.end(), p.chord);
    if (it == ids.end()) {
      ids.push_back(p.chord);
      ends.push_back({Endpoint{i, p.chord, tail}, Endpoint{-1, 0, false}});
    } else {
      ends[it - ids.begin()][1] = Endpoint{i, p.chord, tail};
    }
  }
  // Chords living only on closed components do not occur in the open word.
  std::vector<int> usable;
  for (int k = 0; k < static_cast<int>(ids.size()); ++k)
    if (ends[k][1].pos >= 0) usable.push_back(k);

  auto key_of = [&](std::initializer_list<int> sub) {
    std::vector<Endpoint> pts;
    for (int k : sub) {
      pts.push_back(ends[k][0]);
      pts.push_back(ends[k][1]);
    }
    std::sort(pts.begin(), pts.end(), [](const Endpoint& a, const Endpoint& b) { return a.pos < b.pos; });
    std::string key;
    std::vector<int> order;
    for (const auto& e : pts) {
      auto it = std::find(order.begin(), order.end(), e.chord);
      int label = static_cast<int>(it - order.begin()) + 1;
      if (it == order.end()) order.push_back(e.chord);
      key += e.tail ? 'A' : 'B';
      key += static_cast<char>('0' + label);
    }
    return key;
  };

  int total = 0;
  int n = static_cast<int>(usable.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      total += coefficient(key_of({usable[a], usable[b]}));
      for (int c = b + 1; c < n; ++c) total += coefficient(key_of({usable[a], usable[b], usable[c]}));
    }
  return total;
}

}  // namespace knotoid
