#include "knotoid/sbm.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <optional>
#include <set>

#include "knotoid/errors.hpp"

namespace knotoid {

SBM::SBM() : labels_{"s", "d"}, b_(2, std::vector<int>(2, 0)) {}

SBM::SBM(std::vector<std::string> labels, Matrix b, const std::string& s, const std::string& d) {
  std::size_t n = labels.size();
  if (b.size() != n) raise(errc::kValidity, "matrix size does not match element count");
  for (const auto& row : b)
    if (row.size() != n) raise(errc::kValidity, "matrix is not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (b[i][j] != -b[j][i]) raise(errc::kValidity, "matrix is not skew-symmetric");
  std::set<std::string> unique(labels.begin(), labels.end());
  if (unique.size() != n) raise(errc::kValidity, "duplicate element labels");
  if (s == d) raise(errc::kValidity, "s and d must differ");
  auto is = std::find(labels.begin(), labels.end(), s);
  auto id = std::find(labels.begin(), labels.end(), d);
  if (is == labels.end() || id == labels.end()) raise(errc::kValidity, "s and d must be elements");
  std::vector<int> order{static_cast<int>(is - labels.begin())};
  for (std::size_t i = 0; i < n; ++i)
    if (labels[i] != s && labels[i] != d) order.push_back(static_cast<int>(i));
  order.push_back(static_cast<int>(id - labels.begin()));
  labels_.resize(n);
  b_.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    labels_[i] = labels[order[i]];
    for (std::size_t j = 0; j < n; ++j) b_[i][j] = b[order[i]][order[j]];
  }
}

int SBM::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) raise(errc::kNotFound, "no element " + label);
  return static_cast<int>(it - labels_.begin());
}

SBM::Matrix SBM::in_order(const std::vector<std::string>& order) const {
  std::vector<int> idx;
  for (const auto& l : order) idx.push_back(index_of(l));
  Matrix out(idx.size(), std::vector<int>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) out[i][j] = b_[idx[i]][idx[j]];
  return out;
}

namespace {

using Matrix = SBM::Matrix;

SBM make(std::vector<std::string> labels, Matrix b) {
  std::string s = labels.front();
  std::string d = labels.back();
  return SBM(std::move(labels), std::move(b), s, d);
}

// Open interval from x to y along the string, wrapping through the ends when x > y.
bool in_arc(int x, int y, int p) { return x < y ? (x < p && p < y) : (p > x || p < y); }

struct ArrowEnds {
  int chord;
  int tail;
  int head;
};

int rule1(const std::vector<ArrowEnds>& arrows, const ArrowEnds& e) {
  int total = 0;
  for (const auto& c : arrows) {
    if (c.chord == e.chord) continue;
    bool t = in_arc(e.tail, e.head, c.tail);
    bool h = in_arc(e.tail, e.head, c.head);
    if (t != h) total += t ? 1 : -1;
  }
  return total;
}

int epsilon(const ArrowEnds& e, const ArrowEnds& f) {
  std::vector<std::pair<int, char>> pts{{e.tail, 'a'}, {e.head, 'b'}, {f.tail, 'c'}, {f.head, 'd'}};
  std::sort(pts.begin(), pts.end());
  std::string seq;
  for (const auto& p : pts) seq += p.second;
  std::rotate(seq.begin(), seq.begin() + seq.find('a'), seq.end());
  if (seq == "acbd") return 1;
  if (seq == "adbc") return -1;
  return 0;
}

int rule2(const std::vector<ArrowEnds>& arrows, const ArrowEnds& e, const ArrowEnds& f) {
  int total = 0;
  for (const auto& g : arrows) {
    if (g.chord == e.chord || g.chord == f.chord) continue;
    if (in_arc(e.tail, e.head, g.tail) && in_arc(f.tail, f.head, g.head)) ++total;
    if (in_arc(f.tail, f.head, g.tail) && in_arc(e.tail, e.head, g.head)) --total;
  }
  return total + epsilon(e, f);
}

bool row_zero(const Matrix& b, int g) {
  return std::all_of(b[g].begin(), b[g].end(), [](int v) { return v == 0; });
}

bool rows_sum_to_s(const Matrix& b, int g, int h) {
  for (std::size_t k = 0; k < b.size(); ++k)
    if (b[g][k] + b[h][k] != b[0][k]) return false;
  return true;
}

std::string fresh_label(const SBM& m, std::string wanted) {
  if (!wanted.empty()) return wanted;
  for (int k = 1;; ++k) {
    std::string l = "g" + std::to_string(k);
    if (std::find(m.labels().begin(), m.labels().end(), l) == m.labels().end()) return l;
  }
}

// Insert a new element just before d with the given row (values against old elements).
SBM insert_before_d(const SBM& m, const std::string& label, const std::vector<int>& row) {
  int n = m.size();
  auto labels = m.labels();
  labels.insert(labels.end() - 1, label);
  Matrix b(n + 1, std::vector<int>(n + 1, 0));
  auto old = [&](int i) { return i < n - 1 ? i : i - 1; };  // new index -> old index, skipping n-1
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      if (i == n - 1 && j == n - 1) continue;
      if (i == n - 1) b[i][j] = row[old(j)];
      else if (j == n - 1) b[i][j] = -row[old(i)];
      else b[i][j] = m.at(old(i), old(j));
    }
  return make(std::move(labels), std::move(b));
}

SBM remove(const SBM& m, std::vector<int> idx) {
  std::sort(idx.begin(), idx.end());
  std::vector<int> keep;
  for (int i = 0; i < m.size(); ++i)
    if (!std::binary_search(idx.begin(), idx.end(), i)) keep.push_back(i);
  std::vector<std::string> labels;
  Matrix b(keep.size(), std::vector<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    labels.push_back(m.labels()[keep[i]]);
    for (std::size_t j = 0; j < keep.size(); ++j) b[i][j] = m.at(keep[i], keep[j]);
  }
  return make(std::move(labels), std::move(b));
}

void require_unmarked(const SBM& m, int g) {
  if (g <= 0 || g >= m.size() - 1) raise(errc::kNotApplicable, "element index must be unmarked");
}

std::vector<int> n_candidates(const SBM& m) {
  std::vector<int> out;
  for (int g = 1; g < m.size() - 1; ++g)
    if (rows_sum_to_s(m.matrix(), g, m.d())) out.push_back(g);
  return out;
}

struct Step {
  SBM result;
  std::string name;
};

std::optional<Step> reduce_once(const SBM& m) {
  const Matrix& b = m.matrix();
  int n = m.size();
  for (int g = 1; g < n - 1; ++g) {
    if (row_zero(b, g)) return Step{remove(m, {g}), "M1^-1(" + m.labels()[g] + ")"};
    if (b[g] == b[0]) return Step{remove(m, {g}), "M2^-1(" + m.labels()[g] + ")"};
  }
  for (int g = 1; g < n - 1; ++g)
    for (int h = g + 1; h < n - 1; ++h)
      if (rows_sum_to_s(b, g, h))
        return Step{remove(m, {g, h}), "M3^-1(" + m.labels()[g] + "," + m.labels()[h] + ")"};
  return std::nullopt;
}

struct Marked {
  SBM m;
  std::vector<std::string> steps;
};

// All markings reachable by singularity switches, starting with m itself.
std::vector<Marked> n_closure(const SBM& m) {
  std::vector<Marked> out{{m, {}}};
  std::set<std::string> seen{m.labels().back()};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (int g : n_candidates(out[i].m)) {
      SBM y = switch_n(out[i].m, g);
      if (!seen.insert(y.labels().back()).second) continue;
      auto steps = out[i].steps;
      steps.push_back("N(" + y.labels().back() + ")");
      out.push_back({std::move(y), std::move(steps)});
    }
  }
  return out;
}

long double factorial(std::size_t k) {
  long double f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= static_cast<long double>(i);
  return f;
}

// Isomorphism-invariant colouring of unmarked elements by iterated row refinement.
std::vector<int> refine_colors(const Matrix& b) {
  int n = static_cast<int>(b.size());
  std::vector<int> color(n, 0);
  color[0] = -2;
  color[n - 1] = -1;
  auto compress = [&](std::vector<std::vector<int>>& sig) {
    std::vector<std::vector<int>> sorted;
    for (int g = 1; g < n - 1; ++g) sorted.push_back(sig[g]);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int g = 1; g < n - 1; ++g)
      color[g] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[g]) - sorted.begin());
    return sorted.size();
  };
  std::vector<std::vector<int>> sig(n);
  for (int g = 1; g < n - 1; ++g) {
    std::vector<int> row(b[g].begin(), b[g].end());
    std::sort(row.begin(), row.end());
    sig[g] = {b[0][g], b[g][n - 1]};
    sig[g].insert(sig[g].end(), row.begin(), row.end());
  }
  std::size_t classes = compress(sig);
  while (true) {
    for (int g = 1; g < n - 1; ++g) {
      std::vector<std::pair<int, int>> nb;
      for (int h = 0; h < n; ++h)
        if (h != g) nb.emplace_back(color[h], b[g][h]);
      std::sort(nb.begin(), nb.end());
      sig[g] = {color[g]};
      for (const auto& [c, v] : nb) {
        sig[g].push_back(c);
        sig[g].push_back(v);
      }
    }
    std::size_t next = compress(sig);
    if (next == classes) break;
    classes = next;
  }
  return color;
}

}  // namespace

SBM build_sbm(const KnotoidCode& alpha) {
  if (alpha.component_count() != 1)
    raise(errc::kComponentCount, "SBM needs a single open component");
  if (alpha.has_classical()) raise(errc::kNotFlatSingular, "SBM needs a flat singular code");
  int d = alpha.preferred_chord();
  if (d == 0) raise(errc::kNoPreferred, "no preferred singular chord");
  std::map<int, ArrowEnds> ends;
  const Component& word = alpha.open();
  for (int i = 0; i < static_cast<int>(word.size()); ++i) {
    auto& e = ends[word[i].chord];
    e.chord = word[i].chord;
    if (is_tail(word[i].role)) e.tail = i;
    else e.head = i;
  }
  std::vector<ArrowEnds> arrows;
  for (const auto& [c, e] : ends) arrows.push_back(e);

  std::vector<const ArrowEnds*> order{nullptr};
  std::vector<std::string> labels{"s"};
  for (const auto& a : arrows)
    if (a.chord != d) {
      order.push_back(&a);
      labels.push_back(std::to_string(a.chord));
    }
  const ArrowEnds& pref = *std::find_if(arrows.begin(), arrows.end(), [&](const ArrowEnds& a) { return a.chord == d; });
  order.push_back(&pref);
  labels.push_back(std::to_string(d));

  int n = static_cast<int>(order.size());
  Matrix b(n, std::vector<int>(n, 0));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      if (x == 0) b[x][y] = -rule1(arrows, *order[y]);
      else if (y == 0) b[x][y] = rule1(arrows, *order[x]);
      else b[x][y] = rule2(arrows, *order[x], *order[y]);
    }
  return make(std::move(labels), std::move(b));
}

std::string to_string(ElementKind k) {
  switch (k) {
    case ElementKind::None: return "None";
    case ElementKind::Annihilating: return "Annihilating";
    case ElementKind::Core: return "Core";
    case ElementKind::Complementary: return "PartOfComplementaryPair";
  }
  return "?";
}

std::string to_string(MarkerKind k) {
  switch (k) {
    case MarkerKind::None: return "None";
    case MarkerKind::AnnihilatingLike: return "AnnihilatingLike";
    case MarkerKind::CoreLike: return "CoreLike";
  }
  return "?";
}

Classification classify(const SBM& m) {
  const Matrix& b = m.matrix();
  int n = m.size();
  Classification out;
  for (int g = 1; g < n - 1; ++g) {
    ElementClass c;
    c.label = m.labels()[g];
    if (row_zero(b, g)) c.kind = ElementKind::Annihilating;
    else if (b[g] == b[0]) c.kind = ElementKind::Core;
    for (int h = 1; h < n - 1; ++h)
      if (h != g && rows_sum_to_s(b, g, h)) c.partners.push_back(m.labels()[h]);
    if (c.kind == ElementKind::None && !c.partners.empty()) c.kind = ElementKind::Complementary;
    out.elements.push_back(std::move(c));
  }
  if (row_zero(b, n - 1)) out.d = MarkerKind::AnnihilatingLike;
  else if (b[n - 1] == b[0]) out.d = MarkerKind::CoreLike;
  return out;
}

SBM extend_m1(const SBM& m, std::string label) {
  return insert_before_d(m, fresh_label(m, std::move(label)), std::vector<int>(m.size(), 0));
}

SBM extend_m2(const SBM& m, std::string label) {
  return insert_before_d(m, fresh_label(m, std::move(label)), m.matrix()[0]);
}

SBM extend_m3(const SBM& m, const std::vector<int>& row, std::string l1, std::string l2) {
  int n = m.size();
  if (static_cast<int>(row.size()) != n) raise(errc::kNotApplicable, "M3 row length must equal the element count");
  std::string a = fresh_label(m, std::move(l1));
  SBM first = insert_before_d(m, a, row);
  std::string c = l2.empty() ? fresh_label(first, "") : l2;
  // b(g2,h) = b(s,h) - b(g1,h) on old elements; b(g2,g1) = b(s,g1).
  std::vector<int> row2(n + 1);
  for (int h = 0; h < n; ++h) {
    int idx = h < n - 1 ? h : h + 1;
    row2[idx] = m.at(0, h) - row[h];
  }
  row2[n - 1] = first.at(0, n - 1);
  return insert_before_d(first, c, row2);
}

SBM switch_n(const SBM& m, int g) {
  require_unmarked(m, g);
  if (!rows_sum_to_s(m.matrix(), g, m.d()))
    raise(errc::kNotApplicable, "element " + m.labels()[g] + " is not complementary to d");
  auto labels = m.labels();
  return SBM(labels, m.matrix(), labels[0], labels[g]);
}

SBM reduce_m1(const SBM& m, int g) {
  require_unmarked(m, g);
  if (!row_zero(m.matrix(), g)) raise(errc::kNotApplicable, "element is not annihilating");
  return remove(m, {g});
}

SBM reduce_m2(const SBM& m, int g) {
  require_unmarked(m, g);
  if (m.matrix()[g] != m.matrix()[0]) raise(errc::kNotApplicable, "element is not core");
  return remove(m, {g});
}

SBM reduce_m3(const SBM& m, int g1, int g2) {
  require_unmarked(m, g1);
  require_unmarked(m, g2);
  if (g1 == g2 || !rows_sum_to_s(m.matrix(), g1, g2)) raise(errc::kNotApplicable, "elements are not complementary");
  return remove(m, {g1, g2});
}

bool is_primitive(const SBM& m) {
  for (const auto& x : n_closure(m))
    if (reduce_once(x.m)) return false;
  return true;
}

Reduction reduce_to_primitive(const SBM& m) {
  Reduction r{m, {}};
  while (true) {
    bool progressed = false;
    for (const auto& x : n_closure(r.result)) {
      if (auto step = reduce_once(x.m)) {
        r.steps.insert(r.steps.end(), x.steps.begin(), x.steps.end());
        r.steps.push_back(step->name);
        r.result = std::move(step->result);
        progressed = true;
        break;
      }
    }
    if (!progressed) return r;
  }
}

std::size_t perm_limit() {
  if (const char* env = std::getenv("KNOTOID_SBM_PERM_LIMIT")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0) return static_cast<std::size_t>(v);
  }
  return 9;
}

std::string canonical_form(const SBM& m) {
  const Matrix& b = m.matrix();
  int n = m.size();
  auto color = refine_colors(b);
  std::map<int, std::vector<int>> classes;
  for (int g = 1; g < n - 1; ++g) classes[color[g]].push_back(g);
  long double perms = 1;
  for (const auto& [c, members] : classes) perms *= factorial(members.size());
  if (perms > factorial(perm_limit()))
    raise(errc::kSizeLimit, "isomorphism search over " + std::to_string(n - 2) + " elements exceeds the permutation bound");

  std::vector<std::vector<int>> groups;
  for (auto& [c, members] : classes) groups.push_back(members);
  std::vector<int> best;
  std::vector<int> order(n);
  std::vector<int> key(n * n);
  while (true) {
    int k = 0;
    order[k++] = 0;
    for (const auto& gp : groups)
      for (int g : gp) order[k++] = g;
    order[k] = n - 1;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) key[i * n + j] = b[order[i]][order[j]];
    if (best.empty() || key < best) best = key;
    // Odometer over per-class permutations.
    std::size_t gi = 0;
    for (; gi < groups.size(); ++gi)
      if (std::next_permutation(groups[gi].begin(), groups[gi].end())) break;
    if (gi == groups.size()) break;
  }
  std::string out = std::to_string(n) + ":";
  for (std::size_t i = 0; i < best.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(best[i]);
  }
  return out;
}

bool isomorphic(const SBM& a, const SBM& b) {
  return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

std::string homology_certificate(const SBM& m) {
  SBM p = reduce_to_primitive(m).result;
  std::map<std::string, SBM> seen;
  seen.emplace(canonical_form(p), p);
  std::deque<SBM> todo{p};
  while (!todo.empty()) {
    SBM x = todo.front();
    todo.pop_front();
    std::vector<SBM> outs;
    for (int g : n_candidates(x)) outs.push_back(switch_n(x, g));
    for (const SBM& e : {extend_m1(x), extend_m2(x)})
      for (int g : n_candidates(e)) outs.push_back(reduce_to_primitive(switch_n(e, g)).result);
    for (auto& y : outs) {
      if (!is_primitive(y)) continue;
      auto key = canonical_form(y);
      if (seen.emplace(key, y).second) todo.push_back(y);
    }
  }
  return seen.begin()->first;
}

HomologyResult homologous(const SBM& a, const SBM& b) {
  SBM pa = reduce_to_primitive(a).result;
  SBM pb = reduce_to_primitive(b).result;
  std::string target = canonical_form(pb);
  auto hits = [&](const SBM& x) { return x.size() == pb.size() && canonical_form(x) == target; };
  if (hits(pa)) return {true, "isomorphism"};
  for (int g : n_candidates(pa))
    if (hits(switch_n(pa, g))) return {true, "N"};
  SBM e2 = extend_m2(pa);
  for (int g : n_candidates(e2)) {
    SBM y = switch_n(e2, g);
    for (int h = 1; h < y.size() - 1; ++h)
      if (row_zero(y.matrix(), h) && hits(remove(y, {h}))) return {true, "M1^-1.N.M2"};
  }
  SBM e1 = extend_m1(pa);
  for (int g : n_candidates(e1)) {
    SBM y = switch_n(e1, g);
    for (int h = 1; h < y.size() - 1; ++h)
      if (y.matrix()[h] == y.matrix()[0] && hits(remove(y, {h}))) return {true, "M2^-1.N.M1"};
  }
  if (homology_certificate(pa) == homology_certificate(pb)) return {true, "chain"};
  return {false, "none"};
}

}  // namespace knotoid
