#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "knotoid/code.hpp"
#include "knotoid/laurent.hpp"

namespace knotoid {

// Sound stand-in for a flat class: move-equivalent diagrams (in either orientation) get
// equal fingerprints. Different fingerprints certify different classes.
struct Fingerprint {
  int component_count = 1;
  std::string payload;

  auto operator<=>(const Fingerprint&) const = default;
  std::string hex() const;
};

// 1 component: min over orientations of (Q, cubic Gauss sum, singular kink certificate).
// 2 components: |i| with the open component's fingerprint once the closed one is removed.
// Flat singular: min over orientations of the SBM homology certificate.
// Classical chords are flattened first.
Fingerprint fingerprint(const KnotoidCode& code);

class FormalSum {
 public:
  using Coeff = std::int64_t;

  void add(const Fingerprint& fp, Coeff c);
  Coeff coeff(const Fingerprint& fp) const;
  const std::map<Fingerprint, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  FormalSum& operator+=(const FormalSum& o);
  FormalSum& operator-=(const FormalSum& o);
  FormalSum& operator*=(Coeff k);
  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
  friend FormalSum operator*(FormalSum a, Coeff k) { return a *= k; }
  FormalSum operator-() const { return *this * -1; }
  bool operator==(const FormalSum&) const = default;

 private:
  std::map<Fingerprint, Coeff> terms_;
};

FormalSum invariant_F(const KnotoidCode& code);
FormalSum invariant_L(const KnotoidCode& code);
FormalSum invariant_G(const KnotoidCode& code);

enum class InvariantKind { F, L, G, P };
std::string to_string(InvariantKind k);
InvariantKind parse_invariant_kind(const std::string& name);

struct InvariantValue {
  std::variant<FormalSum, LaurentPoly> value;

  bool is_zero() const;
  InvariantValue& operator+=(const InvariantValue& o);
  InvariantValue& operator*=(std::int64_t k);
  bool operator==(const InvariantValue&) const = default;
};

InvariantValue evaluate(InvariantKind kind, const KnotoidCode& code);

// Alternating sum over all resolutions of the singular chords.
InvariantValue derivative(InvariantKind kind, const KnotoidCode& code);

// Single open component with the given numbers of classical and unstarred singular chords,
// uniformly shuffled.
KnotoidCode random_singular_code(int classical, int singular, std::mt19937_64& rng);

struct OrderReport {
  InvariantKind kind = InvariantKind::F;
  int order = 0;
  int samples = 0;
  int nonzero = 0;
  std::vector<std::string> counterexamples;

  bool all_zero() const { return nonzero == 0; }
};

// Evaluates the (order+1)-st derivative on random codes with order+1 singular chords.
OrderReport order_check(InvariantKind kind, int order, int samples, std::uint64_t seed, int max_classical = 4);

}  // namespace knotoid
