#ifndef SUPERMALCEV_PARITY_HPP
#define SUPERMALCEV_PARITY_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace supermalcev {

/// Element of Z/2: 0 = even, 1 = odd.
class Parity {
 public:
  constexpr Parity() = default;
  constexpr explicit Parity(int v) : value_(static_cast<std::uint8_t>(v & 1)) {}

  static constexpr Parity even() { return Parity(0); }
  static constexpr Parity odd() { return Parity(1); }

  constexpr int value() const { return value_; }
  constexpr bool is_odd() const { return value_ != 0; }

  friend constexpr Parity operator+(Parity a, Parity b) { return Parity(a.value_ ^ b.value_); }
  friend constexpr Parity operator*(Parity a, Parity b) { return Parity(a.value_ & b.value_); }
  friend constexpr bool operator==(Parity, Parity) = default;

 private:
  std::uint8_t value_ = 0;
};

/// Multiset of slot pairs; each pair (a, b) contributes parity(a)*parity(b)
/// to a sign exponent. x(y+z) is {(x,y), (x,z)}.
struct PairSet {
  std::vector<std::pair<int, int>> pairs;

  friend bool operator==(const PairSet&, const PairSet&) = default;

  PairSet& merge(const PairSet& other) {
    pairs.insert(pairs.end(), other.pairs.begin(), other.pairs.end());
    return *this;
  }
};

/// Tally of every Koszul sign evaluated on this thread.
struct SignStats {
  std::uint64_t plus = 0;
  std::uint64_t minus = 0;
  void reset() { plus = minus = 0; }
};

inline SignStats& sign_stats() {
  thread_local SignStats stats;
  return stats;
}

/// (-1)^(sum over pairs of parity(a)*parity(b)).
inline int koszul_sign(const PairSet& ps, std::span<const Parity> parities) {
  int exponent = 0;
  for (const auto& [a, b] : ps.pairs) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= parities.size() ||
        static_cast<std::size_t>(b) >= parities.size())
      throw InputError("koszul_sign: pair references an unassigned slot");
    exponent ^= (parities[a] * parities[b]).value();
  }
  auto& stats = sign_stats();
  if (exponent == 0) {
    ++stats.plus;
    return 1;
  }
  ++stats.minus;
  return -1;
}

/// Parses a sign exponent written as a sum of two-factor products, each factor
/// a slot letter or a parenthesised sum of letters: "x(y+z)", "(y+z)(x+w)",
/// "yz+w(y+z)". Letters are resolved against `slots` ("wxyz" -> w=0, x=1, ...).
inline PairSet parse_exponent(std::string_view text, std::string_view slots) {
  PairSet out;
  std::size_t pos = 0;
  auto fail = [&](const char* what) {
    throw InputError(std::string("sign exponent \"") + std::string(text) + "\": " + what);
  };
  auto skip_ws = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  auto letter = [&]() -> int {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end");
    const auto idx = slots.find(text[pos]);
    if (idx == std::string_view::npos) fail("unknown slot letter");
    ++pos;
    return static_cast<int>(idx);
  };
  auto factor = [&]() -> std::vector<int> {
    skip_ws();
    if (pos < text.size() && text[pos] == '(') {
      ++pos;
      std::vector<int> sum{letter()};
      skip_ws();
      while (pos < text.size() && text[pos] == '+') {
        ++pos;
        sum.push_back(letter());
        skip_ws();
      }
      if (pos >= text.size() || text[pos] != ')') fail("missing ')'");
      ++pos;
      return sum;
    }
    return {letter()};
  };
  skip_ws();
  if (pos == text.size()) return out;
  while (true) {
    const auto lhs = factor();
    const auto rhs = factor();
    for (int a : lhs)
      for (int b : rhs) out.pairs.emplace_back(a, b);
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '+') fail("expected '+'");
    ++pos;
  }
  return out;
}

}  // namespace supermalcev

#endif  // SUPERMALCEV_PARITY_HPP
