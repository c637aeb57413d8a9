#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace entangle {

// Vertex sets and matroid element sets are bitmasks over dense ids 0..63.
using Vs = std::uint64_t;

// Raised on malformed user input (bad ids, non-bijective relabeling, bad JSON).
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when an enumeration would exceed a configured resource cap.
struct cap_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised on API misuse (for example corner extraction on a nested pair).
struct contract_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a proven statement fails on concrete data; carries a witness in
// the message. Any throw of this type means an implementation bug or a
// genuine counterexample and must surface loudly.
struct theorem_violation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Resource caps for the exhaustive engines. Defaults are desk scale; the CLI
// and the ENTANGLE_* environment variables can override them.
struct Caps {
  int max_vertices = 12;         // tangle enumeration and oracle graph size
  int oracle_max_proper = 18;    // 2^m subset oracles
  int max_tangle_order = 4;      // tangle order bound
  long long max_separations = 2'000'000;  // separation enumeration output size
};

// Process-wide caps, initialized once from the environment.
Caps& caps();

inline constexpr Vs bit(int i) { return Vs{1} << i; }

inline constexpr Vs full_mask(int n) {
  return n >= 64 ? ~Vs{0} : (Vs{1} << n) - 1;
}

inline int popcount(Vs s) { return std::popcount(s); }

inline int lowest_bit(Vs s) { return std::countr_zero(s); }

inline bool contains(Vs s, int i) { return (s >> i) & 1; }

// Compares two id sets as ascending id lists in lexicographic order.
// With d the lowest differing bit, the set not containing d wins exactly
// when it has no member above d (prefix rule).
inline bool lex_less(Vs x, Vs y) {
  if (x == y) return false;
  int d = lowest_bit(x ^ y);
  if (contains(y, d)) return (x >> d) == 0;
  return (y >> d) != 0;
}

std::vector<int> mask_to_ids(Vs s);
Vs ids_to_mask(const std::vector<int>& ids, int n);

// Renders a set as "{0, 1, 4}" for error messages and witnesses.
std::string mask_to_string(Vs s);

}  // namespace entangle
