#include "entangle/common.hpp"

#include <cstdlib>
#include <sstream>

namespace entangle {

namespace {

long long env_ll(const char* name, long long fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  char* end = nullptr;
  long long parsed = std::strtoll(v, &end, 10);
  if (end == v || *end != '\0' || parsed < 0) {
    throw input_error(std::string(name) + " must be a nonnegative integer, got \"" + v + "\"");
  }
  return parsed;
}

Caps caps_from_env() {
  Caps c;
  c.max_vertices = static_cast<int>(env_ll("ENTANGLE_MAX_VERTICES", c.max_vertices));
  c.oracle_max_proper = static_cast<int>(env_ll("ENTANGLE_ORACLE_MAX_PROPER", c.oracle_max_proper));
  c.max_tangle_order = static_cast<int>(env_ll("ENTANGLE_MAX_TANGLE_ORDER", c.max_tangle_order));
  c.max_separations = env_ll("ENTANGLE_MAX_SEPARATIONS", c.max_separations);
  return c;
}

}  // namespace

Caps& caps() {
  static Caps c = caps_from_env();
  return c;
}

std::vector<int> mask_to_ids(Vs s) {
  std::vector<int> ids;
  while (s) {
    int i = lowest_bit(s);
    ids.push_back(i);
    s &= s - 1;
  }
  return ids;
}

Vs ids_to_mask(const std::vector<int>& ids, int n) {
  Vs s = 0;
  for (int i : ids) {
    if (i < 0 || i >= n) {
      throw input_error("id " + std::to_string(i) + " out of range [0, " + std::to_string(n) + ")");
    }
    s |= bit(i);
  }
  return s;
}

std::string mask_to_string(Vs s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int i : mask_to_ids(s)) {
    if (!first) out << ", ";
    out << i;
    first = false;
  }
  out << '}';
  return out.str();
}

}  // namespace entangle
