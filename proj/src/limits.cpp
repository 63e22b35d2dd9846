#include "wcpoly/limits.hpp"

#include <cstdlib>
#include <string>

#include "wcpoly/errors.hpp"

namespace wcpoly {

namespace {

void read_cap(const char* name, int& field) {
  const char* value = std::getenv(name);
  if (value == nullptr || *value == '\0') return;
  try {
    std::size_t used = 0;
    const int parsed = std::stoi(value, &used);
    if (used != std::string(value).size() || parsed < 1) throw std::invalid_argument(name);
    field = parsed;
  } catch (const std::exception&) {
    throw DomainError(std::string(name) + " must be a positive integer");
  }
}

}  // namespace

Limits Limits::from_env() {
  Limits limits;
  read_cap("WCPOLY_ALPHA_MAX", limits.alpha_max);
  read_cap("WCPOLY_WELL_COVERED_MAX", limits.well_covered_max);
  read_cap("WCPOLY_INDPOLY_MAX", limits.indpoly_max);
  read_cap("WCPOLY_FOREST_MAX", limits.forest_max);
  read_cap("WCPOLY_CANONICAL_MAX", limits.canonical_max);
  return limits;
}

}  // namespace wcpoly
