#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "mvfix/gauge.hpp"
#include "mvfix/multimap.hpp"
#include "mvfix/space.hpp"

namespace mvfix {

struct Scenario {
  Space space;
  std::optional<Gauge> gauge;
  MultiMap map;
  double epsilon;
  double lambda = 0.5;
  std::uint64_t seed = 42;
  std::size_t samples = 10000;
  double tol = 1e-9;
};

/// Parses and validates a JSON scenario document.
///
/// Throws ParseError for malformed JSON, SchemaError for missing, extra or
/// mistyped keys (the message carries the key path), and ValidationError for
/// semantic problems (invalid gauge, dimension mismatch, bad metric table).
Scenario parseScenario(std::string_view text);

Scenario loadScenario(const std::string& path);

}  // namespace mvfix
