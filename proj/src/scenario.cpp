#include "mvfix/scenario.hpp"

#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "mvfix/error.hpp"

namespace mvfix {

namespace {

using nlohmann::json;

[[noreturn]] void schemaError(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::SchemaError, path + ": " + what);
}

[[noreturn]] void validationError(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::ValidationError, path + ": " + what);
}

void requireObject(const json& j, const std::string& path, std::initializer_list<const char*> required,
                   std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) schemaError(path, "expected an object");
  std::set<std::string> allowed;
  for (const char* key : required) {
    allowed.insert(key);
    if (!j.contains(key)) schemaError(path + "." + key, "missing key");
  }
  for (const char* key : optional) allowed.insert(key);
  for (const auto& item : j.items())
    if (!allowed.count(item.key())) schemaError(path + "." + item.key(), "unexpected key");
}

double number(const json& j, const std::string& path) {
  if (!j.is_number()) schemaError(path, "expected a number");
  return j.get<double>();
}

std::uint64_t unsignedInteger(const json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    schemaError(path, "expected a nonnegative integer");
  return j.get<std::uint64_t>();
}

const json& array(const json& j, const std::string& path) {
  if (!j.is_array()) schemaError(path, "expected an array");
  return j;
}

std::vector<double> numbers(const json& j, const std::string& path) {
  std::vector<double> out;
  std::size_t i = 0;
  for (const auto& v : array(j, path)) out.push_back(number(v, path + "[" + std::to_string(i++) + "]"));
  return out;
}

// Runs a library constructor and reports its failures as validation errors.
template <class F>
auto validated(const std::string& path, F&& build) {
  try {
    return build();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SchemaError || e.code() == ErrorCode::ValidationError) throw;
    validationError(path, e.what());
  }
}

Space parseSpace(const json& j) {
  const std::string path = "space";
  if (!j.is_object()) schemaError(path, "expected an object");
  if (!j.contains("kind") || !j["kind"].is_string()) schemaError(path + ".kind", "missing string key");
  const auto kind = j["kind"].get<std::string>();
  if (kind == "Euclidean") {
    requireObject(j, path, {"kind", "dimension"});
    const auto dim = unsignedInteger(j["dimension"], path + ".dimension");
    return validated(path, [&] { return Space::euclidean(dim); });
  }
  if (kind == "Interval") {
    requireObject(j, path, {"kind", "lo", "hi"});
    const double lo = number(j["lo"], path + ".lo");
    const double hi = number(j["hi"], path + ".hi");
    return validated(path, [&] { return Space::interval(lo, hi); });
  }
  if (kind == "Circle") {
    requireObject(j, path, {"kind", "circumference"});
    const double c = number(j["circumference"], path + ".circumference");
    return validated(path, [&] { return Space::circle(c); });
  }
  if (kind == "FiniteMatrix") {
    requireObject(j, path, {"kind", "matrix"});
    std::vector<std::vector<double>> table;
    std::size_t i = 0;
    for (const auto& row : array(j["matrix"], path + ".matrix"))
      table.push_back(numbers(row, path + ".matrix[" + std::to_string(i++) + "]"));
    Space space = validated(path, [&] { return Space::finiteMatrix(table); });
    std::vector<Point> all;
    for (std::size_t k = 0; k < table.size(); ++k) all.push_back(Point::scalar(static_cast<double>(k)));
    for (const auto& v : checkMetricAxioms(space, all, 0.0))
      if (v.kind == AxiomKind::Triangle)
        validationError(path + ".matrix", "triangle inequality fails for points " +
                                              std::to_string(v.indices[0]) + ", " +
                                              std::to_string(v.indices[1]) + ", " +
                                              std::to_string(v.indices[2]));
    return space;
  }
  schemaError(path + ".kind", "unknown space kind '" + kind + "'");
}

Gauge parseGauge(const json& j) {
  const std::string path = "gauge";
  requireObject(j, path, {"pieces", "tailStart", "tailValue"});
  std::vector<GaugePiece> pieces;
  std::size_t i = 0;
  for (const auto& p : array(j["pieces"], path + ".pieces")) {
    const std::string at = path + ".pieces[" + std::to_string(i++) + "]";
    requireObject(p, at, {"start", "end", "c0", "c1"});
    pieces.push_back({number(p["start"], at + ".start"), number(p["end"], at + ".end"),
                      number(p["c0"], at + ".c0"), number(p["c1"], at + ".c1")});
  }
  const double tailStart = number(j["tailStart"], path + ".tailStart");
  const double tailValue = number(j["tailValue"], path + ".tailValue");
  Gauge g = validated(path, [&] { return Gauge(pieces, tailStart, tailValue); });
  validated(path, [&] {
    requireValidGauge(g);
    return 0;
  });
  return g;
}

MultiMap parseMap(const json& j, const Space& space) {
  const std::string path = "map";
  if (!j.is_object()) schemaError(path, "expected an object");
  if (!j.contains("kind") || !j["kind"].is_string()) schemaError(path + ".kind", "missing string key");
  const auto kind = j["kind"].get<std::string>();
  if (kind == "AffineSelector") {
    requireObject(j, path, {"kind", "selectors"});
    std::vector<AffineMap> selectors;
    const std::size_t dim = space.pointDimension();
    std::size_t i = 0;
    for (const auto& s : array(j["selectors"], path + ".selectors")) {
      const std::string at = path + ".selectors[" + std::to_string(i++) + "]";
      requireObject(s, at, {"A", "b"});
      AffineMap m;
      std::size_t r = 0;
      for (const auto& row : array(s["A"], at + ".A")) {
        auto values = numbers(row, at + ".A[" + std::to_string(r++) + "]");
        if (values.size() != s["A"].size()) validationError(at + ".A", "matrix is not square");
        m.a.insert(m.a.end(), values.begin(), values.end());
      }
      m.b = numbers(s["b"], at + ".b");
      if (r != dim || m.b.size() != dim)
        validationError(at, "dimension mismatch: map dimension " +
                                std::to_string(std::max(r, m.b.size())) + ", space dimension " +
                                std::to_string(dim));
      selectors.push_back(std::move(m));
    }
    return validated(path, [&] { return MultiMap::affineSelector(space, selectors); });
  }
  if (kind == "TableMap") {
    requireObject(j, path, {"kind", "table"});
    std::vector<std::vector<std::size_t>> table;
    std::size_t i = 0;
    for (const auto& row : array(j["table"], path + ".table")) {
      const std::string at = path + ".table[" + std::to_string(i++) + "]";
      std::vector<std::size_t> images;
      std::size_t c = 0;
      for (const auto& v : array(row, at))
        images.push_back(unsignedInteger(v, at + "[" + std::to_string(c++) + "]"));
      table.push_back(std::move(images));
    }
    return validated(path, [&] { return MultiMap::tableMap(space, table); });
  }
  schemaError(path + ".kind", "unknown map kind '" + kind + "'");
}

}  // namespace

Scenario parseScenario(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  requireObject(doc, "$", {"space", "map", "epsilon"},
                {"gauge", "lambda", "seed", "samples", "tol"});

  Space space = parseSpace(doc["space"]);
  std::optional<Gauge> gauge;
  if (doc.contains("gauge")) gauge = parseGauge(doc["gauge"]);
  MultiMap map = parseMap(doc["map"], space);

  Scenario s{std::move(space), std::move(gauge), std::move(map), number(doc["epsilon"], "epsilon")};
  if (doc.contains("lambda")) s.lambda = number(doc["lambda"], "lambda");
  if (doc.contains("seed")) s.seed = unsignedInteger(doc["seed"], "seed");
  if (doc.contains("samples")) s.samples = unsignedInteger(doc["samples"], "samples");
  if (doc.contains("tol")) s.tol = number(doc["tol"], "tol");

  if (!(s.epsilon > 0.0)) validationError("epsilon", "must be positive");
  if (!(s.lambda > 0.0 && s.lambda < 1.0)) validationError("lambda", "must lie in (0,1)");
  if (s.samples == 0) validationError("samples", "must be positive");
  if (!(s.tol >= 0.0)) validationError("tol", "must be nonnegative");
  return s;
}

Scenario loadScenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open scenario file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parseScenario(buf.str());
}

}  // namespace mvfix
