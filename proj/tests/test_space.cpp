#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "mvfix/error.hpp"
#include "mvfix/space.hpp"

using namespace mvfix;

namespace {

bool hasTriangleOver(const std::vector<AxiomViolation>& report, std::vector<std::size_t> idx) {
  std::sort(idx.begin(), idx.end());
  for (auto v : report) {
    if (v.kind != AxiomKind::Triangle) continue;
    std::sort(v.indices.begin(), v.indices.end());
    if (v.indices == idx) return true;
  }
  return false;
}

Point randomPoint(const Space& space, std::mt19937_64& rng) {
  return std::visit(
      [&](const auto& k) -> Point {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Euclidean>) {
          std::uniform_real_distribution<double> u(-50, 50);
          std::vector<double> c(k.dimension);
          for (auto& x : c) x = u(rng);
          return Point(c);
        } else if constexpr (std::is_same_v<K, Interval>) {
          return Point::scalar(std::uniform_real_distribution<double>(k.lo, k.hi)(rng));
        } else if constexpr (std::is_same_v<K, Circle>) {
          return Point::scalar(std::uniform_real_distribution<double>(0, k.circumference)(rng));
        } else {
          std::uniform_int_distribution<std::size_t> u(0, k.table.size() - 1);
          return Point::scalar(static_cast<double>(u(rng)));
        }
      },
      space.kind());
}

std::vector<Space> continuumSpaces() {
  return {Space::euclidean(1), Space::euclidean(2), Space::euclidean(3),
          Space::interval(-3, 7), Space::circle(10), Space::circle(2 * M_PI)};
}

}  // namespace

TEST_CASE("distance examples") {
  CHECK(Space::euclidean(2).distance({0, 0}, {3, 4}) == 5.0);
  CHECK(Space::circle(10).distance(Point::scalar(1), Point::scalar(9)) == 2.0);
  CHECK(Space::circle(10).distance(Point::scalar(1), Point::scalar(6)) == 5.0);
  CHECK(Space::interval(0, 4).distance(Point::scalar(0.5), Point::scalar(3)) == 2.5);
  for (const auto& s : continuumSpaces()) {
    std::mt19937_64 rng(1);
    auto x = randomPoint(s, rng);
    CHECK(s.distance(x, x) == 0.0);
  }
}

TEST_CASE("distance errors") {
  CHECK_THROWS_AS(Space::euclidean(2).distance({0}, {1, 2}), Error);
  try {
    Space::euclidean(2).distance({0}, {1, 2});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DimensionMismatch);
  }
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    FAIL("no error");
    return ErrorCode::ParseError;
  };
  CHECK(code([] { Space::interval(0, 1).distance(Point::scalar(2), Point::scalar(0)); }) ==
        ErrorCode::OutOfDomain);
  CHECK(code([] { Space::circle(10).distance(Point::scalar(10), Point::scalar(0)); }) ==
        ErrorCode::OutOfDomain);
  auto m = Space::finiteMatrix({{0, 1}, {1, 0}});
  CHECK(code([&] { m.distance(Point::scalar(2), Point::scalar(0)); }) == ErrorCode::IndexOutOfRange);
  CHECK(code([&] { m.distance(Point::scalar(0.5), Point::scalar(0)); }) ==
        ErrorCode::IndexOutOfRange);
  CHECK(code([] { Point{std::nan("")}; }) == ErrorCode::NonFinite);
}

TEST_CASE("finite matrix construction") {
  CHECK_THROWS_AS(Space::finiteMatrix({{0, 1}, {2, 0}}), Error);       // asymmetric
  CHECK_THROWS_AS(Space::finiteMatrix({{1, 1}, {1, 0}}), Error);       // diagonal
  CHECK_THROWS_AS(Space::finiteMatrix({{0, 1, 2}, {1, 0}}), Error);    // ragged
  CHECK_THROWS_AS(Space::finiteMatrix({{0, 0}, {0, 0}}), Error);       // d = 0 off diagonal
  CHECK_NOTHROW(Space::finiteMatrix({{0, 5, 1}, {5, 0, 1}, {1, 1, 0}}));  // triangle is checked later
}

TEST_CASE("segment examples") {
  {
    auto seg = Space::euclidean(1).segment({0}, {1});
    CHECK(seg.a() == 0.0);
    CHECK(seg.b() == 1.0);
    CHECK(seg(0.25) == Point{0.25});
    CHECK(seg(1.0) == Point{1.0});
  }
  {
    auto space = Space::euclidean(2);
    auto seg = space.segment({0, 0}, {3, 4});
    CHECK(seg.b() == 5.0);
    for (double t : {0.0, 0.7, 2.5, 4.1}) {
      auto p = seg(t);
      CHECK(p[0] == doctest::Approx(3 * t / 5).epsilon(1e-15));
      CHECK(p[1] == doctest::Approx(4 * t / 5).epsilon(1e-15));
    }
    CHECK(seg(5.0) == Point{3, 4});
  }
  {
    // Shorter arc from 1 to 9 on a circle of length 10 passes through 0.
    auto space = Space::circle(10);
    auto seg = space.segment(Point::scalar(1), Point::scalar(9));
    CHECK(seg.b() == 2.0);
    CHECK(seg(1.0).value() == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(seg(1.5).value() == doctest::Approx(9.5));
    CHECK(seg(2.0) == Point::scalar(9));
  }
  {
    // Antipodal points: increasing parameter direction.
    auto seg = Space::circle(10).segment(Point::scalar(1), Point::scalar(6));
    CHECK(seg.b() == 5.0);
    CHECK(seg(1.0).value() == doctest::Approx(2.0));
    auto back = Space::circle(10).segment(Point::scalar(6), Point::scalar(1));
    CHECK(back(1.0).value() == doctest::Approx(7.0));
  }
}

TEST_CASE("segment errors") {
  auto m = Space::finiteMatrix({{0, 1}, {1, 0}});
  CHECK_FALSE(m.hasSegments());
  try {
    m.segment(Point::scalar(0), Point::scalar(1));
    FAIL("expected NotMetricallyConvex");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotMetricallyConvex);
  }
  try {
    Space::euclidean(2).segment({1, 1}, {1, 1});
    FAIL("expected DegeneratePair");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegeneratePair);
  }
}

TEST_CASE("property: metric axioms hold on every shipped space") {
  std::mt19937_64 rng(20261016);
  std::vector<Space> spaces = continuumSpaces();
  spaces.push_back(Space::finiteMatrix({{0, 1, 2, 1}, {1, 0, 1, 2}, {2, 1, 0, 1}, {1, 2, 1, 0}}));
  for (const auto& space : spaces) {
    CAPTURE(space.name());
    for (int trial = 0; trial < 1000; ++trial) {
      std::vector<Point> triple{randomPoint(space, rng), randomPoint(space, rng),
                                randomPoint(space, rng)};
      auto report = checkMetricAxioms(space, triple, 1e-12);
      REQUIRE(report.empty());
    }
  }
}

TEST_CASE("checkMetricAxioms examples") {
  std::mt19937_64 rng(3);
  auto plane = Space::euclidean(2);
  std::vector<Point> sample;
  for (int i = 0; i < 10; ++i) sample.push_back(randomPoint(plane, rng));
  CHECK(checkMetricAxioms(plane, sample, 1e-12).empty());

  auto two = Space::finiteMatrix({{0, 1}, {1, 0}});
  std::vector<Point> both{Point::scalar(0), Point::scalar(1)};
  CHECK(checkMetricAxioms(two, both, 1e-12).empty());

  // d12 = 5, d13 = 1, d23 = 1 breaks the triangle inequality through point 3.
  auto bad = Space::finiteMatrix({{0, 5, 1}, {5, 0, 1}, {1, 1, 0}});
  std::vector<Point> all{Point::scalar(0), Point::scalar(1), Point::scalar(2)};
  auto report = checkMetricAxioms(bad, all, 1e-12);
  CHECK(hasTriangleOver(report, {0, 1, 2}));
  bool found = false;
  for (const auto& v : report)
    if (v.kind == AxiomKind::Triangle && v.indices == std::vector<std::size_t>{0, 2, 1}) {
      found = true;
      CHECK(v.excess == 3.0);
    }
  CHECK(found);
}

TEST_CASE("property: segments are isometries with exact endpoints") {
  std::mt19937_64 rng(99);
  for (const auto& space : continuumSpaces()) {
    CAPTURE(space.name());
    for (int pair = 0; pair < 200; ++pair) {
      Point x1 = randomPoint(space, rng), x2 = randomPoint(space, rng);
      if (x1 == x2) continue;
      const auto seg = space.segment(x1, x2);
      REQUIRE(std::fabs(seg.length() - space.distance(x1, x2)) <= 1e-12);
      REQUIRE(space.distance(seg(seg.a()), x1) == 0.0);
      REQUIRE(space.distance(seg(seg.b()), x2) == 0.0);
      std::uniform_real_distribution<double> u(seg.a(), seg.b());
      for (int k = 0; k < 20; ++k) {
        const double s = u(rng), t = u(rng);
        // Coordinates up to 50 in magnitude carry ~1e-14 rounding.
        REQUIRE(std::fabs(space.distance(seg(s), seg(t)) - std::fabs(s - t)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("property: forward and reverse segments trace the same points") {
  std::mt19937_64 rng(5);
  for (const auto& space : {Space::euclidean(1), Space::euclidean(2), Space::interval(-3, 7)}) {
    for (int pair = 0; pair < 200; ++pair) {
      Point x1 = randomPoint(space, rng), x2 = randomPoint(space, rng);
      const auto fwd = space.segment(x1, x2);
      const auto rev = space.segment(x2, x1);
      std::uniform_real_distribution<double> u(0, fwd.length());
      for (int k = 0; k < 20; ++k) {
        const double t = u(rng);
        REQUIRE(space.distance(fwd(fwd.a() + t), rev(rev.b() - t)) <= 1e-9);
      }
    }
  }
}
