#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "mvfix/error.hpp"
#include "mvfix/reduction.hpp"
#include "oracles.hpp"

using namespace mvfix;

namespace {

Gauge halfSlope() { return Gauge({{0, 1, 0, 0.5}}, 1, 0.5); }
Gauge unitSlope() { return Gauge({{0, 1, 0, 1}}, 1, 0.5); }

ErrorCode codeOf(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::ParseError;
}

MultiMap scaling(const Space& space, std::vector<double> factors) {
  std::vector<AffineMap> sel;
  const std::size_t n = space.pointDimension();
  for (double f : factors) {
    AffineMap m{std::vector<double>(n * n, 0.0), std::vector<double>(n, 0.0)};
    for (std::size_t i = 0; i < n; ++i) m.a[i * n + i] = f;
    sel.push_back(m);
  }
  return MultiMap::affineSelector(space, sel);
}

MultiMap constantMap(const Space& space, Point c) {
  return MultiMap(space, [c](const Point&) { return FiniteSet{c}; }, "constant");
}

Certificate manual(double epsilon, double q, double k) {
  return Certificate{epsilon, q, k, ReductionCase::Case1, std::nullopt, 0.5, std::nullopt};
}

/// Random affine selectors whose matrices have Frobenius norm (hence
/// operator norm) at most `bound`.
MultiMap randomConforming(const Space& space, double bound, std::mt19937_64& rng) {
  const std::size_t n = space.pointDimension();
  std::uniform_int_distribution<int> count(1, 4);
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> frac(0.0, 1.0), offset(-3, 3);
  std::vector<AffineMap> sel;
  for (int s = count(rng); s > 0; --s) {
    AffineMap m{std::vector<double>(n * n), std::vector<double>(n)};
    double fro = 0;
    for (auto& x : m.a) {
      x = gauss(rng);
      fro += x * x;
    }
    const double scale = bound * frac(rng) / std::sqrt(fro);
    for (auto& x : m.a) x *= scale;
    for (auto& x : m.b) x = offset(rng);
    sel.push_back(m);
  }
  return MultiMap::affineSelector(space, sel);
}

}  // namespace

TEST_CASE("deriveConstant examples") {
  auto c1 = deriveConstant(halfSlope(), 2, 0.5);
  CHECK(c1.caseTag == ReductionCase::Case1);
  CHECK(c1.q == 2.0);
  CHECK(c1.k == 0.5);
  CHECK_FALSE(c1.p0.has_value());

  auto c2 = deriveConstant(unitSlope(), 2, 0.5);
  CHECK(c2.caseTag == ReductionCase::Case2);
  CHECK(c2.p0 == 1.0);
  CHECK(c2.q == 0.5);
  CHECK(c2.k == 0.5);

  // epsilon below lambda * p0: q = epsilon.
  auto c3 = deriveConstant(unitSlope(), 0.3, 0.5);
  CHECK(c3.caseTag == ReductionCase::Case2);
  CHECK(c3.q == 0.3);
  CHECK(c3.k == 0.3);

  // Smaller lambda, smaller k.
  CHECK(deriveConstant(unitSlope(), 2, 0.1).k == doctest::Approx(0.1));

  CHECK(deriveConstant(Gauge::constant(0.0), 17).k == 0.0);
  CHECK(deriveConstant(Gauge::constant(0.0), 1e-3).k == 0.0);
}

TEST_CASE("deriveConstant errors") {
  CHECK(codeOf([] { deriveConstant(Gauge::constant(1.0), 1); }) == ErrorCode::InvalidGauge);
  CHECK(codeOf([] { deriveConstant(halfSlope(), 0); }) == ErrorCode::DegenerateEpsilon);
  CHECK(codeOf([] { deriveConstant(halfSlope(), -2); }) == ErrorCode::DegenerateEpsilon);
  CHECK(codeOf([] { deriveConstant(halfSlope(), 1, 1.0); }) == ErrorCode::InvalidParameter);
  CHECK(codeOf([] { deriveConstant(halfSlope(), 1, 0.0); }) == ErrorCode::InvalidParameter);
}

TEST_CASE("property: derived constants are below 1 and the case follows reachOne") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> eps(1e-3, 20), lam(0.01, 0.99);
  for (int trial = 0; trial < 1000; ++trial) {
    Gauge g = oracle::randomGauge(rng);
    if (!validateGauge(g).empty()) continue;
    const auto cert = deriveConstant(g, eps(rng), lam(rng));
    REQUIRE(cert.k < 1.0);
    REQUIRE(cert.k == supAlpha(g, cert.q));
    const auto p0 = supProfile(g).reachOne();
    REQUIRE((cert.caseTag == ReductionCase::Case1) == !p0.has_value());
    if (p0) REQUIRE((cert.q < *p0 || cert.q == cert.epsilon));
  }
}

TEST_CASE("subdivideSegment examples") {
  auto t = subdivideSegment(0, 1, 0.3);
  REQUIRE(t.size() == 5);
  CHECK(t == std::vector<double>{0, 0.25, 0.5, 0.75, 1});

  CHECK(subdivideSegment(0, 0.2, 0.3) == std::vector<double>{0, 0.2});

  auto exact = subdivideSegment(0, 0.9, 0.3);
  REQUIRE(exact.size() == 5);
  for (std::size_t i = 0; i + 1 < exact.size(); ++i)
    CHECK(exact[i + 1] - exact[i] == doctest::Approx(0.225).epsilon(1e-14));

  CHECK(codeOf([] { subdivideSegment(0, 1, 0); }) == ErrorCode::NonPositiveStep);
  CHECK(codeOf([] { subdivideSegment(0, 1, -1); }) == ErrorCode::NonPositiveStep);
}

TEST_CASE("property: subdivision steps") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> len(1e-3, 50), step(1e-2, 10);
  std::uniform_int_distribution<int> mult(1, 40);
  for (int trial = 0; trial < 2000; ++trial) {
    const double r = step(rng);
    const double length = trial % 2 ? len(rng) : r * mult(rng);
    const double a = len(rng) - 25;
    const auto t = subdivideSegment(a, a + length, r);
    const std::size_t n = t.size() - 1;
    double sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
      REQUIRE(t[i + 1] - t[i] < r);
      sum += t[i + 1] - t[i];
    }
    REQUIRE(std::fabs(sum - length) <= 1e-12);
    REQUIRE((n == 1) == ((a + length) - a < r));
  }
}

TEST_CASE("chainBound examples") {
  const auto line = Space::euclidean(1);
  const auto half = scaling(line, {0.5});
  {
    auto trace = chainBound(line, half, manual(2, 2, 0.5), Point{0}, Point{1});
    CHECK(trace.allStepsOk());
    CHECK(trace.stepDistances.size() == 1);
    CHECK(trace.totalBound == 0.5);
    CHECK(trace.directHausdorff == 0.5);
    CHECK(trace.directOk);
  }
  {
    // q = 0.25 forces r = 0.225 and five steps of 0.2.
    auto trace = chainBound(line, half, manual(2, 0.25, 0.5), Point{0}, Point{1});
    REQUIRE(trace.stepDistances.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
      CHECK(trace.stepDistances[i] == doctest::Approx(0.2).epsilon(1e-14));
      CHECK(trace.stepHausdorff[i] == doctest::Approx(0.1).epsilon(1e-14));
    }
    CHECK(trace.totalBound == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(trace.violations().empty());
  }
  {
    auto trace = chainBound(line, constantMap(line, Point{3}), manual(2, 0.1, 0.0), Point{0}, Point{1});
    for (double h : trace.stepHausdorff) CHECK(h == 0.0);
    CHECK(trace.allStepsOk());
  }
  {
    const auto plane = Space::euclidean(2);
    const auto f = scaling(plane, {0.5, 1.0 / 3.0});
    const auto cert = deriveConstant(Gauge::constant(0.5), 2);
    auto trace = chainBound(plane, f, cert, Point{0, 0}, Point{1, 0});
    CHECK(trace.violations().empty());
    for (std::size_t i = 0; i + 1 < trace.points.size(); ++i) {
      auto img = [&](const Point& p) {
        return std::vector<Point>{Point{p[0] / 2, p[1] / 2}, Point{p[0] / 3, p[1] / 3}};
      };
      const double ref = oracle::hausdorff(img(trace.points[i]), img(trace.points[i + 1]), oracle::euclid);
      CHECK(trace.stepHausdorff[i] == doctest::Approx(ref).epsilon(1e-12));
    }
  }
}

TEST_CASE("chainBound errors") {
  const auto line = Space::euclidean(1);
  const auto half = scaling(line, {0.5});
  CHECK(codeOf([&] { chainBound(line, half, manual(1, 1, 0.5), Point{0}, Point{1}); }) ==
        ErrorCode::PairTooFar);
  CHECK(codeOf([&] { chainBound(line, half, manual(1, 1, 0.5), Point{0}, Point{0}); }) ==
        ErrorCode::DegeneratePair);
  const auto finite = Space::finiteMatrix({{0, 1}, {1, 0}});
  const auto table = MultiMap::tableMap(finite, {{0}, {0}});
  CHECK(codeOf([&] { chainBound(finite, table, manual(2, 2, 0.5), Point{0}, Point{1}); }) ==
        ErrorCode::NotMetricallyConvex);
}

TEST_CASE("property: chain traces on conforming maps") {
  std::mt19937_64 rng(43);
  const Gauge g({{0, 1, 0.5, 0.5}}, 1, 0.5);  // inf alpha = 0.5, running sup hits 1 at 1
  for (const auto& space : {Space::euclidean(1), Space::euclidean(2), Space::euclidean(3)}) {
    for (double eps : {0.3, 2.0, 5.0}) {
      const auto cert = deriveConstant(g, eps);
      const auto sampler = localPairSampler(space, eps);
      for (int trial = 0; trial < 60; ++trial) {
        const auto f = randomConforming(space, 0.5, rng);
        auto [x1, x2] = sampler(rng);
        const double d = space.distance(x1, x2);
        if (!(d > 0 && d < eps)) continue;
        const auto trace = chainBound(space, f, cert, x1, x2);
        const double sum = std::accumulate(trace.stepDistances.begin(), trace.stepDistances.end(), 0.0);
        REQUIRE(std::fabs(sum - d) <= 1e-12);
        for (double s : trace.stepDistances) REQUIRE(s < std::min(cert.epsilon, cert.q));
        REQUIRE(trace.allStepsOk());
        REQUIRE(std::fabs(trace.totalBound - cert.k * d) <= 1e-12);
        REQUIRE(trace.directHausdorff <= trace.sumStepHausdorff() + 1e-9);
        REQUIRE(trace.directOk);
      }
    }
  }
}

TEST_CASE("chains on the circle and the interval") {
  const auto circle = Space::circle(10);
  const auto cert = manual(4.5, 0.5, 0.2);  // r = 0.45, five steps of 0.4
  auto trace = chainBound(circle, constantMap(circle, Point{2}), cert, Point{1}, Point{9});
  REQUIRE(trace.points.size() == 6);
  CHECK(trace.distance == 2.0);
  CHECK(std::accumulate(trace.stepDistances.begin(), trace.stepDistances.end(), 0.0) ==
        doctest::Approx(2.0).epsilon(1e-14));
  // Backwards through 0: 1, 0.6, 0.2, 9.8, 9.4, 9.
  CHECK(trace.points[1].value() == doctest::Approx(0.6));
  CHECK(trace.points[3].value() == doctest::Approx(9.8));

  const auto iv = Space::interval(0, 4);
  const auto f = MultiMap::affineSelector(iv, {{{0.5}, {0}}, {{0.25}, {1}}});
  auto t2 = chainBound(iv, f, deriveConstant(Gauge::constant(0.6), 1), Point{1}, Point{1.9});
  CHECK(t2.allStepsOk());
  CHECK(t2.directHausdorff == doctest::Approx(0.45));
}

TEST_CASE("verifyCertificate examples") {
  const auto line = Space::euclidean(1);
  const auto cert = manual(2, 2, 0.5);
  const auto sampler = localPairSampler(line, 2);

  auto ok = verifyCertificate(line, scaling(line, {0.5}), cert, sampler, 10000, 1e-9, 42);
  CHECK(ok.samples == 10000);
  CHECK(ok.maxRatio == 0.5);
  CHECK(ok.violations == 0);

  auto flat = verifyCertificate(line, constantMap(line, Point{4}), cert, sampler, 1000, 1e-9, 1);
  CHECK(flat.maxRatio == 0.0);

  auto bad = verifyCertificate(line, scaling(line, {2}), cert, sampler, 1000, 1e-9, 1);
  CHECK(bad.violations == 1000);
  CHECK(bad.maxRatio == 2.0);
  CHECK(bad.worstPair.first != bad.worstPair.second);
}

TEST_CASE("verifyCertificate is reproducible from the seed") {
  const auto plane = Space::euclidean(2);
  const auto f = scaling(plane, {0.5, 0.25});
  const auto cert = deriveConstant(Gauge::constant(0.5), 1);
  const auto sampler = localPairSampler(plane, 1);
  auto a = verifyCertificate(plane, f, cert, sampler, 5000, 1e-9, 9);
  auto b = verifyCertificate(plane, f, cert, sampler, 5000, 1e-9, 9);
  CHECK(a.maxRatio == b.maxRatio);
  CHECK(a.worstPair == b.worstPair);
  auto c = verifyCertificate(plane, f, cert, sampler, 5000, 1e-9, 10);
  CHECK(c.worstPair != a.worstPair);
}

TEST_CASE("verifyCertificate runs out of pairs") {
  const auto far = Space::finiteMatrix({{0, 5}, {5, 0}});
  const auto f = MultiMap::tableMap(far, {{0}, {0}});
  CHECK(codeOf([&] {
          verifyCertificate(far, f, manual(1, 1, 0.5), localPairSampler(far, 1), 10, 1e-9, 1);
        }) == ErrorCode::SamplerExhausted);
}

TEST_CASE("globalFromLocal examples") {
  const auto line = Space::euclidean(1);
  const auto cert = manual(2, 2, 0.5);
  auto good = globalFromLocal(line, scaling(line, {0.5}), cert, Point{-50}, Point{50});
  CHECK(good.distance == 100.0);
  CHECK(good.holds);
  CHECK(good.stepViolations == 0);
  CHECK(good.steps == 56);  // floor(100 / 1.8) + 1

  CHECK(globalFromLocal(line, constantMap(line, Point{1}), cert, Point{0}, Point{100}).holds);

  auto bad = globalFromLocal(line, scaling(line, {2}), cert, Point{0}, Point{100});
  CHECK_FALSE(bad.holds);
  CHECK(bad.stepViolations == bad.steps);

  const auto finite = Space::finiteMatrix({{0, 1}, {1, 0}});
  CHECK(codeOf([&] {
          globalFromLocal(finite, MultiMap::tableMap(finite, {{0}, {1}}), cert, Point{0}, Point{1});
        }) == ErrorCode::NotMetricallyConvex);
}
