#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "mvfix/gauge.hpp"
#include "mvfix/multimap.hpp"
#include "mvfix/space.hpp"

namespace mvfix {

enum class ReductionCase { Case1, Case2 };

struct Evidence {
  std::size_t samples = 0;
  double maxRatio = 0.0;
  std::size_t violations = 0;
  std::pair<Point, Point> worstPair;
};

/// A uniform local contraction constant: H(F(x),F(y)) <= k d(x,y) whenever
/// d(x,y) < epsilon.
struct Certificate {
  double epsilon;
  double q;
  double k;
  ReductionCase caseTag;
  std::optional<double> p0;  // present iff Case2
  double lambda;
  std::optional<Evidence> evidence;
};

inline constexpr double kDefaultLambda = 0.5;
/// Comparison slack for every H <= k d test.
inline constexpr double kBoundTolerance = 1e-9;
/// Chain step r = kStepFraction * min(epsilon, q).
inline constexpr double kStepFraction = 0.9;

/// Case 1 (running sup of alpha never reaches 1): q = epsilon.
/// Case 2 (it reaches 1 first at p0 > 0): q = min(epsilon, lambda * p0).
/// In both cases k = supAlpha(g, q) < 1.
Certificate deriveConstant(const Gauge& g, double epsilon, double lambda = kDefaultLambda);

/// Equally spaced parameters a = t_0 < ... < t_n = b with n = floor((b-a)/r) + 1,
/// so every step is strictly shorter than r.
std::vector<double> subdivideSegment(const Segment& seg, double r);
std::vector<double> subdivideSegment(double a, double b, double r);

struct ChainTrace {
  std::vector<double> breakpoints;
  std::vector<Point> points;
  std::vector<double> stepDistances;
  std::vector<double> stepHausdorff;
  std::vector<bool> stepOk;
  double distance = 0.0;         // d(x1, x2)
  double totalBound = 0.0;       // k * sum(stepDistances)
  double directHausdorff = 0.0;  // H(F(x1), F(x2))
  bool directOk = false;         // directHausdorff <= k d + tol

  bool allStepsOk() const;
  double sumStepHausdorff() const;
  std::vector<std::size_t> violations() const;
};

/// Telescoping check of the certificate along the metric segment from x1 to x2.
/// Requires 0 < d(x1,x2) < epsilon.
ChainTrace chainBound(const Space& space, const MultiMap& f, const Certificate& cert,
                      const Point& x1, const Point& x2);

/// Draws a candidate pair; verification keeps pairs with 0 < d < epsilon.
using PairSampler = std::function<std::pair<Point, Point>(std::mt19937_64&)>;

/// Sampler for pairs at distance below epsilon. Base points are uniform in
/// the space (Euclidean: the box [-10, 10]^n; FiniteMatrix: uniform indices).
PairSampler localPairSampler(const Space& space, double epsilon);

/// Sampler for pairs at distance in (0, maxDistance], same base distribution.
PairSampler spreadPairSampler(const Space& space, double maxDistance);

/// Spot-checks H(F(x),F(y)) <= (k + tol) d(x,y) on n sampled pairs. Pairs are
/// drawn sequentially from the seeded generator and evaluated in parallel;
/// the result depends only on the seed.
Evidence verifyCertificate(const Space& space, const MultiMap& f, const Certificate& cert,
                           const PairSampler& sampler, std::size_t n, double tol,
                           std::uint64_t seed);

struct GlobalBoundReport {
  double distance;
  double directHausdorff;
  double bound;  // k * d
  bool holds;
  std::size_t steps;
  std::size_t stepViolations;
};

/// Same chaining as chainBound, with no restriction on d(x1, x2).
GlobalBoundReport globalFromLocal(const Space& space, const MultiMap& f, const Certificate& cert,
                                  const Point& x1, const Point& x2,
                                  double tol = kBoundTolerance);

}  // namespace mvfix
