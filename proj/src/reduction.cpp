#include "mvfix/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numeric>
#include <thread>

#include "mvfix/error.hpp"
#include "mvfix/hausdorff.hpp"

namespace mvfix {

Certificate deriveConstant(const Gauge& g, double epsilon, double lambda) {
  requireValidGauge(g);
  if (!std::isfinite(epsilon) || !(epsilon > 0.0))
    throw Error(ErrorCode::DegenerateEpsilon, "epsilon must be positive, got " + formatReal(epsilon));
  if (!(lambda > 0.0 && lambda < 1.0))
    throw Error(ErrorCode::InvalidParameter, "lambda must lie in (0,1), got " + formatReal(lambda));

  const SupProfile profile(g);
  Certificate cert{};
  cert.epsilon = epsilon;
  cert.lambda = lambda;
  if (const auto p0 = profile.reachOne()) {
    // p0 > 0 for a valid gauge; any q below p0 keeps the running sup under 1.
    cert.caseTag = ReductionCase::Case2;
    cert.p0 = *p0;
    cert.q = std::min(epsilon, lambda * *p0);
  } else {
    cert.caseTag = ReductionCase::Case1;
    cert.q = epsilon;
  }
  cert.k = supAlpha(g, cert.q);
  if (!(cert.k < 1.0))
    throw Error(ErrorCode::InvalidGauge, "derived constant " + formatReal(cert.k) + " is not < 1");
  return cert;
}

std::vector<double> subdivideSegment(double a, double b, double r) {
  if (!std::isfinite(r) || !(r > 0.0))
    throw Error(ErrorCode::NonPositiveStep, "step must be positive, got " + formatReal(r));
  if (!(b > a)) throw Error(ErrorCode::DegeneratePair, "segment has no length");

  const double length = b - a;
  auto n = static_cast<std::size_t>(std::floor(length / r)) + 1;
  // floor(length / r) can land one short when length is a rounded multiple of r.
  while (length / static_cast<double>(n) >= r) ++n;

  std::vector<double> t;
  for (;;) {
    t.resize(n + 1);
    for (std::size_t i = 0; i < n; ++i)
      t[i] = a + length * static_cast<double>(i) / static_cast<double>(n);
    t[n] = b;
    bool strict = true;
    for (std::size_t i = 0; i < n && strict; ++i) strict = t[i + 1] - t[i] < r;
    if (strict) return t;
    ++n;
  }
}

std::vector<double> subdivideSegment(const Segment& seg, double r) {
  return subdivideSegment(seg.a(), seg.b(), r);
}

bool ChainTrace::allStepsOk() const {
  return std::all_of(stepOk.begin(), stepOk.end(), [](bool ok) { return ok; });
}

double ChainTrace::sumStepHausdorff() const {
  return std::accumulate(stepHausdorff.begin(), stepHausdorff.end(), 0.0);
}

std::vector<std::size_t> ChainTrace::violations() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < stepOk.size(); ++i)
    if (!stepOk[i]) out.push_back(i);
  return out;
}

namespace {

ChainTrace buildChain(const Space& space, const MultiMap& f, const Certificate& cert,
                      const Point& x1, const Point& x2, bool requireLocal) {
  if (!space.hasSegments())
    throw Error(ErrorCode::NotMetricallyConvex, space.name() + " is not metrically convex");
  const double d = space.distance(x1, x2);
  if (x1 == x2) throw Error(ErrorCode::DegeneratePair, "chain endpoints coincide");
  if (requireLocal && d >= cert.epsilon)
    throw Error(ErrorCode::PairTooFar,
                "d = " + formatReal(d) + " is not below epsilon = " + formatReal(cert.epsilon));

  const Segment seg = space.segment(x1, x2);
  const double r = kStepFraction * std::min(cert.epsilon, cert.q);

  ChainTrace trace;
  trace.distance = d;
  trace.breakpoints = subdivideSegment(seg, r);
  std::vector<FiniteSet> images;
  for (double t : trace.breakpoints) {
    trace.points.push_back(seg(t));
    images.push_back(f(trace.points.back()));
  }
  for (std::size_t i = 0; i + 1 < trace.points.size(); ++i) {
    const double step = space.distance(trace.points[i], trace.points[i + 1]);
    const double h = hausdorff(space, images[i], images[i + 1]);
    trace.stepDistances.push_back(step);
    trace.stepHausdorff.push_back(h);
    trace.stepOk.push_back(h <= cert.k * step + kBoundTolerance);
  }
  trace.totalBound =
      cert.k * std::accumulate(trace.stepDistances.begin(), trace.stepDistances.end(), 0.0);
  trace.directHausdorff = hausdorff(space, images.front(), images.back());
  trace.directOk = trace.directHausdorff <= cert.k * d + kBoundTolerance;
  return trace;
}

constexpr double kSampleBox = 10.0;

PairSampler makeSampler(const Space& space, double maxDistance, bool openBelow) {
  auto radius = [maxDistance, openBelow](std::mt19937_64& rng, double cap) {
    const double hi = std::min(maxDistance, cap);
    // (0, hi) for local pairs, (0, hi] for spread pairs.
    double rho = std::uniform_real_distribution<double>(0.0, hi)(rng);
    return openBelow ? rho : hi - rho;
  };
  return std::visit(
      [&](const auto& kind) -> PairSampler {
        using K = std::decay_t<decltype(kind)>;
        if constexpr (std::is_same_v<K, Euclidean>) {
          const std::size_t n = kind.dimension;
          return [n, radius](std::mt19937_64& rng) {
            std::uniform_real_distribution<double> box(-kSampleBox, kSampleBox);
            std::normal_distribution<double> gauss;
            std::vector<double> x(n), u(n);
            for (auto& c : x) c = box(rng);
            double norm = 0.0;
            do {
              norm = 0.0;
              for (auto& c : u) {
                c = gauss(rng);
                norm += c * c;
              }
            } while (norm == 0.0);
            norm = std::sqrt(norm);
            const double rho = radius(rng, std::numeric_limits<double>::infinity());
            std::vector<double> y(n);
            for (std::size_t i = 0; i < n; ++i) y[i] = x[i] + rho * u[i] / norm;
            return std::pair{Point(std::move(x)), Point(std::move(y))};
          };
        } else if constexpr (std::is_same_v<K, Interval>) {
          const Interval iv = kind;
          return [iv, radius](std::mt19937_64& rng) {
            const double x = std::uniform_real_distribution<double>(iv.lo, iv.hi)(rng);
            const double rho = radius(rng, iv.hi - iv.lo);
            const double sign = std::bernoulli_distribution(0.5)(rng) ? 1.0 : -1.0;
            double y = x + sign * rho;
            if (y < iv.lo || y > iv.hi) y = x - sign * rho;
            y = std::clamp(y, iv.lo, iv.hi);
            return std::pair{Point::scalar(x), Point::scalar(y)};
          };
        } else if constexpr (std::is_same_v<K, Circle>) {
          const double length = kind.circumference;
          return [length, radius](std::mt19937_64& rng) {
            const double x = std::uniform_real_distribution<double>(0.0, length)(rng);
            const double rho = radius(rng, length / 2);
            const double sign = std::bernoulli_distribution(0.5)(rng) ? 1.0 : -1.0;
            double y = x + sign * rho;
            y -= length * std::floor(y / length);
            if (y >= length) y -= length;
            return std::pair{Point::scalar(x), Point::scalar(y)};
          };
        } else {
          const std::size_t n = kind.table.size();
          return [n](std::mt19937_64& rng) {
            std::uniform_int_distribution<std::size_t> pick(0, n - 1);
            const auto i = static_cast<double>(pick(rng));
            const auto j = static_cast<double>(pick(rng));
            return std::pair{Point::scalar(i), Point::scalar(j)};
          };
        }
      },
      space.kind());
}

}  // namespace

ChainTrace chainBound(const Space& space, const MultiMap& f, const Certificate& cert,
                      const Point& x1, const Point& x2) {
  return buildChain(space, f, cert, x1, x2, true);
}

PairSampler localPairSampler(const Space& space, double epsilon) {
  return makeSampler(space, epsilon, true);
}

PairSampler spreadPairSampler(const Space& space, double maxDistance) {
  return makeSampler(space, maxDistance, false);
}

Evidence verifyCertificate(const Space& space, const MultiMap& f, const Certificate& cert,
                           const PairSampler& sampler, std::size_t n, double tol,
                           std::uint64_t seed) {
  if (n == 0) throw Error(ErrorCode::InvalidParameter, "verification needs at least one sample");

  std::mt19937_64 rng(seed);
  std::vector<std::pair<Point, Point>> pairs;
  std::vector<double> dists;
  pairs.reserve(n);
  const std::size_t maxAttempts = std::max<std::size_t>(1000, 100 * n);
  for (std::size_t attempt = 0; attempt < maxAttempts && pairs.size() < n; ++attempt) {
    auto pair = sampler(rng);
    const double d = space.distance(pair.first, pair.second);
    if (d > 0.0 && d < cert.epsilon) {
      pairs.push_back(std::move(pair));
      dists.push_back(d);
    }
  }
  if (pairs.size() < n)
    throw Error(ErrorCode::SamplerExhausted, "only " + std::to_string(pairs.size()) + " of " +
                                                 std::to_string(n) +
                                                 " pairs with 0 < d < epsilon found");

  std::vector<double> ratio(n);
  auto evaluate = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      ratio[i] = hausdorff(space, f(pairs[i].first), f(pairs[i].second)) / dists[i];
  };
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(1, n / 256));
  if (workers == 1) {
    evaluate(0, n);
  } else {
    std::vector<std::future<void>> jobs;
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t begin = 0; begin < n; begin += chunk)
      jobs.push_back(std::async(std::launch::async, evaluate, begin, std::min(n, begin + chunk)));
    for (auto& job : jobs) job.get();
  }

  Evidence ev;
  ev.samples = n;
  std::size_t worst = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (ratio[i] > ratio[worst]) worst = i;
    if (ratio[i] > cert.k + tol) ++ev.violations;
  }
  ev.maxRatio = ratio[worst];
  ev.worstPair = pairs[worst];
  return ev;
}

GlobalBoundReport globalFromLocal(const Space& space, const MultiMap& f, const Certificate& cert,
                                  const Point& x1, const Point& x2, double tol) {
  const ChainTrace trace = buildChain(space, f, cert, x1, x2, false);
  GlobalBoundReport report{};
  report.distance = trace.distance;
  report.directHausdorff = trace.directHausdorff;
  report.bound = cert.k * trace.distance;
  report.holds = trace.directHausdorff <= report.bound + tol;
  report.steps = trace.stepDistances.size();
  report.stepViolations = trace.violations().size();
  return report;
}

}  // namespace mvfix
