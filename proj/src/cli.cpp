#include "mvfix/cli.hpp"

#include <algorithm>
#include <ostream>
#include <random>

#include "mvfix/error.hpp"
#include "mvfix/fixedpoint.hpp"
#include "mvfix/reduction.hpp"
#include "mvfix/serialize.hpp"

namespace mvfix::cli {

namespace {

constexpr std::size_t kChainabilitySample = 512;

Certificate certificateFor(const Scenario& s, std::string_view command) {
  if (!s.gauge)
    throw Error(ErrorCode::ValidationError, std::string(command) + " needs a gauge in the scenario");
  return deriveConstant(*s.gauge, s.epsilon, s.lambda);
}

const std::string& requireFlag(const std::optional<std::string>& flag, const char* name,
                               std::string_view command) {
  if (!flag)
    throw Error(ErrorCode::SchemaError, std::string(command) + " needs --" + name);
  return *flag;
}

std::vector<Point> chainabilitySample(const Scenario& s) {
  std::vector<Point> points;
  if (auto n = s.space.cardinality()) {
    for (std::size_t i = 0; i < *n; ++i) points.push_back(Point::scalar(static_cast<double>(i)));
    return points;
  }
  std::mt19937_64 rng(s.seed);
  const auto sampler = localPairSampler(s.space, s.epsilon);
  const std::size_t n = std::min(s.samples, kChainabilitySample);
  for (std::size_t i = 0; i < n; ++i) points.push_back(sampler(rng).first);
  return points;
}

int runChecked(Command command, const Scenario& s, const Flags& flags, std::ostream& out,
               std::ostream& err) {
  switch (command) {
    case Command::Reduce: {
      out << certificateJson(certificateFor(s, "reduce"));
      return 0;
    }
    case Command::Verify: {
      Certificate cert = certificateFor(s, "verify");
      cert.evidence = verifyCertificate(s.space, s.map, cert, localPairSampler(s.space, s.epsilon),
                                        s.samples, s.tol, s.seed);
      out << certificateJson(cert);
      if (cert.evidence->violations > 0) {
        err << "verification failed: " << cert.evidence->violations << " of "
            << cert.evidence->samples << " pairs exceed k + tol (max ratio "
            << formatReal(cert.evidence->maxRatio) << ")\n";
        return static_cast<int>(ErrorClass::Verification);
      }
      return 0;
    }
    case Command::Chain: {
      const Certificate cert = certificateFor(s, "chain");
      const Point from = parsePoint(requireFlag(flags.from, "from", "chain"));
      const Point to = parsePoint(requireFlag(flags.to, "to", "chain"));
      const ChainTrace trace = chainBound(s.space, s.map, cert, from, to);
      out << chainTraceCsv(trace);
      if (!trace.allStepsOk() || !trace.directOk) {
        err << "chain bound failed: " << trace.violations().size() << " step violations, direct H "
            << formatReal(trace.directHausdorff) << " vs k*d " << formatReal(cert.k * trace.distance)
            << '\n';
        return static_cast<int>(ErrorClass::Verification);
      }
      return 0;
    }
    case Command::Iterate: {
      const Point start = parsePoint(requireFlag(flags.start, "start", "iterate"));
      IterationLog log;
      if (flags.local) {
        const Certificate cert = certificateFor(s, "iterate --local");
        log = localIterate(s.space, s.map, cert, {}, start, flags.maxIter, s.tol);
      } else {
        const double k = s.gauge ? deriveConstant(*s.gauge, s.epsilon, s.lambda).k : 0.0;
        log = nadlerIterate(s.space, s.map, start, k, flags.maxIter, s.tol);
      }
      out << iterationLogCsv(log);
      if (!log.converged) {
        err << "MaxIterExceeded: residual " << formatReal(log.residuals.back()) << " after "
            << log.iterations << " iterations\n";
        return static_cast<int>(ErrorClass::Runtime);
      }
      return 0;
    }
    case Command::Chainability: {
      const auto points = chainabilitySample(s);
      const Chainability report = isEpsilonChainable(points, s.space, s.epsilon);
      out << chainabilityJson(report, points.size(), s.epsilon);
      if (!report.chainable) {
        err << "NotChainable: " << report.components << " epsilon-components in the sample\n";
        return static_cast<int>(ErrorClass::Runtime);
      }
      return 0;
    }
  }
  return static_cast<int>(ErrorClass::Runtime);
}

}  // namespace

std::optional<Command> parseCommand(std::string_view name) {
  if (name == "reduce") return Command::Reduce;
  if (name == "verify") return Command::Verify;
  if (name == "chain") return Command::Chain;
  if (name == "iterate") return Command::Iterate;
  if (name == "chainability") return Command::Chainability;
  return std::nullopt;
}

int run(Command command, const Scenario& scenario, const Flags& flags, std::ostream& out,
        std::ostream& err) {
  try {
    return runChecked(command, scenario, flags, out, err);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return static_cast<int>(classify(e.code()));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ErrorClass::Runtime);
  }
}

int runFile(Command command, const std::string& scenarioPath, const Flags& flags,
            std::ostream& out, std::ostream& err) {
  try {
    const Scenario scenario = loadScenario(scenarioPath);
    return run(command, scenario, flags, out, err);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return static_cast<int>(classify(e.code()));
  }
}

}  // namespace mvfix::cli
