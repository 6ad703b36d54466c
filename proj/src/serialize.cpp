#include "mvfix/serialize.hpp"

#include <sstream>

namespace mvfix {

namespace {

std::string jsonPoint(const Point& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += formatReal(p[i]);
  }
  return out + "]";
}

template <class Range, class Format>
std::string jsonArray(const Range& values, Format format) {
  std::string out = "[";
  bool first = true;
  for (const auto& v : values) {
    if (!first) out += ',';
    first = false;
    out += format(v);
  }
  return out + "]";
}

const char* boolText(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string certificateJson(const Certificate& cert) {
  std::ostringstream os;
  os << "{\"epsilon\":" << formatReal(cert.epsilon) << ",\"q\":" << formatReal(cert.q)
     << ",\"k\":" << formatReal(cert.k) << ",\"case\":\""
     << (cert.caseTag == ReductionCase::Case1 ? "Case1" : "Case2") << "\",\"p0\":"
     << (cert.p0 ? formatReal(*cert.p0) : "null") << ",\"lambda\":" << formatReal(cert.lambda);
  if (cert.evidence) {
    const auto& ev = *cert.evidence;
    os << ",\"maxRatio\":" << formatReal(ev.maxRatio) << ",\"violations\":" << ev.violations
       << ",\"worstPair\":[" << jsonPoint(ev.worstPair.first) << ','
       << jsonPoint(ev.worstPair.second) << ']';
  } else {
    os << ",\"maxRatio\":null,\"violations\":null,\"worstPair\":null";
  }
  os << "}\n";
  return os.str();
}

std::string chainTraceJson(const ChainTrace& trace) {
  auto real = [](double v) { return formatReal(v); };
  std::ostringstream os;
  os << "{\"distance\":" << formatReal(trace.distance)
     << ",\"breakpoints\":" << jsonArray(trace.breakpoints, real)
     << ",\"points\":" << jsonArray(trace.points, jsonPoint)
     << ",\"stepDistances\":" << jsonArray(trace.stepDistances, real)
     << ",\"stepHausdorff\":" << jsonArray(trace.stepHausdorff, real)
     << ",\"stepOk\":" << jsonArray(trace.stepOk, [](bool b) { return std::string(boolText(b)); })
     << ",\"totalBound\":" << formatReal(trace.totalBound)
     << ",\"directHausdorff\":" << formatReal(trace.directHausdorff)
     << ",\"directOk\":" << boolText(trace.directOk) << "}\n";
  return os.str();
}

std::string chainTraceCsv(const ChainTrace& trace) {
  std::ostringstream os;
  os << "index,parameter,step_distance,step_hausdorff,bound_ok\n";
  for (std::size_t i = 0; i < trace.breakpoints.size(); ++i) {
    os << i << ',' << formatReal(trace.breakpoints[i]);
    if (i == 0)
      os << ",,,";
    else
      os << ',' << formatReal(trace.stepDistances[i - 1]) << ','
         << formatReal(trace.stepHausdorff[i - 1]) << ',' << boolText(trace.stepOk[i - 1]);
    os << '\n';
  }
  return os.str();
}

std::string iterationLogCsv(const IterationLog& log) {
  std::ostringstream os;
  os << "iteration,point,step_distance,residual\n";
  for (std::size_t i = 0; i < log.iterates.size(); ++i) {
    os << i << ',' << formatPoint(log.iterates[i]) << ',';
    if (i < log.stepDistances.size()) os << formatReal(log.stepDistances[i]);
    os << ',' << formatReal(log.residuals[i]) << '\n';
  }
  return os.str();
}

std::string chainabilityJson(const Chainability& report, std::size_t points, double epsilon) {
  std::ostringstream os;
  os << "{\"epsilon\":" << formatReal(epsilon) << ",\"points\":" << points
     << ",\"components\":" << report.components << ",\"chainable\":" << boolText(report.chainable)
     << "}\n";
  return os.str();
}

}  // namespace mvfix
