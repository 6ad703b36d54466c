#pragma once

#include <string>

#include "mvfix/fixedpoint.hpp"
#include "mvfix/reduction.hpp"

namespace mvfix {

// All reals are written with 17 significant digits.

/// {"epsilon","q","k","case","p0","lambda","maxRatio","violations","worstPair"};
/// the evidence fields are null until the certificate has been verified.
std::string certificateJson(const Certificate& cert);

std::string chainTraceJson(const ChainTrace& trace);

/// index,parameter,step_distance,step_hausdorff,bound_ok; row i carries the
/// step ending at breakpoint i, row 0 has empty step columns.
std::string chainTraceCsv(const ChainTrace& trace);

/// iteration,point,step_distance,residual; the last row has no step.
std::string iterationLogCsv(const IterationLog& log);

std::string chainabilityJson(const Chainability& report, std::size_t points, double epsilon);

}  // namespace mvfix
