#include "mvfix/gauge.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mvfix/error.hpp"
#include "mvfix/point.hpp"

namespace mvfix {

Gauge::Gauge(std::vector<GaugePiece> pieces, double tailStart, double tailValue)
    : pieces_(std::move(pieces)), tailStart_(tailStart), tailValue_(tailValue) {
  auto malformed = [](const std::string& what) { throw Error(ErrorCode::MalformedPieces, what); };
  if (!std::isfinite(tailStart_) || !std::isfinite(tailValue_))
    malformed("tail must be finite");
  double cursor = 0.0;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const auto& p = pieces_[i];
    if (!std::isfinite(p.start) || !std::isfinite(p.end) || !std::isfinite(p.c0) ||
        !std::isfinite(p.c1))
      malformed("piece " + std::to_string(i) + " has non-finite fields");
    if (p.start != cursor)
      malformed("piece " + std::to_string(i) + " starts at " + formatReal(p.start) +
                ", expected " + formatReal(cursor) + (i ? " (gap or overlap)" : ""));
    if (!(p.start < p.end)) malformed("piece " + std::to_string(i) + " is empty");
    cursor = p.end;
  }
  if (tailStart_ != cursor)
    malformed("tailStart " + formatReal(tailStart_) + " does not close the pieces at " +
              formatReal(cursor));
}

double Gauge::operator()(double t) const {
  if (t < 0.0) throw Error(ErrorCode::OutOfDomain, "gauge evaluated at negative t");
  if (t >= tailStart_) return tailValue_;
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), t,
                             [](double v, const GaugePiece& p) { return v < p.end; });
  return it->at(t);
}

double Gauge::lipschitz() const noexcept {
  double l = 0.0;
  for (const auto& p : pieces_) l = std::max(l, std::fabs(p.c1));
  return l;
}

namespace {

// First p at which the running sup hits 1, scanning left to right. Works on
// unvalidated gauges so validateGauge can use it.
std::optional<double> firstReachOne(const Gauge& g) {
  for (const auto& p : g.pieces()) {
    if (p.at(p.start) >= 1.0) return p.start;
    if (p.at(p.end) >= 1.0) return p.end;
  }
  if (g.tailValue() >= 1.0) return g.tailStart();
  return std::nullopt;
}

}  // namespace

std::vector<GaugeViolation> validateGauge(const Gauge& g) {
  std::vector<GaugeViolation> out;

  for (const auto& p : g.pieces()) {
    const double head = p.at(p.start);
    const double leftLimit = p.at(p.end);
    if (head < 0.0 || head >= 1.0)
      out.push_back({GaugeViolationKind::Range, p.start,
                     "alpha(" + formatReal(p.start) + ") = " + formatReal(head) +
                         " outside [0,1)"});
    if (head >= 1.0 && p.start != 0.0)
      out.push_back({GaugeViolationKind::Limsup, p.start,
                     "right limit " + formatReal(head) + " at " + formatReal(p.start) +
                         " is not < 1"});
    if (leftLimit < 0.0 || leftLimit > 1.0)
      out.push_back({GaugeViolationKind::Range, p.end,
                     "alpha -> " + formatReal(leftLimit) + " as t -> " + formatReal(p.end) +
                         "-, leaves [0,1]"});
  }
  const double tail = g.tailValue();
  if (tail < 0.0 || tail >= 1.0)
    out.push_back({GaugeViolationKind::Range, g.tailStart(),
                   "tail value " + formatReal(tail) + " outside [0,1)"});
  if (tail >= 1.0 && g.tailStart() != 0.0)
    out.push_back({GaugeViolationKind::Limsup, g.tailStart(),
                   "limsup " + formatReal(tail) + " on the tail is not < 1"});

  const auto p0 = firstReachOne(g);
  if (p0 && *p0 == 0.0)
    out.push_back({GaugeViolationKind::Limsup, 0.0,
                   "running sup of alpha reaches 1 at p = 0, so limsup at 0+ is not < 1"});
  // Range problems first: they are the more specific diagnosis.
  std::stable_partition(out.begin(), out.end(),
                        [](const GaugeViolation& v) { return v.kind == GaugeViolationKind::Range; });
  return out;
}

void requireValidGauge(const Gauge& g) {
  auto violations = validateGauge(g);
  if (!violations.empty())
    throw Error(ErrorCode::InvalidGauge,
                std::string(violations.front().kind == GaugeViolationKind::Range ? "range"
                                                                                  : "limsup") +
                    " violation: " + violations.front().message);
}

double supAlpha(const Gauge& g, double p) {
  if (!(p > 0.0)) throw Error(ErrorCode::NonPositiveP, "supAlpha needs p > 0");
  double sup = 0.0;
  for (const auto& piece : g.pieces()) {
    if (piece.start > p) break;
    sup = std::max(sup, piece.at(piece.start));
    // p inside the piece is attained; past it only the left limit at end counts.
    sup = std::max(sup, p < piece.end ? piece.at(p) : piece.at(piece.end));
  }
  if (p >= g.tailStart()) sup = std::max(sup, g.tailValue());
  return sup;
}

SupProfile::SupProfile(const Gauge& g) : reachOne_(firstReachOne(g)) {
  double running = 0.0;
  for (const auto& p : g.pieces()) {
    knots_.push_back({p.start, p.end, running, p.c0, p.c1});
    running = std::max({running, p.at(p.start), p.at(p.end)});
  }
  knots_.push_back(
      {g.tailStart(), std::numeric_limits<double>::infinity(), running, g.tailValue(), 0.0});
}

double SupProfile::at(double p) const {
  if (p < 0.0) throw Error(ErrorCode::NonPositiveP, "running sup evaluated at negative p");
  auto it = std::upper_bound(knots_.begin(), knots_.end(), p,
                             [](double v, const Knot& k) { return v < k.end; });
  const double head = it->c0 + it->c1 * it->start;
  const double here = it->c0 + it->c1 * p;
  return std::max({it->before, head, here});
}

SupProfile supProfile(const Gauge& g) {
  requireValidGauge(g);
  return SupProfile(g);
}

}  // namespace mvfix
