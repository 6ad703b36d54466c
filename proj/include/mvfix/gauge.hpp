#pragma once

#include <optional>
#include <string>
#include <vector>

namespace mvfix {

/// alpha(t) = c0 + c1 * t on [start, end).
struct GaugePiece {
  double start;
  double end;
  double c0;
  double c1;

  double at(double t) const noexcept { return c0 + c1 * t; }
};

/// Piecewise-affine gauge alpha: [0, inf) -> [0, 1). The pieces cover
/// [0, tailStart) contiguously; alpha is the constant tailValue from tailStart on.
///
/// Construction only checks structure (MalformedPieces). Range and the
/// right-limsup condition are checked by validateGauge.
class Gauge {
 public:
  Gauge(std::vector<GaugePiece> pieces, double tailStart, double tailValue);

  static Gauge constant(double value) { return Gauge({}, 0.0, value); }

  const std::vector<GaugePiece>& pieces() const noexcept { return pieces_; }
  double tailStart() const noexcept { return tailStart_; }
  double tailValue() const noexcept { return tailValue_; }

  double operator()(double t) const;

  /// Largest |c1| over the pieces; zero for a constant gauge.
  double lipschitz() const noexcept;

 private:
  std::vector<GaugePiece> pieces_;
  double tailStart_;
  double tailValue_;
};

enum class GaugeViolationKind { Range, Limsup };

struct GaugeViolation {
  GaugeViolationKind kind;
  double at;  // location in [0, inf) where the condition fails
  std::string message;
};

/// Empty when alpha maps into [0,1) and limsup_{s->t+} alpha(s) < 1 for all t.
std::vector<GaugeViolation> validateGauge(const Gauge& g);

/// Throws InvalidGauge carrying the first violation.
void requireValidGauge(const Gauge& g);

/// sup{alpha(t) : 0 <= t <= p}. Unattained left limits at piece ends count,
/// so the result may be exactly 1.
double supAlpha(const Gauge& g, double p);

/// Running supremum S(p) = sup{alpha(t) : 0 <= t <= p}.
///
/// Stored as one record per gauge piece: the sup over everything left of the
/// piece, so that inside piece i, S(p) = max(before[i], alpha(start_i), alpha(p)).
class SupProfile {
 public:
  struct Knot {
    double start;
    double end;        // tail knot has end = +inf
    double before;     // sup of alpha over [0, start), left limits included
    double c0;
    double c1;
  };

  explicit SupProfile(const Gauge& g);

  double at(double p) const;
  const std::vector<Knot>& knots() const noexcept { return knots_; }

  /// p0 = min{p > 0 : S(p) = 1}; empty when S < 1 everywhere.
  std::optional<double> reachOne() const noexcept { return reachOne_; }

 private:
  std::vector<Knot> knots_;
  std::optional<double> reachOne_;
};

/// Requires a valid gauge.
SupProfile supProfile(const Gauge& g);

}  // namespace mvfix
