#pragma once

#include <string>
#include <vector>

namespace sasaki {

/// One harmonic a cos(w s) + b sin(w s), w > 0 after canonicalization.
struct TrigTerm {
  double freq = 0.0;
  double cos_amp = 0.0;
  double sin_amp = 0.0;
};

/// Closed-form scalar function of arc length
///
///   p(s) = c0 + lin * s + sum_k (cos_amp_k cos(freq_k s) + sin_amp_k sin(freq_k s)).
///
/// Canonical form: frequencies strictly positive and sorted, entries closer
/// than `kFreqMergeTol` (relative) merged, zero-frequency parts folded into c0.
/// Differentiation is always exact; antiderivatives and products are exact
/// whenever the result stays in the family and throw NotRepresentable when it
/// would need s^2 or s*cos(ws) terms.
class TrigPoly {
 public:
  static constexpr double kFreqMergeTol = 1e-12;

  TrigPoly() = default;
  explicit TrigPoly(double constant) : c0_(constant) {}

  static TrigPoly constant(double c) { return TrigPoly(c); }
  static TrigPoly linear(double c0, double slope);
  static TrigPoly cosine(double freq, double amp = 1.0);
  static TrigPoly sine(double freq, double amp = 1.0);

  double c0() const noexcept { return c0_; }
  double lin() const noexcept { return lin_; }
  const std::vector<TrigTerm>& terms() const noexcept { return terms_; }

  /// Adds a harmonic (any sign of freq; canonicalized on insert).
  TrigPoly& add_term(double freq, double cos_amp, double sin_amp);

  double operator()(double s) const;
  /// k-th derivative evaluated at s.
  double derivative_at(int k, double s) const;

  TrigPoly derivative() const;
  /// Antiderivative with zero trigonometric phase constant: the c0 of the
  /// result is 0 and each harmonic integrates in place.
  TrigPoly antiderivative() const;

  bool is_zero() const noexcept;
  /// Smallest positive frequency, or 0 if there are no harmonics.
  double lowest_frequency() const noexcept;
  double highest_frequency() const noexcept;
  /// Largest absolute coefficient (c0, lin, harmonic amplitudes).
  double max_coefficient() const noexcept;

  TrigPoly& operator+=(const TrigPoly& o);
  TrigPoly& operator-=(const TrigPoly& o);
  TrigPoly& operator*=(double s);

  friend TrigPoly operator+(TrigPoly p, const TrigPoly& q) { return p += q; }
  friend TrigPoly operator-(TrigPoly p, const TrigPoly& q) { return p -= q; }
  friend TrigPoly operator*(double s, TrigPoly p) { return p *= s; }
  friend TrigPoly operator*(TrigPoly p, double s) { return p *= s; }
  /// Product-to-sum expansion.
  friend TrigPoly operator*(const TrigPoly& p, const TrigPoly& q);

  std::string to_string() const;

 private:
  void canonicalize();

  double c0_ = 0.0;
  double lin_ = 0.0;
  std::vector<TrigTerm> terms_;
};

/// Largest coefficient-level difference between two polys, after matching
/// frequencies within the merge tolerance.
double max_coefficient_diff(const TrigPoly& p, const TrigPoly& q);

/// Term-by-term comparison record used when checking transcribed formulas.
struct CoefficientDiff {
  std::string what;  // "c0", "lin", or "freq=<w>"
  double expected_cos = 0.0;
  double actual_cos = 0.0;
  double expected_sin = 0.0;
  double actual_sin = 0.0;
};

/// All coefficients that differ by more than tol (c0 is skipped when
/// ignore_constant is set, since it carries the free integration constant).
std::vector<CoefficientDiff> coefficient_diffs(const TrigPoly& expected, const TrigPoly& actual,
                                               double tol, bool ignore_constant);

}  // namespace sasaki
