#pragma once

#include "sasaki/generators.hpp"
#include "sasaki/sampled_curve.hpp"

namespace sasaki {

struct Span {
  double s0 = 0.0;
  double s1 = 10.0;
};

/// Integrates the first-order system for the frame components of T together
/// with dx = 2 T_b, dy = 2 T_a, dz = 2 f + sum y dx by classical RK4 at a fixed
/// step, starting from the closed-form state at span.s0.
///
/// H parallel to phi T:       T_a' = -mu T_b,  T_b' = mu T_a.
/// H perpendicular to phi T:  T_a' = P - 2 f T_b,  T_b' = Q + 2 f T_a,
///                            P' = -f Q,  Q' = f P,  with (P, Q) = H.
///
/// h is shrunk so that the span holds a whole number of steps. Throws
/// StepTooLarge when |g(T,T) - 1| drifts by more than 1e-8 per unit length.
/// When max_drift is given it receives the largest |g(T,T) - 1| seen.
SampledCurve gen_by_ode(const GeneratorParams& p, double h, const Span& span, double* max_drift = nullptr);

}  // namespace sasaki
