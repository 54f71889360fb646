#pragma once

#include <array>
#include <optional>
#include <vector>

#include "sasaki/model.hpp"

namespace sasaki {

/// Frame components of T = gamma' and its first three ordinary arc-length
/// derivatives at parameter s.
struct Jet4 {
  double s = 0.0;
  FrameVector t;
  FrameVector dt;
  FrameVector d2t;
  FrameVector d3t;
};

/// Iterated covariant derivatives of T along the curve.
struct CovariantJet {
  FrameVector h;   // nabla_T T (mean curvature vector)
  FrameVector d2;  // nabla_T^2 T
  FrameVector d3;  // nabla_T^3 T
};

/// Exact polynomial evaluation of H, nabla_T^2 T and nabla_T^3 T from the jet,
/// using the constancy of the connection coefficients in the frame.
CovariantJet covariant_jet(const Jet4& j);

struct FrenetOptions {
  /// Curvature rank threshold. kappa_1 is compared absolutely, higher
  /// curvatures relative to kappa_1. Values in [rank_tol/10, rank_tol] are
  /// treated as ambiguous and raise DegenerateFrame.
  double rank_tol = 1e-7;
  double unit_speed_tol = 1e-8;
};

struct FrenetData {
  std::vector<FrameVector> e;   // E_1 .. E_order (at most 4)
  std::vector<double> kappa;    // kappa_1 .. kappa_{order-1}
  /// Osculating order; 4 means "at least 4" since only E_1..E_4 are built.
  int order = 1;
  /// kappa_1' = g(nabla^2 T, E_2), exact from the jet (0 for order 1).
  double kappa1_prime = 0.0;
  /// kappa_2' = (g(nabla^3 T, E_3) - 2 kappa_1' kappa_2) / kappa_1 (0 below order 3).
  double kappa2_prime = 0.0;

  double kappa_or_zero(int index_one_based) const {
    const auto i = static_cast<std::size_t>(index_one_based - 1);
    return i < kappa.size() ? kappa[i] : 0.0;
  }
};

FrenetData frenet_apparatus(const Jet4& j, const CovariantJet& cj, const FrenetOptions& opts = {});

/// Scalars f = eta(T), f', alpha = g(E_2, phi T), g(E_3, phi T), g(E_4, phi T)
/// and eta(E_j). Entries beyond the osculating order are 0 and flagged absent.
struct StructureScalars {
  double f = 0.0;
  double fprime = 0.0;
  double alpha = 0.0;
  double g3 = 0.0;
  double g4 = 0.0;
  double eta2 = 0.0;
  double eta3 = 0.0;
  double eta4 = 0.0;
  /// Highest E_j index whose scalars are present (1..4).
  int present_up_to = 1;
  /// kappa_1 eta(E_2): the second route to f'.
  double fprime_from_frame = 0.0;
  /// Set when the two routes to f' disagree by more than 1e-6.
  bool fprime_warning = false;

  bool has(int e_index) const noexcept { return e_index <= present_up_to; }
};

StructureScalars structure_scalars(const Jet4& j, const FrenetData& fd);

/// Convenience: covariant jet, Frenet apparatus and scalars in one call.
struct PointGeometry {
  Jet4 jet;
  CovariantJet cov;
  FrenetData frenet;
  StructureScalars scalars;
};

PointGeometry analyze_point(const Jet4& j, const FrenetOptions& opts = {});

}  // namespace sasaki
