#pragma once

// Contact metric structure of R^{2n+1}(-3) and space-form curvature.
//
// Tangent vectors are stored in the orthonormal frame
//   X_i = 2 d/dy^i,  X_{n+i} = phi X_i = 2 (d/dx^i + y^i d/dz),  xi = 2 d/dz,
// in which the Levi-Civita connection has constant coefficients. Coordinates
// only appear at the I/O boundary (coord_to_frame / frame_to_coord).

#include <cstddef>
#include <span>
#include <vector>

namespace sasaki {

/// Half-dimension n of the ambient space R^{2n+1}.
class Dimension {
 public:
  explicit Dimension(int n);
  int value() const noexcept { return n_; }
  int ambient() const noexcept { return 2 * n_ + 1; }
  friend bool operator==(Dimension, Dimension) = default;

 private:
  int n_;
};

struct CoordPoint {
  std::vector<double> x;
  std::vector<double> y;
  double z = 0.0;

  static CoordPoint origin(Dimension n);
  std::size_t dim() const noexcept { return x.size(); }
};

struct CoordVelocity {
  std::vector<double> dx;
  std::vector<double> dy;
  double dz = 0.0;

  std::size_t dim() const noexcept { return dx.size(); }
};

/// Components (a_i, b_i, f) of a vector in the frame {X_i, X_{n+i}, xi}.
struct FrameVector {
  std::vector<double> a;
  std::vector<double> b;
  double f = 0.0;

  FrameVector() = default;
  explicit FrameVector(Dimension n);
  FrameVector(std::vector<double> a_, std::vector<double> b_, double f_);

  static FrameVector zero(Dimension n) { return FrameVector(n); }
  static FrameVector xi(Dimension n);
  /// X_i for 1 <= i <= n, X_{n+(i-n)} for n < i <= 2n, xi for i = 2n+1.
  static FrameVector basis(Dimension n, int index_one_based);

  std::size_t dim() const noexcept { return a.size(); }
  Dimension dimension() const { return Dimension(static_cast<int>(a.size())); }

  FrameVector& operator+=(const FrameVector& o);
  FrameVector& operator-=(const FrameVector& o);
  FrameVector& operator*=(double s);

  /// Largest absolute component.
  double max_abs() const noexcept;
};

FrameVector operator+(FrameVector u, const FrameVector& v);
FrameVector operator-(FrameVector u, const FrameVector& v);
FrameVector operator-(FrameVector u);
FrameVector operator*(double s, FrameVector v);
FrameVector operator*(FrameVector v, double s);

/// Throws Error(DimensionMismatch) unless all arguments share n.
void require_same_dim(const FrameVector& u, const FrameVector& v);

/// eta = 1/2 (dz - sum y^i dx^i).
double eta_coord(const CoordPoint& p, const CoordVelocity& v);

FrameVector coord_to_frame(const CoordPoint& p, const CoordVelocity& v);
CoordVelocity frame_to_coord(const CoordPoint& p, const FrameVector& w);

double g_frame(const FrameVector& u, const FrameVector& v);
double norm(const FrameVector& v);
/// phi(a, b, f) = (-b, a, 0).
FrameVector phi_frame(const FrameVector& v);
inline double eta_frame(const FrameVector& v) noexcept { return v.f; }

/// Connection coefficients Gamma(T, V) = nabla_T V for constant-coefficient V.
///
/// Assembled from
///   nabla_{X_i} X_{n+j} = delta_ij xi,   nabla_{X_{n+i}} X_j = -delta_ij xi,
///   nabla_{X_i} xi = nabla_xi X_i = -X_{n+i},
///   nabla_{X_{n+i}} xi = nabla_xi X_{n+i} = X_i,   nabla_xi xi = 0,
/// all other pairs zero. Bilinear in (T, V).
FrameVector connection(const FrameVector& t, const FrameVector& v);

/// Covariant derivative along a curve with tangent t of a field whose frame
/// components are v with arc-length derivative v_prime.
FrameVector cov_deriv_along(const FrameVector& t, const FrameVector& v, const FrameVector& v_prime);

/// Lie bracket of constant-coefficient frame fields: 2 sum(u_i v_{n+i} - u_{n+i} v_i) xi.
FrameVector bracket(const FrameVector& u, const FrameVector& v);

/// Curvature tensor R(X,Y)Z of a Sasakian space form of constant
/// phi-sectional curvature c (full seven-term formula).
FrameVector curvature_space_form(double c, const FrameVector& x, const FrameVector& y,
                                 const FrameVector& z);

/// R(U,V)W = nabla_U nabla_V W - nabla_V nabla_U W - nabla_[U,V] W computed from
/// the connection table; valid for the c = -3 model only.
FrameVector curvature_from_connection(const FrameVector& u, const FrameVector& v,
                                      const FrameVector& w);

/// Connection used by the checks in the self-check suite; the default is the
/// table above. Swapping it lets tests feed a deliberately broken table.
using ConnectionFn = FrameVector (*)(const FrameVector&, const FrameVector&);

FrameVector curvature_from_connection(ConnectionFn gamma, const FrameVector& u,
                                      const FrameVector& v, const FrameVector& w);

}  // namespace sasaki
