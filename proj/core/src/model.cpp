#include "sasaki/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sasaki/errors.hpp"

namespace sasaki {

Dimension::Dimension(int n) : n_(n) {
  if (n < 1) throw Error(ErrorCode::BadDimension, "n must be >= 1, got " + std::to_string(n));
}

CoordPoint CoordPoint::origin(Dimension n) {
  const auto k = static_cast<std::size_t>(n.value());
  return CoordPoint{std::vector<double>(k, 0.0), std::vector<double>(k, 0.0), 0.0};
}

FrameVector::FrameVector(Dimension n)
    : a(static_cast<std::size_t>(n.value()), 0.0), b(static_cast<std::size_t>(n.value()), 0.0) {}

FrameVector::FrameVector(std::vector<double> a_, std::vector<double> b_, double f_)
    : a(std::move(a_)), b(std::move(b_)), f(f_) {
  if (a.size() != b.size() || a.empty()) {
    throw Error(ErrorCode::DimensionMismatch, "a and b must have the same positive length");
  }
}

FrameVector FrameVector::xi(Dimension n) {
  FrameVector v(n);
  v.f = 1.0;
  return v;
}

FrameVector FrameVector::basis(Dimension n, int index_one_based) {
  const int k = n.value();
  if (index_one_based < 1 || index_one_based > 2 * k + 1) {
    throw Error(ErrorCode::BadDimension, "basis index out of range");
  }
  FrameVector v(n);
  if (index_one_based <= k) {
    v.a[static_cast<std::size_t>(index_one_based - 1)] = 1.0;
  } else if (index_one_based <= 2 * k) {
    v.b[static_cast<std::size_t>(index_one_based - k - 1)] = 1.0;
  } else {
    v.f = 1.0;
  }
  return v;
}

void require_same_dim(const FrameVector& u, const FrameVector& v) {
  if (u.a.size() != v.a.size() || u.b.size() != v.b.size() || u.a.size() != u.b.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "frame vectors of dimension " + std::to_string(u.a.size()) + " and " +
                    std::to_string(v.a.size()));
  }
}

FrameVector& FrameVector::operator+=(const FrameVector& o) {
  require_same_dim(*this, o);
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i] += o.a[i];
    b[i] += o.b[i];
  }
  f += o.f;
  return *this;
}

FrameVector& FrameVector::operator-=(const FrameVector& o) {
  require_same_dim(*this, o);
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i] -= o.a[i];
    b[i] -= o.b[i];
  }
  f -= o.f;
  return *this;
}

FrameVector& FrameVector::operator*=(double s) {
  for (auto& v : a) v *= s;
  for (auto& v : b) v *= s;
  f *= s;
  return *this;
}

double FrameVector::max_abs() const noexcept {
  double m = std::abs(f);
  for (double v : a) m = std::max(m, std::abs(v));
  for (double v : b) m = std::max(m, std::abs(v));
  return m;
}

FrameVector operator+(FrameVector u, const FrameVector& v) { return u += v; }
FrameVector operator-(FrameVector u, const FrameVector& v) { return u -= v; }
FrameVector operator-(FrameVector u) { return u *= -1.0; }
FrameVector operator*(double s, FrameVector v) { return v *= s; }
FrameVector operator*(FrameVector v, double s) { return v *= s; }

namespace {

void require_point_velocity(const CoordPoint& p, std::size_t n) {
  if (p.x.size() != n || p.y.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "point and vector dimensions differ");
  }
}

}  // namespace

double eta_coord(const CoordPoint& p, const CoordVelocity& v) {
  require_point_velocity(p, v.dx.size());
  if (v.dy.size() != v.dx.size()) throw Error(ErrorCode::DimensionMismatch, "dx and dy differ");
  double s = v.dz;
  for (std::size_t i = 0; i < v.dx.size(); ++i) s -= p.y[i] * v.dx[i];
  return 0.5 * s;
}

FrameVector coord_to_frame(const CoordPoint& p, const CoordVelocity& v) {
  const double f = eta_coord(p, v);
  const std::size_t n = v.dx.size();
  FrameVector w(Dimension(static_cast<int>(n)));
  for (std::size_t i = 0; i < n; ++i) {
    w.a[i] = 0.5 * v.dy[i];
    w.b[i] = 0.5 * v.dx[i];
  }
  w.f = f;
  return w;
}

CoordVelocity frame_to_coord(const CoordPoint& p, const FrameVector& w) {
  require_point_velocity(p, w.dim());
  const std::size_t n = w.dim();
  CoordVelocity v{std::vector<double>(n), std::vector<double>(n), 2.0 * w.f};
  for (std::size_t i = 0; i < n; ++i) {
    v.dx[i] = 2.0 * w.b[i];
    v.dy[i] = 2.0 * w.a[i];
    v.dz += p.y[i] * v.dx[i];
  }
  return v;
}

double g_frame(const FrameVector& u, const FrameVector& v) {
  require_same_dim(u, v);
  double s = u.f * v.f;
  for (std::size_t i = 0; i < u.a.size(); ++i) s += u.a[i] * v.a[i] + u.b[i] * v.b[i];
  return s;
}

double norm(const FrameVector& v) { return std::sqrt(g_frame(v, v)); }

FrameVector phi_frame(const FrameVector& v) {
  FrameVector w(v.dimension());
  for (std::size_t i = 0; i < v.a.size(); ++i) {
    w.a[i] = -v.b[i];
    w.b[i] = v.a[i];
  }
  return w;
}

FrameVector connection(const FrameVector& t, const FrameVector& v) {
  require_same_dim(t, v);
  FrameVector out(t.dimension());
  double xi_part = 0.0;
  for (std::size_t i = 0; i < t.a.size(); ++i) {
    out.a[i] = t.b[i] * v.f + t.f * v.b[i];
    out.b[i] = -t.a[i] * v.f - t.f * v.a[i];
    xi_part += t.a[i] * v.b[i] - t.b[i] * v.a[i];
  }
  out.f = xi_part;
  return out;
}

FrameVector cov_deriv_along(const FrameVector& t, const FrameVector& v, const FrameVector& v_prime) {
  require_same_dim(v, v_prime);
  return v_prime + connection(t, v);
}

FrameVector bracket(const FrameVector& u, const FrameVector& v) {
  require_same_dim(u, v);
  FrameVector out(u.dimension());
  double s = 0.0;
  for (std::size_t i = 0; i < u.a.size(); ++i) s += u.a[i] * v.b[i] - u.b[i] * v.a[i];
  out.f = 2.0 * s;
  return out;
}

FrameVector curvature_space_form(double c, const FrameVector& x, const FrameVector& y,
                                 const FrameVector& z) {
  require_same_dim(x, y);
  require_same_dim(x, z);
  const Dimension n = x.dimension();
  const FrameVector xi = FrameVector::xi(n);
  const FrameVector phi_x = phi_frame(x);
  const FrameVector phi_y = phi_frame(y);
  const FrameVector phi_z = phi_frame(z);

  const double gzy = g_frame(z, y);
  const double gzx = g_frame(z, x);
  const double ex = x.f, ey = y.f, ez = z.f;

  FrameVector r = ((c + 3.0) / 4.0) * (gzy * x - gzx * y);
  FrameVector s = ez * ex * y;
  s -= ez * ey * x;
  s += (gzx * ey) * xi;
  s -= (gzy * ex) * xi;
  s += g_frame(z, phi_y) * phi_x;
  s -= g_frame(z, phi_x) * phi_y;
  s += (2.0 * g_frame(x, phi_y)) * phi_z;
  r += ((c - 1.0) / 4.0) * s;
  return r;
}

FrameVector curvature_from_connection(ConnectionFn gamma, const FrameVector& u,
                                      const FrameVector& v, const FrameVector& w) {
  require_same_dim(u, v);
  require_same_dim(u, w);
  // For constant-coefficient fields nabla_V W = gamma(V, W) is again constant,
  // so the second covariant derivative is a second application of gamma.
  FrameVector r = gamma(u, gamma(v, w));
  r -= gamma(v, gamma(u, w));
  r -= gamma(bracket(u, v), w);
  return r;
}

FrameVector curvature_from_connection(const FrameVector& u, const FrameVector& v,
                                      const FrameVector& w) {
  return curvature_from_connection(&connection, u, v, w);
}

}  // namespace sasaki
