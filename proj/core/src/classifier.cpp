#include "sasaki/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "sasaki/bitension.hpp"
#include "sasaki/errors.hpp"

namespace sasaki {

namespace {

constexpr double kPi = std::numbers::pi;

bool near(double v, double target) { return std::abs(v - target) < AngleParams::kExclusionMargin; }

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

std::vector<int> branches(const AngleParams& angles) {
  if (angles.sign) return {*angles.sign};
  return {-1, 1};
}

double require_beta0(const AngleParams& angles) {
  if (!angles.beta0) throw Error(ErrorCode::MalformedInput, "beta0 is required");
  angles.validate();
  return *angles.beta0;
}

void require_c_not_one(double c) {
  if (c == 1.0) throw Error(ErrorCode::CIsOne, "use classify_c1 for c = 1");
}

// Residuals of the c != 1 system at constant contact angle, with the
// structure scalars each mode implies.
SystemResiduals residuals_at(double c, double cos_b, double alpha, double k1, double k2) {
  FrenetData fd;
  fd.kappa = {k1};
  fd.order = 2;
  if (k2 > 0.0) {
    fd.kappa.push_back(k2);
    fd.order = 3;
  }
  StructureScalars ss;
  ss.f = cos_b;
  ss.alpha = alpha;
  ss.present_up_to = fd.order;
  return system_residuals(fd, ss, c);
}

}  // namespace

void AngleParams::validate() const {
  if (beta0) {
    const double b = *beta0;
    if (!(b > kExclusionMargin && b < 2.0 * kPi - kExclusionMargin) || near(b, kPi / 2) || near(b, kPi) ||
        near(b, 3 * kPi / 2)) {
      throw Error(ErrorCode::InadmissibleAngle, "beta0 = " + fmt(b) + " is excluded");
    }
  }
  if (beta1) {
    const double b = *beta1;
    if (!(b > kExclusionMargin && b < kPi - kExclusionMargin) || near(b, kPi / 2)) {
      throw Error(ErrorCode::InadmissibleAngle, "beta1 = " + fmt(b) + " is excluded");
    }
  }
  if (beta2) {
    const double b = *beta2;
    if (!(b > kExclusionMargin && b < 2.0 * kPi - kExclusionMargin)) {
      throw Error(ErrorCode::InadmissibleAngle, "beta2 = " + fmt(b) + " is excluded");
    }
  }
  if (sign && *sign != 1 && *sign != -1) throw Error(ErrorCode::MalformedInput, "sign must be +1 or -1");
}

double AngleParams::beta0_from_cos2(double cos2) {
  if (!(cos2 > 0.0 && cos2 < 1.0)) {
    throw Error(ErrorCode::InadmissibleAngle, "cos^2(beta0) must lie in (0, 1)");
  }
  return std::acos(std::sqrt(cos2));
}

const char* to_string(SolutionKind k) noexcept {
  switch (k) {
    case SolutionKind::Circle: return "circle";
    case SolutionKind::Helix: return "helix";
    case SolutionKind::Order4: return "order4";
  }
  return "?";
}

const char* to_string(Mode m) noexcept { return m == Mode::Perp ? "perp" : "par"; }

std::string ClassificationResult::kind() const {
  return solutions.empty() ? "inadmissible" : to_string(solutions.front().kind);
}

ClassificationResult classify_c1(double kappa1, std::optional<double> kappa2, std::optional<double> kappa3) {
  ClassificationResult r;
  if (kappa3 && std::abs(*kappa3) > kPositivityTol) {
    r.constraints.push_back({"kappa2*kappa3", kappa2.value_or(0.0) * *kappa3});
    r.notes.push_back("kappa_3 must vanish");
    return r;
  }
  if (!kappa2 || *kappa2 <= kPositivityTol) {
    r.constraints.push_back({"kappa1 - 1", kappa1 - 1.0});
    if (std::abs(kappa1 - 1.0) <= kPositivityTol) {
      CurveSolution s;
      s.kind = SolutionKind::Circle;
      s.label = "circle";
      s.kappa1 = kappa1;
      r.solutions.push_back(s);
    }
    return r;
  }
  const double sum = kappa1 * kappa1 + *kappa2 * *kappa2;
  r.constraints.push_back({"kappa1^2 + kappa2^2 - 1", sum - 1.0});
  if (kappa1 > kPositivityTol && std::abs(sum - 1.0) <= kPositivityTol) {
    CurveSolution s;
    s.kind = SolutionKind::Helix;
    s.label = "helix";
    s.kappa1 = kappa1;
    s.kappa2 = kappa2;
    s.kappa_sq_sum = 1.0;
    r.solutions.push_back(s);
  }
  return r;
}

ClassificationResult admissible_perp(double c, const AngleParams& angles) {
  require_c_not_one(c);
  const double b0 = require_beta0(angles);
  const double cos_b = std::cos(b0);
  const double rhs = (c + 3.0) / 4.0 - (c - 1.0) / 4.0 * cos_b * cos_b;

  ClassificationResult r;
  r.requirements.push_back("n >= 2");
  r.constraints.push_back({"(c+3)/4 - (c-1)/4 cos^2(beta0)", rhs});
  if (rhs <= kPositivityTol) {
    r.notes.push_back("right-hand side " + fmt(rhs) + " is not positive");
    return r;
  }
  CurveSolution circle;
  circle.kind = SolutionKind::Circle;
  circle.label = "circle";
  circle.kappa1 = std::sqrt(rhs);
  r.solutions.push_back(circle);
  r.constraints.push_back({"r2(circle)", residuals_at(c, cos_b, 0.0, *circle.kappa1, 0.0).r[1]});

  CurveSolution helix;
  helix.kind = SolutionKind::Helix;
  helix.label = "helix family";
  helix.kappa_sq_sum = rhs;
  r.solutions.push_back(helix);

  r.notes.push_back(
      "circle value solves the system with alpha = 0, but a circle with constant eta(T) = f satisfies "
      "alpha = -kappa1 f, so no circle with H perpendicular to phi T and f != 0 exists");
  return r;
}

ClassificationResult admissible_par(double c, const AngleParams& angles) {
  require_c_not_one(c);
  const double b0 = require_beta0(angles);
  const double cos_b = std::cos(b0), sin_b = std::sin(b0);
  const double cos2 = cos_b * cos_b;
  const double sin2b = std::sin(2.0 * b0);
  const double s4 = std::pow(sin_b, 4);
  const double target = c - (c - 1.0) * cos2;

  ClassificationResult r;
  r.notes.push_back(
      "curvature quadratic kappa1^2 + sigma sin(2 beta0) kappa1 + (1-c) sin^4(beta0) = 0; the cos(2 beta0) "
      "variant is inconsistent with kappa1^2 + kappa2^2 = c - (c-1) cos^2(beta0)");
  if (c < 1.0) {
    r.notes.push_back("admissible iff cos^2(beta0) >= (1-c)/(2-c) = " + fmt((1.0 - c) / (2.0 - c)) +
                      " and sigma sin(2 beta0) < 0");
  }
  const double root = std::sqrt(c * c - 2.0 * c + 5.0);
  const double circle_cos2 = (c + 1.0 - root) / (2.0 * (c - 1.0));
  r.notes.push_back("circles occur at cos^2(beta0) = " + fmt(circle_cos2) +
                    " with kappa1^2 = " + fmt((c - 1.0 + root) / 2.0));

  const double disc = sin2b * sin2b - 4.0 * (1.0 - c) * s4;
  r.constraints.push_back({"discriminant", disc});
  for (int sigma : branches(angles)) {
    std::vector<std::pair<double, bool>> roots;
    if (std::abs(disc) <= kPositivityTol) {
      roots.emplace_back(-sigma * sin2b / 2.0, true);
    } else if (disc > 0.0) {
      const double sq = std::sqrt(disc);
      roots.emplace_back((-sigma * sin2b + sq) / 2.0, false);
      roots.emplace_back((-sigma * sin2b - sq) / 2.0, false);
    }
    for (auto [k1, boundary] : roots) {
      if (k1 <= kPositivityTol) continue;
      const double k2 = std::abs(k1 * cos_b / sin_b + sigma);
      CurveSolution s;
      s.sign = sigma;
      s.boundary = boundary;
      s.kappa1 = k1;
      const std::string tag = std::string(sigma > 0 ? "+" : "-");
      if (k2 <= 1e-9) {
        s.kind = SolutionKind::Circle;
        s.label = "circle (sigma " + tag + ")";
        r.constraints.push_back({"kappa1 - |tan(beta0)|", k1 - std::abs(sin_b / cos_b)});
      } else {
        s.kind = SolutionKind::Helix;
        s.label = "helix (sigma " + tag + ")";
        s.kappa2 = k2;
      }
      s.kappa_sq_sum = target;
      r.solutions.push_back(s);
      r.constraints.push_back({"quadratic(sigma " + tag + ", kappa1 = " + fmt(k1) + ")",
                               k1 * k1 + sigma * sin2b * k1 + (1.0 - c) * s4});
      r.constraints.push_back({"kappa1^2 + kappa2^2 - (c - (c-1) cos^2 beta0)", k1 * k1 + k2 * k2 - target});
      r.constraints.push_back(
          {"r2(sigma " + tag + ")", residuals_at(c, cos_b, sigma * sin_b, k1, k2 <= 1e-9 ? 0.0 : k2).r[1]});
    }
  }
  // Circles first, then by decreasing kappa_1.
  std::stable_sort(r.solutions.begin(), r.solutions.end(), [](const CurveSolution& a, const CurveSolution& b) {
    if (a.kind != b.kind) return a.kind == SolutionKind::Circle;
    return *a.kappa1 > *b.kappa1;
  });
  return r;
}

ClassificationResult admissible_constant_angle(double c, const AngleParams& angles) {
  require_c_not_one(c);
  if (!angles.beta1) throw Error(ErrorCode::MalformedInput, "beta1 is required");
  angles.validate();
  const double b1 = *angles.beta1;
  const double sin1 = std::sin(b1), cos1 = std::cos(b1);

  ClassificationResult r;
  if (!angles.beta2) {
    // phi T parallel to E_2
    const double k1sq = 1.0 + (c - 1.0) * sin1 * sin1;
    r.constraints.push_back({"1 + (c-1) sin^2(beta1)", k1sq});
    if (k1sq > kPositivityTol) {
      CurveSolution a;
      a.kind = SolutionKind::Circle;
      a.label = "case a";
      a.kappa1 = std::sqrt(k1sq);
      r.solutions.push_back(a);
      CurveSolution b;
      b.kind = SolutionKind::Helix;
      b.label = "case b";
      b.kappa_sq_sum = k1sq;
      r.solutions.push_back(b);
    }
    return r;
  }

  const double b2 = *angles.beta2;
  const double sum = (c + 3.0) / 4.0 - (c - 1.0) / 4.0 * cos1 * cos1 +
                     3.0 * (c - 1.0) / 4.0 * sin1 * sin1 * std::cos(b2) * std::cos(b2);
  const double prod = -3.0 * (c - 1.0) / 8.0 * sin1 * sin1 * std::sin(2.0 * b2);
  const double sign_term = 3.0 * (c - 1.0) * std::sin(2.0 * b2);
  r.requirements.push_back("n >= 2");
  r.constraints.push_back({"kappa1^2 + kappa2^2", sum});
  r.constraints.push_back({"kappa2*kappa3", prod});
  r.constraints.push_back({"3(c-1) sin(2 beta2)", sign_term});
  r.notes.push_back("no explicit curve is known for this case; checked at the residual level only");
  if (sum > kPositivityTol && sign_term < -kPositivityTol) {
    CurveSolution s;
    s.kind = SolutionKind::Order4;
    s.label = "case c";
    s.kappa_sq_sum = sum;
    s.kappa2_kappa3 = prod;
    r.solutions.push_back(s);
  }
  return r;
}

namespace {
constexpr int kLeadIn = 64;
constexpr double kLeadInFloor = 1e-8;
}  // namespace

ClassificationResult brute_force_admissible(double c, Mode mode, double beta0, std::optional<int> sign,
                                            const GridSpec& grid) {
  require_c_not_one(c);
  AngleParams angles;
  angles.beta0 = beta0;
  angles.sign = sign;
  angles.validate();
  if (grid.points < 3 || !(grid.kappa_max > 0.0)) throw Error(ErrorCode::MalformedInput, "bad grid");

  const double cos_b = std::cos(beta0), sin_b = std::sin(beta0);
  const std::vector<int> sigmas = mode == Mode::Perp ? std::vector<int>{0} : branches(angles);

  ClassificationResult r;
  double global_min = INFINITY;
  bool best_on_upper_edge = false;
  for (int sigma : sigmas) {
    auto kappa2_of = [&](double k1) { return sigma == 0 ? 0.0 : std::abs(k1 * cos_b / sin_b + sigma); };
    auto residual = [&](double k1) {
      const double alpha = sigma == 0 ? 0.0 : sigma * sin_b;
      return residuals_at(c, cos_b, alpha, k1, kappa2_of(k1)).r[1];
    };

    // Geometric lead-in below the first linear node catches roots near 0.
    const int m = grid.points - 1;
    std::vector<double> k, v;
    const double first = grid.kappa_max / m;
    for (int j = kLeadIn; j > 0; --j) k.push_back(first * std::pow(kLeadInFloor, static_cast<double>(j) / kLeadIn));
    for (int j = 0; j < m; ++j) k.push_back(grid.kappa_max * (j + 1) / m);
    for (double kj : k) v.push_back(residual(kj));
    std::size_t best = 0;
    for (std::size_t j = 1; j < v.size(); ++j) {
      if (std::abs(v[j]) < std::abs(v[best])) best = j;
    }

    std::vector<std::pair<double, bool>> found;
    for (std::size_t j = 0; j + 1 < v.size(); ++j) {
      if (v[j] == 0.0) {
        found.emplace_back(k[j], false);
      } else if ((v[j] < 0.0) != (v[j + 1] < 0.0) && v[j + 1] != 0.0) {
        double lo = k[j], hi = k[j + 1], flo = v[j];
        for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
          const double mid = 0.5 * (lo + hi);
          const double fm = residual(mid);
          if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
          } else {
            hi = mid;
          }
        }
        found.emplace_back(0.5 * (lo + hi), false);
      } else if (j > 0 && (v[j - 1] < 0.0) == (v[j] < 0.0) && v[j - 1] != 0.0 &&
                 std::abs(v[j]) < std::abs(v[j - 1]) && std::abs(v[j]) <= std::abs(v[j + 1])) {
        // touching minimum: golden-section on |r| to catch double roots
        double lo = k[j - 1], hi = k[j + 1];
        const double g = (std::sqrt(5.0) - 1.0) / 2.0;
        for (int it = 0; it < 200; ++it) {
          const double a = hi - g * (hi - lo), b = lo + g * (hi - lo);
          if (std::abs(residual(a)) < std::abs(residual(b))) hi = b; else lo = a;
        }
        const double km = 0.5 * (lo + hi);
        if (std::abs(residual(km)) < 1e-10) found.emplace_back(km, true);
      }
    }

    if (std::abs(v[best]) < global_min) {
      global_min = std::abs(v[best]);
      best_on_upper_edge = found.empty() && best + 1 == v.size();
    }
    for (auto [k1, boundary] : found) {
      const double k2 = kappa2_of(k1);
      CurveSolution s;
      s.sign = sigma;
      s.boundary = boundary;
      s.kappa1 = k1;
      s.kind = k2 <= 1e-9 ? SolutionKind::Circle : SolutionKind::Helix;
      if (s.kind == SolutionKind::Helix) s.kappa2 = k2;
      s.label = std::string(to_string(s.kind)) + (sigma == 0 ? "" : sigma > 0 ? " (sigma +)" : " (sigma -)");
      r.solutions.push_back(s);
      r.constraints.push_back({"r2 at " + fmt(k1), residual(k1)});
    }
  }
  r.constraints.push_back({"min |r2| on grid", global_min});
  if (r.solutions.empty() && best_on_upper_edge) {
    throw Error(ErrorCode::GridTooCoarse, "residual minimum sits on kappa_max = " + fmt(grid.kappa_max));
  }
  if (mode == Mode::Perp) r.notes.push_back("circle slice kappa2 = 0");
  return r;
}

}  // namespace sasaki
