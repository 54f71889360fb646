#include "sasaki/trig_poly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "sasaki/errors.hpp"

namespace sasaki {

namespace {

bool same_freq(double a, double b) {
  return std::abs(a - b) <= TrigPoly::kFreqMergeTol * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

TrigPoly TrigPoly::linear(double c0, double slope) {
  TrigPoly p(c0);
  p.lin_ = slope;
  return p;
}

TrigPoly TrigPoly::cosine(double freq, double amp) {
  TrigPoly p;
  p.add_term(freq, amp, 0.0);
  return p;
}

TrigPoly TrigPoly::sine(double freq, double amp) {
  TrigPoly p;
  p.add_term(freq, 0.0, amp);
  return p;
}

TrigPoly& TrigPoly::add_term(double freq, double cos_amp, double sin_amp) {
  if (freq < 0.0) {
    freq = -freq;
    sin_amp = -sin_amp;
  }
  if (same_freq(freq, 0.0)) {
    c0_ += cos_amp;
    return *this;
  }
  terms_.push_back({freq, cos_amp, sin_amp});
  canonicalize();
  return *this;
}

void TrigPoly::canonicalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const TrigTerm& l, const TrigTerm& r) { return l.freq < r.freq; });
  std::vector<TrigTerm> merged;
  merged.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!merged.empty() && same_freq(merged.back().freq, t.freq)) {
      merged.back().cos_amp += t.cos_amp;
      merged.back().sin_amp += t.sin_amp;
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const TrigTerm& t) { return t.cos_amp == 0.0 && t.sin_amp == 0.0; });
  terms_ = std::move(merged);
}

double TrigPoly::operator()(double s) const {
  double v = c0_ + lin_ * s;
  for (const auto& t : terms_) v += t.cos_amp * std::cos(t.freq * s) + t.sin_amp * std::sin(t.freq * s);
  return v;
}

double TrigPoly::derivative_at(int k, double s) const {
  if (k == 0) return (*this)(s);
  double v = (k == 1) ? lin_ : 0.0;
  for (const auto& t : terms_) {
    // d^k/ds^k of cos(ws) = w^k cos(ws + k pi/2); same for sin.
    const double wk = std::pow(t.freq, k);
    const double c = std::cos(t.freq * s), sn = std::sin(t.freq * s);
    double dc = 0.0, ds = 0.0;
    switch (k % 4) {
      case 0: dc = c; ds = sn; break;
      case 1: dc = -sn; ds = c; break;
      case 2: dc = -c; ds = -sn; break;
      default: dc = sn; ds = -c; break;
    }
    v += wk * (t.cos_amp * dc + t.sin_amp * ds);
  }
  return v;
}

TrigPoly TrigPoly::derivative() const {
  TrigPoly d(lin_);
  d.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    d.terms_.push_back({t.freq, t.freq * t.sin_amp, -t.freq * t.cos_amp});
  }
  d.canonicalize();
  return d;
}

TrigPoly TrigPoly::antiderivative() const {
  if (lin_ != 0.0) {
    throw Error(ErrorCode::NotRepresentable, "antiderivative of a linear term needs s^2");
  }
  TrigPoly p = TrigPoly::linear(0.0, c0_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    p.terms_.push_back({t.freq, -t.sin_amp / t.freq, t.cos_amp / t.freq});
  }
  p.canonicalize();
  return p;
}

bool TrigPoly::is_zero() const noexcept { return c0_ == 0.0 && lin_ == 0.0 && terms_.empty(); }

double TrigPoly::lowest_frequency() const noexcept {
  return terms_.empty() ? 0.0 : terms_.front().freq;
}

double TrigPoly::highest_frequency() const noexcept {
  return terms_.empty() ? 0.0 : terms_.back().freq;
}

double TrigPoly::max_coefficient() const noexcept {
  double m = std::max(std::abs(c0_), std::abs(lin_));
  for (const auto& t : terms_) m = std::max({m, std::abs(t.cos_amp), std::abs(t.sin_amp)});
  return m;
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& o) {
  c0_ += o.c0_;
  lin_ += o.lin_;
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  canonicalize();
  return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& o) { return *this += (-1.0) * o; }

TrigPoly& TrigPoly::operator*=(double s) {
  c0_ *= s;
  lin_ *= s;
  for (auto& t : terms_) {
    t.cos_amp *= s;
    t.sin_amp *= s;
  }
  canonicalize();
  return *this;
}

TrigPoly operator*(const TrigPoly& p, const TrigPoly& q) {
  const bool p_trig = !p.terms_.empty();
  const bool q_trig = !q.terms_.empty();
  if ((p.lin_ != 0.0 && (q_trig || q.lin_ != 0.0)) || (q.lin_ != 0.0 && p_trig)) {
    throw Error(ErrorCode::NotRepresentable, "product needs s^2 or s*trig terms");
  }
  TrigPoly r(p.c0_ * q.c0_);
  r.lin_ = p.lin_ * q.c0_ + p.c0_ * q.lin_;
  for (const auto& t : q.terms_) r.terms_.push_back({t.freq, p.c0_ * t.cos_amp, p.c0_ * t.sin_amp});
  for (const auto& t : p.terms_) r.terms_.push_back({t.freq, q.c0_ * t.cos_amp, q.c0_ * t.sin_amp});
  for (const auto& u : p.terms_) {
    for (const auto& v : q.terms_) {
      // cos u cos v = [cos(u-v) + cos(u+v)]/2,  sin u sin v = [cos(u-v) - cos(u+v)]/2,
      // sin u cos v = [sin(u+v) + sin(u-v)]/2,  cos u sin v = [sin(u+v) - sin(u-v)]/2.
      const double cc = u.cos_amp * v.cos_amp, ss = u.sin_amp * v.sin_amp;
      const double sc = u.sin_amp * v.cos_amp, cs = u.cos_amp * v.sin_amp;
      const double sum_f = u.freq + v.freq;
      const double diff_f = u.freq - v.freq;
      r.terms_.push_back({sum_f, 0.5 * (cc - ss), 0.5 * (sc + cs)});
      if (same_freq(diff_f, 0.0)) {
        r.c0_ += 0.5 * (cc + ss);
      } else if (diff_f > 0.0) {
        r.terms_.push_back({diff_f, 0.5 * (cc + ss), 0.5 * (sc - cs)});
      } else {
        r.terms_.push_back({-diff_f, 0.5 * (cc + ss), -0.5 * (sc - cs)});
      }
    }
  }
  r.canonicalize();
  return r;
}

std::string TrigPoly::to_string() const {
  std::ostringstream os;
  os.precision(17);
  os << c0_;
  if (lin_ != 0.0) os << " + " << lin_ << "*s";
  for (const auto& t : terms_) {
    os << " + " << t.cos_amp << "*cos(" << t.freq << "s) + " << t.sin_amp << "*sin(" << t.freq << "s)";
  }
  return os.str();
}

double max_coefficient_diff(const TrigPoly& p, const TrigPoly& q) {
  return (p - q).max_coefficient();
}

std::vector<CoefficientDiff> coefficient_diffs(const TrigPoly& expected, const TrigPoly& actual,
                                               double tol, bool ignore_constant) {
  std::vector<CoefficientDiff> out;
  if (!ignore_constant && std::abs(expected.c0() - actual.c0()) > tol) {
    out.push_back({"c0", expected.c0(), actual.c0(), 0.0, 0.0});
  }
  if (std::abs(expected.lin() - actual.lin()) > tol) {
    out.push_back({"lin", expected.lin(), actual.lin(), 0.0, 0.0});
  }
  const auto& et = expected.terms();
  const auto& at = actual.terms();
  std::size_t i = 0, j = 0;
  auto label = [](double w) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "freq=%.12g", w);
    return std::string(buf);
  };
  while (i < et.size() || j < at.size()) {
    if (j == at.size() || (i < et.size() && !same_freq(et[i].freq, at[j].freq) && et[i].freq < at[j].freq)) {
      if (std::max(std::abs(et[i].cos_amp), std::abs(et[i].sin_amp)) > tol) {
        out.push_back({label(et[i].freq), et[i].cos_amp, 0.0, et[i].sin_amp, 0.0});
      }
      ++i;
    } else if (i == et.size() || !same_freq(et[i].freq, at[j].freq)) {
      if (std::max(std::abs(at[j].cos_amp), std::abs(at[j].sin_amp)) > tol) {
        out.push_back({label(at[j].freq), 0.0, at[j].cos_amp, 0.0, at[j].sin_amp});
      }
      ++j;
    } else {
      if (std::abs(et[i].cos_amp - at[j].cos_amp) > tol || std::abs(et[i].sin_amp - at[j].sin_amp) > tol) {
        out.push_back({label(et[i].freq), et[i].cos_amp, at[j].cos_amp, et[i].sin_amp, at[j].sin_amp});
      }
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace sasaki
