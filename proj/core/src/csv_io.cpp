#include "sasaki/csv_io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "sasaki/errors.hpp"

namespace sasaki {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) {
    while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' ')) cell.pop_back();
    while (!cell.empty() && cell.front() == ' ') cell.erase(cell.begin());
    out.push_back(cell);
  }
  return out;
}

double parse_number(const std::string& text, std::size_t row) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || errno == ERANGE) {
    throw Error(ErrorCode::MalformedInput, "row " + std::to_string(row) + ": bad number '" + text + "'");
  }
  return v;
}

void put(std::ostream& os, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  os << buf;
}

}  // namespace

void write_csv(std::ostream& os, const SampledCurve& curve) {
  os << "s";
  for (int i = 1; i <= curve.n; ++i) os << ",x" << i;
  for (int i = 1; i <= curve.n; ++i) os << ",y" << i;
  os << ",z\n";
  for (std::size_t k = 0; k < curve.size(); ++k) {
    put(os, curve.s[k]);
    const auto& p = curve.points[k];
    for (double v : p.x) os << ',', put(os, v);
    for (double v : p.y) os << ',', put(os, v);
    os << ',';
    put(os, p.z);
    os << '\n';
  }
}

void write_csv_file(const std::string& path, const SampledCurve& curve) {
  std::ofstream os(path);
  if (!os) throw Error(ErrorCode::MalformedInput, "cannot write " + path);
  write_csv(os, curve);
}

SampledCurve read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw Error(ErrorCode::MalformedInput, "empty CSV");
  const auto header = split(line);
  if (header.size() < 4 || header.size() % 2 != 0 || header.front() != "s" || header.back() != "z") {
    throw Error(ErrorCode::MalformedInput, "header must be s,x1..xn,y1..yn,z");
  }
  const int n = static_cast<int>(header.size() - 2) / 2;
  for (int i = 0; i < n; ++i) {
    if (header[1 + static_cast<std::size_t>(i)] != "x" + std::to_string(i + 1) ||
        header[1 + static_cast<std::size_t>(n + i)] != "y" + std::to_string(i + 1)) {
      throw Error(ErrorCode::MalformedInput, "header must be s,x1..xn,y1..yn,z");
    }
  }
  SampledCurve c;
  c.n = n;
  std::size_t row = 1;
  while (std::getline(is, line)) {
    ++row;
    if (line.empty() || line == "\r") continue;
    const auto cells = split(line);
    if (cells.size() != header.size()) {
      throw Error(ErrorCode::MalformedInput, "row " + std::to_string(row) + " has " +
                                                 std::to_string(cells.size()) + " columns");
    }
    CoordPoint p = CoordPoint::origin(Dimension(n));
    for (int i = 0; i < n; ++i) {
      p.x[static_cast<std::size_t>(i)] = parse_number(cells[1 + static_cast<std::size_t>(i)], row);
      p.y[static_cast<std::size_t>(i)] = parse_number(cells[1 + static_cast<std::size_t>(n + i)], row);
    }
    p.z = parse_number(cells.back(), row);
    c.s.push_back(parse_number(cells.front(), row));
    c.points.push_back(std::move(p));
  }
  return c;
}

SampledCurve read_csv_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw Error(ErrorCode::MalformedInput, "cannot read " + path);
  return read_csv(is);
}

SampledCurve sample_curve(const AnalyticCurve& curve, double s0, double s1, int count) {
  if (count < 2 || !(s1 > s0)) throw Error(ErrorCode::MalformedInput, "need count >= 2 and s1 > s0");
  SampledCurve c;
  c.n = curve.n;
  const double h = (s1 - s0) / (count - 1);
  for (int k = 0; k < count; ++k) {
    const double s = k + 1 == count ? s1 : s0 + h * k;
    c.s.push_back(s);
    c.points.push_back(curve.point(s));
  }
  return c;
}

}  // namespace sasaki
