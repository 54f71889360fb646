#pragma once

#include <iosfwd>
#include <string>

#include "sasaki/generators.hpp"
#include "sasaki/sampled_curve.hpp"

namespace sasaki {

/// Header `s,x1..xn,y1..yn,z`; values printed with 17 significant digits.
void write_csv(std::ostream& os, const SampledCurve& curve);
void write_csv_file(const std::string& path, const SampledCurve& curve);

/// n is inferred from the header. Throws MalformedInput on bad header, bad
/// numbers or ragged rows.
SampledCurve read_csv(std::istream& is);
SampledCurve read_csv_file(const std::string& path);

/// Samples an analytic curve at `count` uniformly spaced points of [s0, s1].
SampledCurve sample_curve(const AnalyticCurve& curve, double s0, double s1, int count);

}  // namespace sasaki
