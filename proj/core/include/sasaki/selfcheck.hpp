#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sasaki/generators.hpp"
#include "sasaki/model.hpp"
#include "sasaki/rng.hpp"

namespace sasaki {

struct SelfcheckOptions {
  std::uint64_t seed = 42;
  /// Connection under test; swap in a corrupted table for negative controls.
  ConnectionFn gamma = &connection;
  int samples_per_dimension = 1000;
  int fixtures = 50;
};

struct SelfcheckItem {
  std::string name;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct SelfcheckReport {
  std::vector<SelfcheckItem> items;
  bool pass = false;
  /// Name of the first failing identity, empty when everything passed.
  std::string first_failure;

  std::string summary() const;
};

SelfcheckReport run_selfcheck(const SelfcheckOptions& opts = {});

/// Random frame vector with components uniform in [-1, 1].
FrameVector random_frame_vector(Rng& rng, Dimension n);

/// Unit-speed rotation fixture with random n in {1,2,3}, |f| in [0.1, 0.9],
/// random amplitudes and phases, and per-component rates in +-[0.3, 2.5]
/// (a single common rate for half of the draws).
AnalyticCurve random_rotation_fixture(Rng& rng);

/// max |bitension_expansion - bitension_direct| at `points` parameters in
/// [0, 10] on a constant-curvature fixture.
double expansion_direct_gap(const AnalyticCurve& curve, double c, int points = 8);

}  // namespace sasaki
