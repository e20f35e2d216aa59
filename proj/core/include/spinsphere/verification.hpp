#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "spinsphere/charts.hpp"
#include "spinsphere/linalg.hpp"
#include "spinsphere/reference_tables.hpp"

namespace spinsphere {

// Deterministic sampling: a pinned uniform mapping over mt19937_64 so equal
// seeds give byte-identical reports.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : gen_(seed) {}

  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  double uniform(double a, double b) { return a + (b - a) * uniform01(); }
  double normal();
  Mat2c random_sl2c();  // determinant normalized to 1

 private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Seeded random points in the safe box of a chart: stereographic spatial
// coordinates in [-3,-0.2] u [0.2,3] per axis, spherical chi/theta in
// [0.2, pi-0.2] and phi in [0, 2*pi), eta in [-1,1].
std::vector<Point> sample_points(ChartId chart, int count, std::uint64_t seed);

struct RunConfig {
  std::string command = "verify";
  std::string scale = "cosh:1";
  int points = 100;
  std::uint64_t seed = 42;
  double tol = 1e-9;  // reference-table comparison tolerance
  std::string format = "json";
};

struct ReportRow {
  std::string quantity;
  std::vector<int> indices;
  Complex computed;
  Complex reference;
  double abs_err;
  MatchStatus status;
};

struct VerificationReport {
  RunConfig config;
  std::vector<ReportRow> rows;  // sorted by (quantity, indices)
  std::size_t matches = 0;
  std::size_t mismatches = 0;
  std::size_t errata = 0;
};

// Runs every reference-table comparison and every invariant suite at seeded
// random points. Reference rows aggregate the worst sampled point per index
// tuple; invariant rows carry their residual against a fixed threshold.
VerificationReport run_verification(const RunConfig& config);

std::string serialize_json(const VerificationReport& report);
std::string serialize_csv(const VerificationReport& report);

}  // namespace spinsphere
