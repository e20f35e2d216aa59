#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "spinsphere/charts.hpp"
#include "spinsphere/linalg.hpp"
#include "spinsphere/scale_factor.hpp"
#include "spinsphere/spin_bundles.hpp"

namespace spinsphere {

// Flat row-major complex component array; the common currency of the
// regression comparisons and reports.
struct ComponentArray {
  std::vector<int> dims;
  std::vector<Complex> values;

  static ComponentArray zeros(std::vector<int> dims);
  std::size_t size() const { return values.size(); }
  std::size_t flat(const std::vector<int>& idx) const;
  std::vector<int> unflatten(std::size_t flat_index) const;
  Complex& at(const std::vector<int>& idx) { return values[flat(idx)]; }
  const Complex& at(const std::vector<int>& idx) const { return values[flat(idx)]; }

  static ComponentArray from(const Mat4d& m);
  static ComponentArray from(const Mat2c& m);
  static ComponentArray from(const Mat4c& m);
  static ComponentArray from(const Rank3d& r);
  static ComponentArray from(const Rank3c& r);
  static ComponentArray from(const Rank4d& r);
  static ComponentArray from(const Rank4c& r);
  static ComponentArray from(const SpinTensorComponents& c);
  static ComponentArray scalar(double v);
};

// Index tuple whose transcribed value is suspected wrong in the source
// table; `corrected` holds the pattern-consistent value the derivation
// produces. Entries where corrected == verbatim are documentation-only.
struct ErratumFlag {
  std::vector<int> index;
  std::string note;
};

using RefEval = std::function<ComponentArray(const Point&, const ScaleFactor&)>;

// One published closed-form table: a verbatim transcription, a
// pattern-corrected variant where flags exist, and the engine quantity it
// regression-checks. Reference evaluators never share code with the engine.
struct ReferenceEntry {
  std::string id;
  std::string provenance;
  ChartId sample_chart{ChartId::north_stereo};
  RefEval verbatim;
  RefEval corrected;  // null when identical to verbatim
  RefEval engine;
  std::vector<ErratumFlag> flags;

  bool flagged(const std::vector<int>& idx) const;
  ComponentArray corrected_or_verbatim(const Point& p, const ScaleFactor& sf) const;
};

const std::vector<ReferenceEntry>& reference_registry();
const ReferenceEntry& find_reference(std::string_view id);  // UsageError on unknown id

// Verbatim table evaluated at the point.
ComponentArray evaluate_reference(std::string_view id, const Point& p, const ScaleFactor& sf);

// The transcribed component expressions of the spin-to-Lorentz homomorphism,
// kept independent of the engine's trace-based implementation.
Mat4d reference_lorentz_image(const Mat2c& s);

enum class MatchStatus { match, mismatch, suspected_erratum };
const char* to_string(MatchStatus s);

struct ComparisonRow {
  std::string quantity;
  std::vector<int> indices;
  Complex computed;
  Complex reference;  // verbatim value
  double abs_err;     // |computed - reference|
  MatchStatus status;
};

struct ComparisonReport {
  std::vector<ComparisonRow> rows;
  bool all_pass() const;  // no row with status == mismatch
};

// Entrywise comparison of the engine quantity against the reference at one
// point. A flagged index whose computed value matches the pattern-corrected
// one reports suspected-erratum (and passes); anything else over tolerance
// is a mismatch.
ComparisonReport compare(std::string_view id, const Point& p, const ScaleFactor& sf, double tol);

}  // namespace spinsphere
