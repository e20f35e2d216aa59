#include "spinsphere/reference_tables.hpp"

#include <algorithm>
#include <cmath>

#include "spinsphere/connection.hpp"
#include "spinsphere/curvature.hpp"
#include "spinsphere/frames.hpp"
#include "spinsphere/spin_lift.hpp"

namespace spinsphere {

ComponentArray ComponentArray::zeros(std::vector<int> dims) {
  ComponentArray a;
  a.dims = std::move(dims);
  std::size_t n = 1;
  for (int d : a.dims) n *= static_cast<std::size_t>(d);
  a.values.assign(n, Complex(0.0));
  return a;
}

std::size_t ComponentArray::flat(const std::vector<int>& idx) const {
  if (idx.size() != dims.size()) throw UsageError("component index rank mismatch");
  std::size_t f = 0;
  for (std::size_t a = 0; a < dims.size(); ++a) {
    if (idx[a] < 0 || idx[a] >= dims[a]) throw UsageError("component index out of range");
    f = f * static_cast<std::size_t>(dims[a]) + static_cast<std::size_t>(idx[a]);
  }
  return f;
}

std::vector<int> ComponentArray::unflatten(std::size_t flat_index) const {
  std::vector<int> idx(dims.size());
  for (std::size_t a = dims.size(); a-- > 0;) {
    idx[a] = static_cast<int>(flat_index % static_cast<std::size_t>(dims[a]));
    flat_index /= static_cast<std::size_t>(dims[a]);
  }
  return idx;
}

ComponentArray ComponentArray::from(const Mat4d& m) {
  auto a = zeros({4, 4});
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a.at({i, j}) = m(i, j);
  return a;
}

ComponentArray ComponentArray::from(const Mat2c& m) {
  auto a = zeros({2, 2});
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) a.at({i, j}) = m(i, j);
  return a;
}

ComponentArray ComponentArray::from(const Mat4c& m) {
  auto a = zeros({4, 4});
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a.at({i, j}) = m(i, j);
  return a;
}

ComponentArray ComponentArray::from(const Rank3d& r) {
  auto a = zeros({4, 4, 4});
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) a.at({k, i, j}) = r(k, i, j);
  return a;
}

ComponentArray ComponentArray::from(const Rank3c& r) {
  auto a = zeros({4, 4, 4});
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) a.at({k, i, j}) = r(k, i, j);
  return a;
}

ComponentArray ComponentArray::from(const Rank4d& r) {
  auto a = zeros({4, 4, 4, 4});
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q)
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a.at({p, q, i, j}) = r(p, q, i, j);
  return a;
}

ComponentArray ComponentArray::from(const Rank4c& r) {
  auto a = zeros({4, 4, 4, 4});
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q)
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a.at({p, q, i, j}) = r(p, q, i, j);
  return a;
}

ComponentArray ComponentArray::from(const SpinTensorComponents& c) {
  ComponentArray a;
  for (int ax = 0; ax < c.rank(); ++ax) a.dims.push_back(c.axis_dim(ax));
  a.values = c.values;
  return a;
}

ComponentArray ComponentArray::scalar(double v) {
  ComponentArray a;
  a.values.assign(1, Complex(v));
  return a;
}

bool ReferenceEntry::flagged(const std::vector<int>& idx) const {
  return std::any_of(flags.begin(), flags.end(),
                     [&](const ErratumFlag& f) { return f.index == idx; });
}

ComponentArray ReferenceEntry::corrected_or_verbatim(const Point& p, const ScaleFactor& sf) const {
  return corrected ? corrected(p, sf) : verbatim(p, sf);
}

const char* to_string(MatchStatus s) {
  switch (s) {
    case MatchStatus::match:
      return "match";
    case MatchStatus::mismatch:
      return "mismatch";
    case MatchStatus::suspected_erratum:
      return "suspected-erratum";
  }
  return "?";
}

bool ComparisonReport::all_pass() const {
  return std::none_of(rows.begin(), rows.end(),
                      [](const ComparisonRow& r) { return r.status == MatchStatus::mismatch; });
}

namespace {

const Complex kI(0.0, 1.0);

struct ChartVals {
  double c1, c2, c3;  // spatial coordinates in the requested chart
  double r, rp, rpp;
};

ChartVals vals_in(ChartId chart, const Point& p, const ScaleFactor& sf) {
  Point q = transition(p, chart);
  auto d = sf.evaluate(q.coords[0]);
  return {q.coords[1], q.coords[2], q.coords[3], d.value, d.first, d.second};
}

// ---- transcriptions of the stereographic-frame tables -------------------

// set a value together with its antisymmetric partner in the last index pair
void set_antisym3(ComponentArray& a, int k, int i, int j, double v) {
  a.at({k, i, j}) = v;
  a.at({k, j, i}) = -v;
}

ComponentArray stereo_commutators_table(ChartId chart, const Point& p, const ScaleFactor& sf,
                                        bool verbatim) {
  auto v = vals_in(chart, p, sf);
  double den = verbatim ? v.r * v.r : v.r;
  auto a = ComponentArray::zeros({4, 4, 4});
  double t = -v.rp / (v.r * v.r);
  set_antisym3(a, 1, 0, 1, t);
  set_antisym3(a, 2, 0, 2, t);
  set_antisym3(a, 3, 0, 3, t);
  set_antisym3(a, 1, 1, 2, -v.c2 / den);
  set_antisym3(a, 2, 1, 2, v.c1 / den);
  set_antisym3(a, 1, 1, 3, -v.c3 / den);
  set_antisym3(a, 3, 1, 3, v.c1 / den);
  set_antisym3(a, 2, 2, 3, -v.c3 / den);
  set_antisym3(a, 3, 2, 3, v.c2 / den);
  return a;
}

ComponentArray spherical_commutators_table(const Point& p, const ScaleFactor& sf) {
  auto v = vals_in(ChartId::spherical, p, sf);
  auto a = ComponentArray::zeros({4, 4, 4});
  double t = -v.rp / (v.r * v.r);
  set_antisym3(a, 1, 0, 1, t);
  set_antisym3(a, 2, 0, 2, t);
  set_antisym3(a, 3, 0, 3, t);
  double ctg_chi = -std::cos(v.c1) / (v.r * std::sin(v.c1));
  set_antisym3(a, 2, 1, 2, ctg_chi);
  set_antisym3(a, 3, 1, 3, ctg_chi);
  set_antisym3(a, 3, 2, 3, -std::cos(v.c2) / (v.r * std::sin(v.c1) * std::sin(v.c2)));
  return a;
}

ComponentArray stereo_connection_table(ChartId chart, const Point& p, const ScaleFactor& sf,
                                       bool verbatim) {
  auto v = vals_in(chart, p, sf);
  double den = verbatim ? v.r * v.r : v.r;
  double t = v.rp / (v.r * v.r);
  auto a = ComponentArray::zeros({4, 4, 4});
  a.at({0, 1, 1}) = a.at({0, 2, 2}) = a.at({0, 3, 3}) = t;
  a.at({1, 1, 0}) = a.at({2, 2, 0}) = a.at({3, 3, 0}) = t;
  a.at({1, 2, 2}) = v.c1 / den;
  a.at({2, 3, 3}) = v.c2 / den;
  a.at({3, 1, 1}) = v.c3 / den;
  a.at({2, 1, 1}) = v.c2 / den;
  a.at({3, 2, 2}) = v.c3 / den;
  a.at({1, 3, 3}) = v.c1 / den;
  a.at({1, 1, 2}) = -v.c2 / den;
  a.at({2, 2, 3}) = -v.c3 / den;
  a.at({3, 3, 1}) = -v.c1 / den;
  a.at({2, 2, 1}) = -v.c1 / den;
  a.at({3, 3, 2}) = -v.c2 / den;
  // the verbatim table prints the second spatial coordinate here; the
  // consistent value is the third
  a.at({1, 1, 3}) = (verbatim ? -v.c2 : -v.c3) / den;
  return a;
}

ComponentArray spherical_connection_table(const Point& p, const ScaleFactor& sf) {
  auto v = vals_in(ChartId::spherical, p, sf);
  double t = v.rp / (v.r * v.r);
  double cot_chi = std::cos(v.c1) / (v.r * std::sin(v.c1));
  double cot_th = std::cos(v.c2) / (v.r * std::sin(v.c1) * std::sin(v.c2));
  auto a = ComponentArray::zeros({4, 4, 4});
  a.at({0, 1, 1}) = a.at({0, 2, 2}) = a.at({0, 3, 3}) = t;
  a.at({1, 1, 0}) = a.at({2, 2, 0}) = a.at({3, 3, 0}) = t;
  a.at({1, 2, 2}) = -cot_chi;
  a.at({2, 3, 3}) = -cot_th;
  a.at({2, 2, 1}) = cot_chi;
  a.at({1, 3, 3}) = -cot_chi;
  a.at({3, 3, 2}) = cot_th;
  a.at({3, 3, 1}) = cot_chi;
  return a;
}

ComponentArray stereo_spin_connection_table(ChartId chart, const Point& p, const ScaleFactor& sf,
                                            bool verbatim) {
  auto v = vals_in(chart, p, sf);
  double t = v.rp / (2.0 * v.r * v.r);
  Complex i1 = kI * v.c1 / (2.0 * v.r);
  Complex i2 = kI * v.c2 / (2.0 * v.r);
  double h1 = v.c1 / (2.0 * v.r);
  double h3 = v.c3 / (2.0 * v.r);
  auto a = ComponentArray::zeros({4, 4, 4});  // (alpha, i, beta), zero-based
  a.at({0, 1, 0}) = -i2;
  a.at({0, 2, 0}) = i1;
  a.at({0, 3, 0}) = t;
  a.at({1, 1, 1}) = i2;
  a.at({1, 2, 1}) = -i1;
  a.at({1, 3, 1}) = -t;
  a.at({2, 1, 2}) = -i2;
  a.at({2, 2, 2}) = i1;
  a.at({2, 3, 2}) = -t;
  a.at({3, 1, 3}) = i2;
  a.at({3, 2, 3}) = -i1;
  a.at({3, 3, 3}) = t;
  a.at({0, 1, 1}) = t + h3;
  // verbatim prints the time term without its 1/2 factor in this entry
  a.at({1, 1, 0}) = (verbatim ? 2.0 * t : t) - h3;
  a.at({2, 1, 3}) = -t + h3;
  a.at({3, 1, 2}) = -t - h3;
  a.at({0, 2, 1}) = -kI * t - kI * h3;
  a.at({1, 2, 0}) = kI * t - kI * h3;
  a.at({2, 2, 3}) = kI * t - kI * h3;
  a.at({3, 2, 2}) = -kI * t - kI * h3;
  a.at({0, 3, 1}) = -h1 + i2;
  a.at({1, 3, 0}) = h1 + i2;
  a.at({2, 3, 3}) = -h1 + i2;
  a.at({3, 3, 2}) = h1 + i2;
  return a;
}

ComponentArray spherical_spin_connection_table(const Point& p, const ScaleFactor& sf) {
  auto v = vals_in(ChartId::spherical, p, sf);
  double t = v.rp / (2.0 * v.r * v.r);
  double cot_chi = std::cos(v.c1) / (2.0 * v.r * std::sin(v.c1));
  double cot_th = std::cos(v.c2) / (2.0 * v.r * std::sin(v.c1) * std::sin(v.c2));
  auto a = ComponentArray::zeros({4, 4, 4});
  a.at({0, 1, 1}) = t;
  a.at({1, 1, 0}) = t;
  a.at({2, 1, 3}) = -t;
  a.at({3, 1, 2}) = -t;
  a.at({0, 2, 0}) = -kI * cot_chi;
  a.at({1, 2, 1}) = kI * cot_chi;
  a.at({2, 2, 2}) = -kI * cot_chi;
  a.at({3, 2, 3}) = kI * cot_chi;
  a.at({0, 2, 1}) = -kI * t;
  a.at({1, 2, 0}) = kI * t;
  a.at({2, 2, 3}) = kI * t;
  a.at({3, 2, 2}) = -kI * t;
  a.at({0, 3, 0}) = t;
  a.at({1, 3, 1}) = -t;
  a.at({2, 3, 2}) = -t;
  a.at({3, 3, 3}) = t;
  a.at({0, 3, 1}) = cot_chi - kI * cot_th;
  a.at({1, 3, 0}) = -cot_chi - kI * cot_th;
  a.at({2, 3, 3}) = cot_chi - kI * cot_th;
  a.at({3, 3, 2}) = -cot_chi - kI * cot_th;
  return a;
}

// identical in every frame here; only R enters
void set_antisym4(ComponentArray& a, int p, int q, int i, int j, Complex v) {
  a.at({p, q, i, j}) = v;
  a.at({p, q, j, i}) = -v;
}

ComponentArray riemann_table(ChartId chart, const Point& p, const ScaleFactor& sf,
                             bool verbatim) {
  auto v = vals_in(chart, p, sf);
  double aa = -v.rp * v.rp / std::pow(v.r, 4) + v.rpp / std::pow(v.r, 3);
  double bb = 1.0 / (v.r * v.r) + v.rp * v.rp / std::pow(v.r, 4);
  auto a = ComponentArray::zeros({4, 4, 4, 4});
  for (int s = 1; s <= 3; ++s) {
    set_antisym4(a, 0, s, 0, s, aa);
    set_antisym4(a, s, 0, 0, s, aa);
  }
  set_antisym4(a, 1, 2, 1, 2, bb);
  set_antisym4(a, 2, 1, 1, 2, -bb);
  set_antisym4(a, 2, 3, 2, 3, bb);
  set_antisym4(a, 3, 2, 2, 3, -bb);
  set_antisym4(a, 3, 1, 3, 1, bb);
  set_antisym4(a, 1, 3, 3, 1, -bb);
  // the printed partner label of the (2,3,2,3) entry repeats its second
  // index, claiming a nonzero value on an antisymmetry-zero slot
  if (verbatim) a.at({2, 3, 3, 3}) = -bb;
  return a;
}

ComponentArray spinor_curvature_table(ChartId chart, const Point& p, const ScaleFactor& sf,
                                      bool verbatim) {
  auto v = vals_in(chart, p, sf);
  double al = -v.rp * v.rp / (2.0 * std::pow(v.r, 4)) + v.rpp / (2.0 * std::pow(v.r, 3));
  double be = 1.0 / (2.0 * v.r * v.r) + v.rp * v.rp / (2.0 * std::pow(v.r, 4));
  auto a = ComponentArray::zeros({4, 4, 4, 4});
  set_antisym4(a, 0, 1, 0, 1, al);
  set_antisym4(a, 1, 0, 0, 1, al);
  set_antisym4(a, 2, 3, 0, 1, -al);
  // printed with the opposite sign; the curvature of the connection and the
  // intertwining relation both give the value matching its (2,3) partner
  set_antisym4(a, 3, 2, 0, 1, verbatim ? al : -al);
  set_antisym4(a, 0, 1, 0, 2, -kI * al);
  set_antisym4(a, 1, 0, 0, 2, kI * al);
  set_antisym4(a, 2, 3, 0, 2, kI * al);
  set_antisym4(a, 3, 2, 0, 2, -kI * al);
  set_antisym4(a, 0, 0, 0, 3, al);
  set_antisym4(a, 1, 1, 0, 3, -al);
  set_antisym4(a, 2, 2, 0, 3, -al);
  set_antisym4(a, 3, 3, 0, 3, al);
  set_antisym4(a, 0, 0, 1, 2, kI * be);
  set_antisym4(a, 1, 1, 1, 2, -kI * be);
  set_antisym4(a, 2, 2, 1, 2, kI * be);
  set_antisym4(a, 3, 3, 1, 2, -kI * be);
  set_antisym4(a, 0, 1, 2, 3, kI * be);
  set_antisym4(a, 1, 0, 2, 3, kI * be);
  set_antisym4(a, 2, 3, 2, 3, kI * be);
  set_antisym4(a, 3, 2, 2, 3, kI * be);
  set_antisym4(a, 0, 1, 3, 1, be);
  set_antisym4(a, 1, 0, 3, 1, -be);
  set_antisym4(a, 2, 3, 3, 1, be);
  set_antisym4(a, 3, 2, 3, 1, -be);
  return a;
}

ComponentArray ricci_table(ChartId chart, const Point& p, const ScaleFactor& sf) {
  auto v = vals_in(chart, p, sf);
  auto a = ComponentArray::zeros({4, 4});
  a.at({0, 0}) = 3.0 * v.rp * v.rp / std::pow(v.r, 4) - 3.0 * v.rpp / std::pow(v.r, 3);
  double s = 2.0 / (v.r * v.r) + v.rp * v.rp / std::pow(v.r, 4) + v.rpp / std::pow(v.r, 3);
  a.at({1, 1}) = a.at({2, 2}) = a.at({3, 3}) = s;
  return a;
}

ComponentArray scalar_table(const Point& p, const ScaleFactor& sf) {
  auto d = sf.evaluate(p.coords[0]);
  return ComponentArray::scalar(-6.0 / (d.value * d.value) -
                                6.0 * d.second / std::pow(d.value, 3));
}

// ---- transcriptions of the metrics and frames ---------------------------

ComponentArray stereo_metric_table(ChartId chart, const Point& p, const ScaleFactor& sf) {
  auto v = vals_in(chart, p, sf);
  double n2 = v.c1 * v.c1 + v.c2 * v.c2 + v.c3 * v.c3;
  double s = 4.0 * v.r * v.r / ((n2 + 1.0) * (n2 + 1.0));
  auto a = ComponentArray::zeros({4, 4});
  a.at({0, 0}) = v.r * v.r;
  a.at({1, 1}) = a.at({2, 2}) = a.at({3, 3}) = -s;
  return a;
}

ComponentArray spherical_metric_table(const Point& p, const ScaleFactor& sf) {
  auto v = vals_in(ChartId::spherical, p, sf);
  auto a = ComponentArray::zeros({4, 4});
  double r2 = v.r * v.r;
  a.at({0, 0}) = r2;
  a.at({1, 1}) = -r2;
  a.at({2, 2}) = -r2 * std::sin(v.c1) * std::sin(v.c1);
  a.at({3, 3}) = -r2 * std::sin(v.c1) * std::sin(v.c1) * std::sin(v.c2) * std::sin(v.c2);
  return a;
}

ComponentArray stereo_frame_table(ChartId chart, const Point& p, const ScaleFactor& sf,
                                  bool inverted) {
  auto v = vals_in(chart, p, sf);
  double n2 = v.c1 * v.c1 + v.c2 * v.c2 + v.c3 * v.c3;
  double h = (1.0 + n2) / (2.0 * v.r);
  if (inverted) h = -h;
  auto a = ComponentArray::zeros({4, 4});
  a.at({0, 0}) = 1.0 / v.r;
  a.at({1, 1}) = a.at({2, 2}) = a.at({3, 3}) = h;
  return a;
}

ComponentArray spherical_frame_table(const Point& p, const ScaleFactor& sf) {
  auto v = vals_in(ChartId::spherical, p, sf);
  auto a = ComponentArray::zeros({4, 4});
  a.at({0, 0}) = a.at({1, 1}) = 1.0 / v.r;
  a.at({2, 2}) = 1.0 / (v.r * std::sin(v.c1));
  a.at({3, 3}) = 1.0 / (v.r * std::sin(v.c1) * std::sin(v.c2));
  return a;
}

// ---- transcriptions of the transition matrices --------------------------

ComponentArray householder_transition_table(ChartId chart, const Point& p, bool inverted_sign) {
  Point q = transition(p, chart);
  double c[3] = {q.coords[1], q.coords[2], q.coords[3]};
  double n2 = c[0] * c[0] + c[1] * c[1] + c[2] * c[2];
  auto a = ComponentArray::zeros({4, 4});
  a.at({0, 0}) = 1.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double v = ((i == j ? n2 : 0.0) - 2.0 * c[i] * c[j]) / n2;
      a.at({1 + i, 1 + j}) = inverted_sign ? -v : v;
    }
  return a;
}

ComponentArray spherical_transition_table(const Point& p, bool to_x_frame) {
  Point q = transition(p, ChartId::spherical);
  double th = q.coords[2], ph = q.coords[3];
  double st = std::sin(th), ct = std::cos(th), sp = std::sin(ph), cp = std::cos(ph);
  auto a = ComponentArray::zeros({4, 4});
  a.at({0, 0}) = 1.0;
  if (to_x_frame) {
    a.at({1, 1}) = -sp * st;
    a.at({1, 2}) = sp * ct;
    a.at({1, 3}) = cp;
    a.at({2, 1}) = -cp * st;
    a.at({2, 2}) = cp * ct;
    a.at({2, 3}) = -sp;
    a.at({3, 1}) = -ct;
    a.at({3, 2}) = -st;
  } else {
    a.at({1, 1}) = -sp * st;
    a.at({1, 2}) = -sp * ct;
    a.at({1, 3}) = -cp;
    a.at({2, 1}) = -cp * st;
    a.at({2, 2}) = -cp * ct;
    a.at({2, 3}) = sp;
    a.at({3, 1}) = -ct;
    a.at({3, 2}) = st;
  }
  return a;
}

// ---- transcriptions of the closed-form lifts -----------------------------

Mat2c ref_lift_ytilde_x(const Point& p) {
  Point q = transition(p, ChartId::south_stereo);
  double n = std::sqrt(q.coords[1] * q.coords[1] + q.coords[2] * q.coords[2] +
                       q.coords[3] * q.coords[3]);
  Mat2c s;
  s(0, 0) = kI * q.coords[3] / n;
  s(0, 1) = (kI * q.coords[1] + q.coords[2]) / n;
  s(1, 0) = (kI * q.coords[1] - q.coords[2]) / n;
  s(1, 1) = -kI * q.coords[3] / n;
  return s;
}

Mat2c ref_lift_x_ytilde(const Point& p) {
  Point q = transition(p, ChartId::north_stereo);
  double n = std::sqrt(q.coords[1] * q.coords[1] + q.coords[2] * q.coords[2] +
                       q.coords[3] * q.coords[3]);
  Mat2c s;
  s(0, 0) = -kI * q.coords[3] / n;
  s(0, 1) = -(kI * q.coords[1] + q.coords[2]) / n;
  s(1, 0) = -(kI * q.coords[1] - q.coords[2]) / n;
  s(1, 1) = kI * q.coords[3] / n;
  return s;
}

Mat2c ref_lift_e_x(const Point& p) {
  Point q = transition(p, ChartId::spherical);
  double th = q.coords[2], ph = q.coords[3];
  const double r2 = std::sqrt(2.0);
  Mat2c s;
  s(0, 0) = std::exp(kI * (ph + th) / 2.0) / r2;
  s(0, 1) = -std::exp(kI * (ph - th) / 2.0) / r2;
  s(1, 0) = std::exp(kI * (th - ph) / 2.0) / r2;
  s(1, 1) = std::exp(-kI * (th + ph) / 2.0) / r2;
  return s;
}

Mat2c ref_lift_e_ytilde(const Point& p) {
  Point q = transition(p, ChartId::spherical);
  double th = q.coords[2], ph = q.coords[3];
  const double r2 = std::sqrt(2.0);
  Mat2c s;
  s(0, 0) = -kI * std::exp(kI * (ph - th) / 2.0) / r2;
  s(0, 1) = kI * std::exp(kI * (ph + th) / 2.0) / r2;
  s(1, 0) = kI * std::exp(kI * (-th - ph) / 2.0) / r2;
  s(1, 1) = kI * std::exp(kI * (th - ph) / 2.0) / r2;
  return s;
}

Mat2c ref_lift_ytilde_x_spherical(const Point& p) {
  Point q = transition(p, ChartId::spherical);
  double th = q.coords[2], ph = q.coords[3];
  Mat2c s;
  s(0, 0) = kI * std::cos(th);
  s(0, 1) = std::sin(th) * std::exp(kI * ph);
  s(1, 0) = -std::sin(th) * std::exp(-kI * ph);
  s(1, 1) = -kI * std::cos(th);
  return s;
}

Mat4c block_diag(const Mat2c& b) {
  Mat4c m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      m(i, j) = b(i, j);
      m(2 + i, 2 + j) = b(i, j);
    }
  return m;
}

Mat4c block_swap(const Mat2c& b) {
  Mat4c m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      m(i, 2 + j) = b(i, j);
      m(2 + i, j) = b(i, j);
    }
  return m;
}

// ---- transcriptions of the constant basic-field matrices ----------------

ComponentArray d2_table() {
  auto a = ComponentArray::zeros({2, 2});
  a.at({0, 1}) = 1.0;
  a.at({1, 0}) = -1.0;
  return a;
}

ComponentArray d4_table(double sign) {
  auto a = ComponentArray::zeros({4, 4});
  a.at({0, 1}) = sign;
  a.at({1, 0}) = -sign;
  a.at({2, 3}) = -sign;
  a.at({3, 2}) = sign;
  return a;
}

ComponentArray chirality_table(double sign) {
  auto a = ComponentArray::zeros({4, 4});
  a.at({0, 0}) = a.at({1, 1}) = sign;
  a.at({2, 2}) = a.at({3, 3}) = -sign;
  return a;
}

ComponentArray pairing_table(double sign) {
  auto a = ComponentArray::zeros({4, 4});
  a.at({0, 2}) = a.at({1, 3}) = sign;
  a.at({2, 0}) = a.at({3, 1}) = sign;
  return a;
}

ComponentArray pauli_table(bool space_inverted) {
  auto a = ComponentArray::zeros({2, 2, 4});
  auto set = [&](int q, Complex m00, Complex m01, Complex m10, Complex m11) {
    double s = space_inverted && q != 0 ? -1.0 : 1.0;
    a.at({0, 0, q}) = s * m00;
    a.at({0, 1, q}) = s * m01;
    a.at({1, 0, q}) = s * m10;
    a.at({1, 1, q}) = s * m11;
  };
  set(0, 1.0, 0.0, 0.0, 1.0);
  set(1, 0.0, 1.0, 1.0, 0.0);
  set(2, 0.0, -kI, kI, 0.0);
  set(3, 1.0, 0.0, 0.0, -1.0);
  return a;
}

ComponentArray dirac_gamma_table() {
  auto a = ComponentArray::zeros({4, 4, 4});
  auto set = [&](int q, std::initializer_list<std::initializer_list<Complex>> rows) {
    int i = 0;
    for (const auto& row : rows) {
      int j = 0;
      for (const Complex& v : row) a.at({i, j++, q}) = v;
      ++i;
    }
  };
  set(0, {{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}});
  set(1, {{0, 0, 0, 1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {-1, 0, 0, 0}});
  set(2, {{0, 0, 0, -kI}, {0, 0, kI, 0}, {0, kI, 0, 0}, {-kI, 0, 0, 0}});
  set(3, {{0, 0, 1, 0}, {0, 0, 0, -1}, {-1, 0, 0, 0}, {0, 1, 0, 0}});
  return a;
}

// ---- engine adapters ------------------------------------------------------

Point in_chart(const Point& p, ChartId chart) {
  return p.chart == chart ? p : transition(p, chart);
}

ComponentArray engine_lift(LiftPair pair, const Point& p) {
  return ComponentArray::from(apply_sign_convention(lift(lift_pair_transition(pair, p))));
}

std::vector<ErratumFlag> scale_flags_rank3(std::initializer_list<std::array<int, 3>> idx,
                                           const std::string& note) {
  std::vector<ErratumFlag> f;
  for (const auto& t : idx) f.push_back({{t[0], t[1], t[2]}, note});
  return f;
}

}  // namespace

Mat4d reference_lorentz_image(const Mat2c& s) {
  auto cj = [&](int i, int j) { return std::conj(s(i - 1, j - 1)); };
  auto v = [&](int i, int j) { return s(i - 1, j - 1); };
  const Complex two_i = 2.0 * kI;
  Mat4d out;
  Complex e;
  e = (cj(1, 1) * v(1, 1) + cj(1, 2) * v(1, 2) + cj(2, 1) * v(2, 1) + cj(2, 2) * v(2, 2)) / 2.0;
  out(0, 0) = e.real();
  e = (cj(1, 1) * v(1, 2) + cj(1, 2) * v(1, 1) + cj(2, 1) * v(2, 2) + cj(2, 2) * v(2, 1)) / 2.0;
  out(0, 1) = e.real();
  e = (cj(1, 2) * v(1, 1) - cj(1, 1) * v(1, 2) + cj(2, 2) * v(2, 1) - cj(2, 1) * v(2, 2)) / two_i;
  out(0, 2) = e.real();
  e = (cj(1, 1) * v(1, 1) - cj(1, 2) * v(1, 2) + cj(2, 1) * v(2, 1) - cj(2, 2) * v(2, 2)) / 2.0;
  out(0, 3) = e.real();
  e = (cj(2, 1) * v(1, 1) + cj(1, 1) * v(2, 1) + cj(2, 2) * v(1, 2) + cj(1, 2) * v(2, 2)) / 2.0;
  out(1, 0) = e.real();
  e = (cj(2, 1) * v(1, 2) + cj(1, 2) * v(2, 1) + cj(2, 2) * v(1, 1) + cj(1, 1) * v(2, 2)) / 2.0;
  out(1, 1) = e.real();
  e = (cj(1, 2) * v(2, 1) - cj(2, 1) * v(1, 2) + cj(2, 2) * v(1, 1) - cj(1, 1) * v(2, 2)) / two_i;
  out(1, 2) = e.real();
  e = (cj(2, 1) * v(1, 1) + cj(1, 1) * v(2, 1) - cj(2, 2) * v(1, 2) - cj(1, 2) * v(2, 2)) / 2.0;
  out(1, 3) = e.real();
  e = (cj(1, 1) * v(2, 1) - cj(2, 1) * v(1, 1) + cj(1, 2) * v(2, 2) - cj(2, 2) * v(1, 2)) / two_i;
  out(2, 0) = e.real();
  e = (cj(1, 2) * v(2, 1) - cj(2, 1) * v(1, 2) + cj(1, 1) * v(2, 2) - cj(2, 2) * v(1, 1)) / two_i;
  out(2, 1) = e.real();
  e = (cj(2, 2) * v(1, 1) + cj(1, 1) * v(2, 2) - cj(2, 1) * v(1, 2) - cj(1, 2) * v(2, 1)) / 2.0;
  out(2, 2) = e.real();
  e = (cj(1, 1) * v(2, 1) - cj(2, 1) * v(1, 1) + cj(2, 2) * v(1, 2) - cj(1, 2) * v(2, 2)) / two_i;
  out(2, 3) = e.real();
  e = (cj(1, 1) * v(1, 1) + cj(1, 2) * v(1, 2) - cj(2, 1) * v(2, 1) - cj(2, 2) * v(2, 2)) / 2.0;
  out(3, 0) = e.real();
  e = (cj(1, 1) * v(1, 2) + cj(1, 2) * v(1, 1) - cj(2, 1) * v(2, 2) - cj(2, 2) * v(2, 1)) / 2.0;
  out(3, 1) = e.real();
  e = (cj(1, 2) * v(1, 1) - cj(1, 1) * v(1, 2) + cj(2, 1) * v(2, 2) - cj(2, 2) * v(2, 1)) / two_i;
  out(3, 2) = e.real();
  e = (cj(1, 1) * v(1, 1) + cj(2, 2) * v(2, 2) - cj(2, 1) * v(2, 1) - cj(1, 2) * v(1, 2)) / 2.0;
  out(3, 3) = e.real();
  return out;
}

const std::vector<ReferenceEntry>& reference_registry() {
  static const std::vector<ReferenceEntry> registry = [] {
    std::vector<ReferenceEntry> r;
    const ChartId N = ChartId::north_stereo;
    const ChartId S = ChartId::south_stereo;
    const ChartId Sph = ChartId::spherical;

    const std::string scale_note =
        "reference prints these spatial entries with denominator R^2; the bracket "
        "derivation and every downstream table require denominator R";
    auto c_flags = scale_flags_rank3({{{1, 1, 2}}, {{1, 2, 1}}, {{2, 1, 2}}, {{2, 2, 1}},
                                      {{1, 1, 3}}, {{1, 3, 1}}, {{3, 1, 3}}, {{3, 3, 1}},
                                      {{2, 2, 3}}, {{2, 3, 2}}, {{3, 2, 3}}, {{3, 3, 2}}},
                                     scale_note);
    auto gamma_flags = scale_flags_rank3({{{1, 2, 2}}, {{2, 3, 3}}, {{3, 1, 1}}, {{2, 1, 1}},
                                          {{3, 2, 2}}, {{1, 3, 3}}, {{1, 1, 2}}, {{2, 2, 3}},
                                          {{3, 3, 1}}, {{2, 2, 1}}, {{3, 3, 2}}},
                                         scale_note);
    gamma_flags.push_back({{1, 1, 3},
                           "reference prints -x2/R^2; the consistent value is -x3/R "
                           "(both the coordinate symbol and the scale differ)"});

    // -- metrics and frames ------------------------------------------------
    r.push_back({"metric.north", "holonomic metric, north stereographic chart", N,
                 [=](const Point& p, const ScaleFactor& sf) { return stereo_metric_table(N, p, sf); },
                 nullptr,
                 [=](const Point& p, const ScaleFactor& sf) {
                   return ComponentArray::from(holonomic_metric(in_chart(p, N), sf));
                 },
                 {}});
    r.push_back({"metric.south", "holonomic metric, south stereographic chart", S,
                 [=](const Point& p, const ScaleFactor& sf) { return stereo_metric_table(S, p, sf); },
                 nullptr,
                 [=](const Point& p, const ScaleFactor& sf) {
                   return ComponentArray::from(holonomic_metric(in_chart(p, S), sf));
                 },
                 {}});
    r.push_back({"metric.spherical", "holonomic metric, spherical chart", Sph,
                 [](const Point& p, const ScaleFactor& sf) { return spherical_metric_table(p, sf); },
                 nullptr,
                 [=](const Point& p, const ScaleFactor& sf) {
                   return ComponentArray::from(holonomic_metric(in_chart(p, Sph), sf));
                 },
                 {}});
    struct FrameRow {
      const char* id;
      FrameId f;
      ChartId chart;
      bool inverted;
    };
    for (auto fr : {FrameRow{"frame.x", FrameId::X, N, false},
                    FrameRow{"frame.y", FrameId::Y, S, false},
                    FrameRow{"frame.ytilde", FrameId::Ytilde, S, true}}) {
      r.push_back({fr.id, "orthonormal frame coefficients, stereographic chart", fr.chart,
                   [=](const Point& p, const ScaleFactor& sf) {
                     return stereo_frame_table(fr.chart, p, sf, fr.inverted);
                   },
                   nullptr,
                   [=](const Point& p, const ScaleFactor& sf) {
                     return ComponentArray::from(
                         frame_coefficients(fr.f, in_chart(p, fr.chart), sf));
                   },
                   {}});
    }
    r.push_back({"frame.e", "orthonormal frame coefficients, spherical chart", Sph,
                 [](const Point& p, const ScaleFactor& sf) { return spherical_frame_table(p, sf); },
                 nullptr,
                 [=](const Point& p, const ScaleFactor& sf) {
                   return ComponentArray::from(
                       frame_coefficients(FrameId::E, in_chart(p, Sph), sf));
                 },
                 {}});

    // -- commutation coefficients -------------------------------------------
    for (auto fr : {std::pair{FrameId::X, N}, std::pair{FrameId::Y, S}}) {
      std::string id = std::string("commutators.") + to_string(fr.first);
      r.push_back({id, "commutation coefficient table, stereographic frame", fr.second,
                   [=](const Point& p, const ScaleFactor& sf) {
                     return stereo_commutators_table(fr.second, p, sf, true);
                   },
                   [=](const Point& p, const ScaleFactor& sf) {
                     return stereo_commutators_table(fr.second, p, sf, false);
                   },
                   [=](const Point& p, const ScaleFactor& sf) {
                     return ComponentArray::from(
                         commutators(fr.first, in_chart(p, fr.second), sf).c);
                   },
                   c_flags});
    }
    r.push_back({"commutators.e", "commutation coefficient table, spherical frame", Sph,
                 [](const Point& p, const ScaleFactor& sf) {
                   return spherical_commutators_table(p, sf);
                 },
                 nullptr,
                 [=](const Point& p, const ScaleFactor& sf) {
                   return ComponentArray::from(
                       commutators(FrameId::E, in_chart(p, Sph), sf).c);
                 },
                 {}});

    // -- transition matrices -------------------------------------------------
    auto transition_engine = [](FrameId from, FrameId to) {
      return [=](const Point& p, const ScaleFactor&) {
        return ComponentArray::from(frame_transition(from, to, p));
      };
    };
    r.push_back({"transition.y-x", "frame transition, south to north frame", S,
                 [=](const Point& p, const ScaleFactor&) {
                   return householder_transition_table(S, p, false);
                 },
                 nullptr, transition_engine(FrameId::Y, FrameId::X), {}});
    r.push_back({"transition.x-y", "frame transition, north to south frame", N,
                 [=](const Point& p, const ScaleFactor&) {
                   return householder_transition_table(N, p, false);
                 },
                 nullptr, transition_engine(FrameId::X, FrameId::Y), {}});
    r.push_back({"transition.ytilde-x", "frame transition, inverted south to north frame", S,
                 [=](const Point& p, const ScaleFactor&) {
                   return householder_transition_table(S, p, true);
                 },
                 nullptr, transition_engine(FrameId::Ytilde, FrameId::X), {}});
    {
      std::vector<ErratumFlag> f;
      for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
          f.push_back({{i, j},
                       "reference repeats the y-x block here; the inverse of the inverted "
                       "transition requires the opposite spatial sign"});
      r.push_back({"transition.x-ytilde", "frame transition, north to inverted south frame", N,
                   [=](const Point& p, const ScaleFactor&) {
                     return householder_transition_table(N, p, false);
                   },
                   [=](const Point& p, const ScaleFactor&) {
                     return householder_transition_table(N, p, true);
                   },
                   transition_engine(FrameId::X, FrameId::Ytilde), f});
    }
    r.push_back({"transition.e-x", "frame transition, spherical to north frame", Sph,
                 [](const Point& p, const ScaleFactor&) {
                   return spherical_transition_table(p, true);
                 },
                 nullptr, transition_engine(FrameId::E, FrameId::X), {}});
    r.push_back({"transition.e-ytilde", "frame transition, spherical to inverted south frame",
                 Sph,
                 [](const Point& p, const ScaleFactor&) {
                   return spherical_transition_table(p, false);
                 },
                 nullptr, transition_engine(FrameId::E, FrameId::Ytilde), {}});

    // -- homomorphism image --------------------------------------------------
    r.push_back({"lorentz-image.ytilde-x",
                 "componentwise homomorphism expressions applied to the closed-form lift", S,
                 [](const Point& p, const ScaleFactor&) {
                   return ComponentArray::from(reference_lorentz_image(ref_lift_ytilde_x(p)));
                 },
                 nullptr,
                 [](const Point& p, const ScaleFactor&) {
                   return ComponentArray::from(phi(closed_form_lift(LiftPair::ytilde_to_x, p)));
                 },
                 {}});

    // -- closed-form lifts (compared through the solver, sign-normalized) ----
    struct LiftRow {
      const char* id;
      LiftPair pair;
      ChartId chart;
      Mat2c (*ref)(const Point&);
    };
    for (auto lr : {LiftRow{"lift.ytilde-x", LiftPair::ytilde_to_x, S, &ref_lift_ytilde_x},
                    LiftRow{"lift.x-ytilde", LiftPair::x_to_ytilde, N, &ref_lift_x_ytilde},
                    LiftRow{"lift.e-x", LiftPair::e_to_x, Sph, &ref_lift_e_x},
                    LiftRow{"lift.e-ytilde", LiftPair::e_to_ytilde, Sph, &ref_lift_e_ytilde},
                    LiftRow{"lift.ytilde-x.spherical", LiftPair::ytilde_to_x, Sph,
                            &ref_lift_ytilde_x_spherical}}) {
      r.push_back({lr.id, "closed-form lift of a frame transition", lr.chart,
                   [=](const Point& p, const ScaleFactor&) {
                     return ComponentArray::from(apply_sign_convention(lr.ref(p)));
                   },
                   nullptr,
                   [=](const Point& p, const ScaleFactor&) { return engine_lift(lr.pair, p); },
                   {}});
    }

    // -- four-component transition matrices ----------------------------------
    auto dirac_engine = [](LiftPair pair, bool reversed) {
      return [=](const Point& p, const ScaleFactor&) {
        Mat4c m = chiral_extension(closed_form_lift(pair, p));
        if (reversed) m = p_reversion(m);
        return ComponentArray::from(m);
      };
    };
    r.push_back({"dirac.ytilde-x", "four-component transition, inverted south to north", S,
                 [](const Point& p, const ScaleFactor&) {
                   return ComponentArray::from(block_diag(ref_lift_ytilde_x(p)));
                 },
                 nullptr, dirac_engine(LiftPair::ytilde_to_x, false), {}});
    {
      std::vector<ErratumFlag> f;
      for (auto idx : {std::array<int, 2>{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 2}, {2, 3}, {3, 2},
                       {3, 3}})
        f.push_back({{idx[0], idx[1]},
                     "reference prints the blocks with prefactor +1/|x|; consistency with the "
                     "two-component transition and its inverse requires -1/|x|"});
      r.push_back({"dirac.x-ytilde", "four-component transition, north to inverted south", N,
                   [](const Point& p, const ScaleFactor&) {
                     Mat2c b = ref_lift_x_ytilde(p);
                     for (Complex& v : b.a) v = -v;  // verbatim prints +1/|x| blocks
                     return ComponentArray::from(block_diag(b));
                   },
                   [](const Point& p, const ScaleFactor&) {
                     return ComponentArray::from(block_diag(ref_lift_x_ytilde(p)));
                   },
                   dirac_engine(LiftPair::x_to_ytilde, false), f});
    }
    r.push_back({"dirac.ytilde-x.p", "four-component transition onto the reversed frame", S,
                 [](const Point& p, const ScaleFactor&) {
                   return ComponentArray::from(block_swap(ref_lift_ytilde_x(p)));
                 },
                 nullptr, dirac_engine(LiftPair::ytilde_to_x, true), {}});
    r.push_back({"dirac.x-ytilde.p", "four-component transition from the reversed frame", N,
                 [](const Point& p, const ScaleFactor&) {
                   return ComponentArray::from(block_swap(ref_lift_x_ytilde(p)));
                 },
                 nullptr, dirac_engine(LiftPair::x_to_ytilde, true), {}});
    r.push_back({"dirac.e-x", "four-component transition, spherical to north", Sph,
                 [](const Point& p, const ScaleFactor&) {
                   return ComponentArray::from(block_diag(ref_lift_e_x(p)));
                 },
                 nullptr, dirac_engine(LiftPair::e_to_x, false), {}});
    r.push_back({"dirac.e-ytilde", "four-component transition, spherical to inverted south",
                 Sph,
                 [](const Point& p, const ScaleFactor&) {
                   return ComponentArray::from(block_diag(ref_lift_e_ytilde(p)));
                 },
                 nullptr, dirac_engine(LiftPair::e_to_ytilde, false), {}});
    r.push_back({"dirac.ytilde-x.spherical",
                 "four-component transition in angular variables", Sph,
                 [](const Point& p, const ScaleFactor&) {
                   return ComponentArray::from(block_diag(ref_lift_ytilde_x_spherical(p)));
                 },
                 nullptr, dirac_engine(LiftPair::ytilde_to_x, false), {}});
    r.push_back({"dirac.e-ytilde.p",
                 "four-component transition, spherical onto the reversed frame", Sph,
                 [](const Point& p, const ScaleFactor&) {
                   return ComponentArray::from(block_swap(ref_lift_e_ytilde(p)));
                 },
                 nullptr, dirac_engine(LiftPair::e_to_ytilde, true), {}});

    // -- constant basic fields ------------------------------------------------
    auto constant_entry = [&](const char* id, const char* prov, ComponentArray table,
                              BasicFieldId field, FieldVariant variant) {
      r.push_back({id, prov, N,
                   [table](const Point&, const ScaleFactor&) { return table; }, nullptr,
                   [=](const Point&, const ScaleFactor&) {
                     return ComponentArray::from(basic_field(field, variant));
                   },
                   {}});
    };
    constant_entry("d2", "two-component skew metric", d2_table(), BasicFieldId::d2,
                   FieldVariant::standard);
    constant_entry("d4", "four-component skew metric", d4_table(1.0), BasicFieldId::d4,
                   FieldVariant::standard);
    constant_entry("d4.anti", "four-component skew metric, opposite form", d4_table(-1.0),
                   BasicFieldId::d4, FieldVariant::opposite);
    constant_entry("chirality", "chirality operator", chirality_table(1.0), BasicFieldId::H,
                   FieldVariant::standard);
    constant_entry("chirality.anti", "chirality operator, opposite form", chirality_table(-1.0),
                   BasicFieldId::H, FieldVariant::opposite);
    constant_entry("pairing", "Hermitian pairing", pairing_table(1.0), BasicFieldId::D,
                   FieldVariant::standard);
    constant_entry("pairing.anti", "Hermitian pairing, opposite form", pairing_table(-1.0),
                   BasicFieldId::D, FieldVariant::opposite);
    constant_entry("pauli", "vector-to-spinor symbols in a canonical pair", pauli_table(false),
                   BasicFieldId::G, FieldVariant::standard);
    constant_entry("dirac-gamma", "four-component gamma matrices", dirac_gamma_table(),
                   BasicFieldId::gamma, FieldVariant::standard);
    r.push_back({"pauli.space-inverted",
                 "vector-to-spinor symbols against the space-inverted tangent frame", N,
                 [](const Point&, const ScaleFactor&) { return pauli_table(true); }, nullptr,
                 [](const Point&, const ScaleFactor&) {
                   Mat4d inv = minkowski();  // diag(1,-1,-1,-1) as a frame change
                   return ComponentArray::from(
                       transform(basic_field(BasicFieldId::G), Mat2c::identity(), inv));
                 },
                 {}});

    // -- connection components -------------------------------------------------
    for (auto fr : {std::pair{FrameId::X, N}, std::pair{FrameId::Y, S}}) {
      std::string id = std::string("connection.") + to_string(fr.first);
      r.push_back({id, "metric connection components, stereographic frame", fr.second,
                   [=](const Point& p, const ScaleFactor& sf) {
                     return stereo_connection_table(fr.second, p, sf, true);
                   },
                   [=](const Point& p, const ScaleFactor& sf) {
                     return stereo_connection_table(fr.second, p, sf, false);
                   },
                   [=](const Point& p, const ScaleFactor& sf) {
                     return ComponentArray::from(
                         gamma_special(fr.first, in_chart(p, fr.second), sf));
                   },
                   gamma_flags});
    }
    r.push_back({"connection.e", "metric connection components, spherical frame", Sph,
                 [](const Point& p, const ScaleFactor& sf) {
                   return spherical_connection_table(p, sf);
                 },
                 nullptr,
                 [=](const Point& p, const ScaleFactor& sf) {
                   return ComponentArray::from(
                       gamma_special(FrameId::E, in_chart(p, Sph), sf));
                 },
                 {}});

    const std::string a211_note =
        "reference prints R'/R^2 in the time part of this entry; the contraction "
        "of the connection against the gamma field gives R'/(2 R^2)";
    for (auto fr : {std::pair{FramePair::psi_x, N}, std::pair{FramePair::phi_y, S}}) {
      std::string id = std::string("spin-connection.") + to_string(fr.first);
      r.push_back({id, "spinor connection components, stereographic pair", fr.second,
                   [=](const Point& p, const ScaleFactor& sf) {
                     return stereo_spin_connection_table(fr.second, p, sf, true);
                   },
                   [=](const Point& p, const ScaleFactor& sf) {
                     return stereo_spin_connection_table(fr.second, p, sf, false);
                   },
                   [=](const Point& p, const ScaleFactor& sf) {
                     return ComponentArray::from(
                         spinor_connection(fr.first, in_chart(p, fr.second), sf).a);
                   },
                   {{{1, 1, 0}, a211_note}}});
    }
    r.push_back({"spin-connection.e", "spinor connection components, spherical pair", Sph,
                 [](const Point& p, const ScaleFactor& sf) {
                   return spherical_spin_connection_table(p, sf);
                 },
                 nullptr,
                 [=](const Point& p, const ScaleFactor& sf) {
                   return ComponentArray::from(
                       spinor_connection(FramePair::xi_e, in_chart(p, Sph), sf).a);
                 },
                 {}});

    // -- curvature ---------------------------------------------------------------
    const std::string riemann_note =
        "printed partner label repeats its second index; antisymmetry forces zero here";
    for (auto fr : {std::pair{FrameId::X, N}, std::pair{FrameId::Y, S},
                    std::pair{FrameId::E, Sph}}) {
      std::string id = std::string("riemann.") + to_string(fr.first);
      r.push_back({id, "curvature tensor components (identical in all three frames)",
                   fr.second,
                   [=](const Point& p, const ScaleFactor& sf) {
                     return riemann_table(fr.second, p, sf, true);
                   },
                   [=](const Point& p, const ScaleFactor& sf) {
                     return riemann_table(fr.second, p, sf, false);
                   },
                   [=](const Point& p, const ScaleFactor& sf) {
                     return ComponentArray::from(riemann(fr.first, in_chart(p, fr.second), sf));
                   },
                   {{{2, 3, 3, 3}, riemann_note}}});
    }
    const std::string spin_sign_note =
        "printed with the opposite sign; the curvature of the spinor connection and the "
        "intertwining relation give the value matching the (2,3) partner entry";
    const std::string label_note =
        "printed partner label repeats the first label's indices; value taken from the "
        "first label, which matches the computed component";
    for (auto fr : {std::pair{FramePair::psi_x, N}, std::pair{FramePair::phi_y, S},
                    std::pair{FramePair::xi_e, Sph}}) {
      std::string id = std::string("spinor-curvature.") + to_string(fr.first);
      r.push_back({id, "spinor curvature components (identical in all three pairs)",
                   fr.second,
                   [=](const Point& p, const ScaleFactor& sf) {
                     return spinor_curvature_table(fr.second, p, sf, true);
                   },
                   [=](const Point& p, const ScaleFactor& sf) {
                     return spinor_curvature_table(fr.second, p, sf, false);
                   },
                   [=](const Point& p, const ScaleFactor& sf) {
                     return ComponentArray::from(
                         spinor_curvature(fr.first, in_chart(p, fr.second), sf));
                   },
                   {{{3, 2, 0, 1}, spin_sign_note},
                    {{3, 2, 1, 0}, spin_sign_note},
                    {{1, 0, 3, 1}, label_note},
                    {{3, 2, 3, 1}, label_note}}});
    }
    for (auto fr : {std::pair{FrameId::X, N}, std::pair{FrameId::Y, S},
                    std::pair{FrameId::E, Sph}}) {
      std::string id = std::string("ricci.") + to_string(fr.first);
      r.push_back({id, "Ricci tensor components (diagonal)", fr.second,
                   [=](const Point& p, const ScaleFactor& sf) {
                     return ricci_table(fr.second, p, sf);
                   },
                   nullptr,
                   [=](const Point& p, const ScaleFactor& sf) {
                     return ComponentArray::from(
                         ricci_and_scalar(fr.first, in_chart(p, fr.second), sf).ricci);
                   },
                   {}});
    }
    r.push_back({"scalar", "scalar curvature", N,
                 [](const Point& p, const ScaleFactor& sf) { return scalar_table(p, sf); },
                 nullptr,
                 [=](const Point& p, const ScaleFactor& sf) {
                   return ComponentArray::scalar(
                       ricci_and_scalar(FrameId::X, in_chart(p, N), sf).scalar);
                 },
                 {}});
    return r;
  }();
  return registry;
}

const ReferenceEntry& find_reference(std::string_view id) {
  for (const auto& e : reference_registry())
    if (e.id == id) return e;
  throw UsageError("unknown reference table id '" + std::string(id) + "'");
}

ComponentArray evaluate_reference(std::string_view id, const Point& p, const ScaleFactor& sf) {
  return find_reference(id).verbatim(p, sf);
}

ComparisonReport compare(std::string_view id, const Point& p, const ScaleFactor& sf, double tol) {
  const ReferenceEntry& e = find_reference(id);
  ComponentArray computed = e.engine(p, sf);
  ComponentArray verbatim = e.verbatim(p, sf);
  ComponentArray corrected = e.corrected_or_verbatim(p, sf);
  if (computed.dims != verbatim.dims || corrected.dims != verbatim.dims)
    throw UsageError("reference entry '" + e.id + "' produced mismatched shapes");
  ComparisonReport rep;
  rep.rows.reserve(computed.size());
  for (std::size_t k = 0; k < computed.size(); ++k) {
    ComparisonRow row;
    row.quantity = e.id;
    row.indices = computed.unflatten(k);
    row.computed = computed.values[k];
    row.reference = verbatim.values[k];
    row.abs_err = std::abs(row.computed - row.reference);
    if (row.abs_err <= tol)
      row.status = MatchStatus::match;
    else if (e.flagged(row.indices) && std::abs(row.computed - corrected.values[k]) <= tol)
      row.status = MatchStatus::suspected_erratum;
    else
      row.status = MatchStatus::mismatch;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace spinsphere
