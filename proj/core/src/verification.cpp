#include "spinsphere/verification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include <json.hpp>

#include "spinsphere/connection.hpp"
#include "spinsphere/curvature.hpp"
#include "spinsphere/detail/fields.hpp"
#include "spinsphere/frames.hpp"
#include "spinsphere/spin_bundles.hpp"
#include "spinsphere/spin_lift.hpp"

namespace spinsphere {

double SampleRng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform01();
  if (u1 < 1e-300) u1 = 1e-300;
  double r = std::sqrt(-2.0 * std::log(u1));
  double t = 2.0 * detail::kPi * uniform01();
  spare_ = r * std::sin(t);
  has_spare_ = true;
  return r * std::cos(t);
}

Mat2c SampleRng::random_sl2c() {
  while (true) {
    Mat2c s;
    for (Complex& e : s.a) e = Complex(normal(), normal());
    Complex det = determinant(s);
    if (std::abs(det) < 0.1) continue;
    Complex root = std::sqrt(det);
    for (Complex& e : s.a) e /= root;
    return s;
  }
}

std::vector<Point> sample_points(ChartId chart, int count, std::uint64_t seed) {
  SampleRng rng(seed ^ (0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(chart) + 1)));
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(count));
  for (int n = 0; n < count; ++n) {
    Point p;
    p.chart = chart;
    p.coords[0] = rng.uniform(-1.0, 1.0);
    if (chart == ChartId::spherical) {
      p.coords[1] = rng.uniform(0.2, detail::kPi - 0.2);
      p.coords[2] = rng.uniform(0.2, detail::kPi - 0.2);
      p.coords[3] = rng.uniform(0.0, 2.0 * detail::kPi);
    } else {
      for (int k = 1; k < 4; ++k) {
        double mag = rng.uniform(0.2, 3.0);
        double sgn = rng.uniform01() < 0.5 ? -1.0 : 1.0;
        p.coords[k] = sgn * mag;
      }
    }
    pts.push_back(p);
  }
  return pts;
}

namespace {

constexpr std::uint64_t kChartRoundTripSamples = 1000;
constexpr std::uint64_t kHomomorphismSamples = 1000;
constexpr std::uint64_t kLiftRoundTripSamples = 1000;

const std::array<ChartId, 3> kCharts{ChartId::north_stereo, ChartId::south_stereo,
                                     ChartId::spherical};
const std::array<FrameId, 4> kFrames{FrameId::X, FrameId::Y, FrameId::Ytilde, FrameId::E};
const std::array<FramePair, 3> kPairs{FramePair::psi_x, FramePair::phi_y, FramePair::xi_e};

struct InvariantSink {
  std::vector<ReportRow>* rows;

  void add(const std::string& name, double residual, double tol) {
    ReportRow row;
    row.quantity = "invariant." + name;
    row.computed = residual;
    row.reference = 0.0;
    row.abs_err = residual;
    row.status = residual <= tol ? MatchStatus::match : MatchStatus::mismatch;
    rows->push_back(std::move(row));
  }
};

double frobenius_diff(const Mat4d& a, const Mat4d& b) { return max_abs_diff(a, b); }

double circular_diff(double a, double b) {
  double d = std::fmod(std::abs(a - b), 2.0 * detail::kPi);
  return std::min(d, 2.0 * detail::kPi - d);
}

double so13_residual(const Mat4d& m) {
  Mat4d g = minkowski();
  double r = max_abs_diff(transpose(m) * g * m, g);
  r = std::max(r, std::abs(determinant(m) - 1.0));
  r = std::max(r, std::max(0.0, 1.0 - m(0, 0)));
  return r;
}

// the sampled point expressed in each frame's home chart
Point home_point(FrameId f, const Point& p) {
  ChartId c = home_chart(f);
  return p.chart == c ? p : transition(p, c);
}

const std::vector<Point>& points_for(ChartId chart,
                                     const std::array<std::vector<Point>, 3>& sets) {
  return sets[static_cast<std::size_t>(chart)];
}

void run_invariants(const RunConfig& config, const ScaleFactor& sf,
                    const std::array<std::vector<Point>, 3>& pts, std::vector<ReportRow>& rows) {
  InvariantSink sink{&rows};
  const Mat4d eta = minkowski();
  const Mat4d id4 = Mat4d::identity();

  // frame metric reproduces the Minkowski matrix
  for (FrameId f : kFrames) {
    double worst = 0.0;
    for (const Point& p : points_for(home_chart(f), pts))
      worst = std::max(worst, frobenius_diff(metric_in_frame(f, p, sf), eta));
    sink.add(std::string("frame-metric.") + to_string(f), worst, 1e-10);
  }

  // chart transitions: round trips, embedding consistency, pullback metric
  {
    double worst = 0.0;
    for (ChartId a : kCharts) {
      auto sample = sample_points(a, static_cast<int>(kChartRoundTripSamples), config.seed);
      for (const Point& p : sample)
        for (ChartId b : kCharts) {
          if (a == b) continue;
          Point back = transition(transition(p, b), a);
          for (int k = 0; k < 4; ++k) {
            double d = a == ChartId::spherical && k == 3
                           ? circular_diff(back.coords[k], p.coords[k])
                           : std::abs(back.coords[k] - p.coords[k]);
            worst = std::max(worst, d);
          }
        }
    }
    sink.add("chart-round-trip", worst, 1e-12);
  }
  {
    double worst = 0.0;
    for (ChartId a : kCharts)
      for (const Point& p : points_for(a, pts)) {
        EmbeddedPoint z = embed(p, sf);
        double r2 = 0.0;
        for (double v : z.z) r2 += v * v;
        worst = std::max(worst, std::abs(std::sqrt(r2) - z.radius) / z.radius);
        for (ChartId b : kCharts) {
          if (a == b) continue;
          EmbeddedPoint w = embed(transition(p, b), sf);
          for (int k = 0; k < 4; ++k) worst = std::max(worst, std::abs(z.z[k] - w.z[k]));
        }
      }
    sink.add("embedding-consistency", worst, 1e-10);
  }
  {
    // spatial block of the holonomic metric = minus the pullback of the
    // ambient Euclidean metric through the embedding at fixed time
    double worst = 0.0;
    constexpr double h = 1e-6;
    for (ChartId a : kCharts)
      for (const Point& p : points_for(a, pts)) {
        Mat4d g = holonomic_metric(p, sf);
        double r = sf.evaluate(p.coords[0]).value;
        worst = std::max(worst, std::abs(g(0, 0) - r * r));
        std::array<std::array<double, 4>, 3> dz{};
        for (int i = 0; i < 3; ++i) {
          Point pp = p, pm = p;
          pp.coords[1 + i] += h;
          pm.coords[1 + i] -= h;
          EmbeddedPoint zp = embed(pp, sf);
          EmbeddedPoint zm = embed(pm, sf);
          for (int k = 0; k < 4; ++k) dz[i][k] = (zp.z[k] - zm.z[k]) / (2.0 * h);
        }
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) {
            double induced = 0.0;
            for (int k = 0; k < 4; ++k) induced += dz[i][k] * dz[j][k];
            worst = std::max(worst, std::abs(g(1 + i, 1 + j) + induced));
          }
      }
    sink.add("metric-pullback", worst, 1e-9);
  }
  {
    double worst_inv = 0.0;
    double worst_fd = 0.0;
    constexpr double h = 1e-6;
    for (ChartId a : kCharts)
      for (const Point& p : points_for(a, pts))
        for (ChartId b : kCharts) {
          if (a == b) continue;
          Mat4d j = jacobian(p, b);
          worst_inv = std::max(worst_inv, frobenius_diff(jacobian(transition(p, b), a) * j, id4));
          for (int nu = 0; nu < 4; ++nu) {
            Point pp = p, pm = p;
            pp.coords[nu] += h;
            pm.coords[nu] -= h;
            Point tp = transition(pp, b);
            Point tm = transition(pm, b);
            for (int mu = 0; mu < 4; ++mu) {
              double fd = (tp.coords[mu] - tm.coords[mu]) / (2.0 * h);
              worst_fd = std::max(worst_fd, std::abs(fd - j(mu, nu)));
            }
          }
        }
    sink.add("jacobian-inverse", worst_inv, 1e-10);
    sink.add("jacobian-finite-difference", worst_fd, 1e-6);
  }

  // commutators: dual-number vs central-difference cross-check, and the
  // Jacobi identity of the numerically computed brackets
  for (FrameId f : kFrames) {
    double worst = 0.0;
    for (const Point& p : points_for(home_chart(f), pts)) {
      auto ad = commutators(f, p, sf, DiffMethod::dual);
      auto fd = commutators(f, p, sf, DiffMethod::central_difference);
      for (int k = 0; k < 4; ++k)
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j)
            worst = std::max(worst, std::abs(ad(k, i, j) - fd(k, i, j)));
    }
    sink.add(std::string("commutators-fd-vs-dual.") + to_string(f), worst, 1e-6);
  }
  for (FrameId f : kFrames) {
    double worst = 0.0;
    for (const Point& p : points_for(home_chart(f), pts)) {
      Rank3d cc = detail::commutation<double>(f, p.coords, sf);
      Mat4d fr = detail::frame_matrix<double>(f, p.coords, sf);
      std::array<Rank3d, 4> dcc;
      for (int nu = 0; nu < 4; ++nu) {
        std::array<Dual1, 4> c{Dual1(p.coords[0]), Dual1(p.coords[1]), Dual1(p.coords[2]),
                               Dual1(p.coords[3])};
        c[nu].du = 1.0;
        Rank3<Dual1> cd = detail::commutation<Dual1>(f, c, sf);
        for (int k = 0; k < 4; ++k)
          for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) dcc[nu](k, i, j) = cd(k, i, j).du;
      }
      auto lie_c = [&](int i, int m, int j, int k) {
        double s = 0.0;
        for (int mu = 0; mu < 4; ++mu) s += fr(mu, i) * dcc[mu](m, j, k);
        return s;
      };
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
          for (int k = j + 1; k < 4; ++k)
            for (int m = 0; m < 4; ++m) {
              double v = 0.0;
              const int cyc[3][3] = {{i, j, k}, {j, k, i}, {k, i, j}};
              for (const auto& t : cyc) {
                double term = -lie_c(t[0], m, t[1], t[2]);
                for (int l = 0; l < 4; ++l) term += cc(l, t[1], t[2]) * cc(m, l, t[0]);
                v += term;
              }
              worst = std::max(worst, std::abs(v));
            }
    }
    sink.add(std::string("jacobi-identity.") + to_string(f), worst, 1e-8);
  }

  // transition determinants, involution, group membership, inverses
  {
    double det_yx = 0.0, det_ytx = 0.0, member = 0.0, invol = 0.0, inv_pair = 0.0;
    for (const Point& p : points_for(ChartId::south_stereo, pts)) {
      Mat4d s = frame_transition(FrameId::Y, FrameId::X, p);
      Mat4d st = frame_transition(FrameId::Ytilde, FrameId::X, p);
      det_yx = std::max(det_yx, std::abs(determinant(s) + 1.0));
      det_ytx = std::max(det_ytx, std::abs(determinant(st) - 1.0));
      member = std::max(member, so13_residual(st));
      invol = std::max(invol, frobenius_diff(s * s, id4));
      invol = std::max(invol, frobenius_diff(st * st, id4));
    }
    for (const Point& p : points_for(ChartId::spherical, pts))
      for (FrameId a : kFrames)
        for (FrameId b : kFrames) {
          if (a == b) continue;
          inv_pair = std::max(inv_pair, frobenius_diff(frame_transition(a, b, p) *
                                                           frame_transition(b, a, p),
                                                       id4));
        }
    sink.add("transition-det.y-x", det_yx, 1e-10);
    sink.add("transition-det.ytilde-x", det_ytx, 1e-10);
    sink.add("transition-membership.ytilde-x", member, 1e-10);
    sink.add("transition-involution", invol, 1e-10);
    sink.add("transition-inverse-pairs", inv_pair, 1e-10);
  }

  // homomorphism properties and lift round trips
  {
    SampleRng rng(config.seed ^ 0xABCDEF0123456789ULL);
    double worst = 0.0;
    for (std::uint64_t n = 0; n < kHomomorphismSamples; ++n) {
      Mat2c a = rng.random_sl2c();
      Mat2c b = rng.random_sl2c();
      worst = std::max(worst, frobenius_diff(phi(a * b), phi(a) * phi(b)));
    }
    sink.add("homomorphism-product", worst, 1e-9);

    double neg = 0.0;
    for (int n = 0; n < 100; ++n) {
      Mat2c a = rng.random_sl2c();
      Mat2c ma = a;
      for (Complex& e : ma.a) e = -e;
      neg = std::max(neg, frobenius_diff(phi(a), phi(ma)));
    }
    sink.add("homomorphism-negation", neg, 1e-12);

    double rt = 0.0;
    for (std::uint64_t n = 0; n < kLiftRoundTripSamples; ++n) {
      Mat4d l = phi(rng.random_sl2c());
      rt = std::max(rt, frobenius_diff(phi(lift(l)), l));
    }
    sink.add("lift-round-trip", rt, 1e-9);

    Mat2c unit = lift(id4);
    double idres = std::max(std::abs(unit(0, 0) - 1.0), std::abs(unit(1, 1) - 1.0));
    idres = std::max({idres, std::abs(unit(0, 1)), std::abs(unit(1, 0))});
    sink.add("lift-identity", idres, 1e-12);
  }

  // closed-form lifts project onto the computed frame transitions
  for (LiftPair pair : {LiftPair::ytilde_to_x, LiftPair::x_to_ytilde, LiftPair::e_to_x,
                        LiftPair::e_to_ytilde}) {
    ChartId chart = pair == LiftPair::x_to_ytilde ? ChartId::north_stereo
                    : pair == LiftPair::ytilde_to_x ? ChartId::south_stereo
                                                    : ChartId::spherical;
    double worst = 0.0;
    double det_worst = 0.0;
    for (const Point& p : points_for(chart, pts)) {
      Mat2c s = closed_form_lift(pair, p);
      worst = std::max(worst, frobenius_diff(phi(s), lift_pair_transition(pair, p)));
      det_worst = std::max(det_worst, std::abs(determinant(s) - 1.0));
    }
    sink.add(std::string("lift-agreement.") + to_string(pair), worst, 1e-9);
    sink.add(std::string("lift-det.") + to_string(pair), det_worst, 1e-12);
  }
  {
    double spin = 0.0, lorentz = 0.0, invol = 0.0, negpair = 0.0;
    for (const Point& p : points_for(ChartId::spherical, pts)) {
      Mat2c shat = closed_form_lift(LiftPair::e_to_x, p);
      Mat2c stilde = closed_form_lift(LiftPair::ytilde_to_x, p);
      Mat2c scheck = closed_form_lift(LiftPair::e_to_ytilde, p);
      spin = std::max(spin, max_abs_diff(shat, stilde * scheck));
      lorentz = std::max(
          lorentz, frobenius_diff(frame_transition(FrameId::E, FrameId::X, p),
                                  frame_transition(FrameId::Ytilde, FrameId::X, p) *
                                      frame_transition(FrameId::E, FrameId::Ytilde, p)));
      Mat2c sq = stilde * stilde;
      Mat2c minus_id;
      minus_id(0, 0) = minus_id(1, 1) = -1.0;
      invol = std::max(invol, max_abs_diff(sq, minus_id));
      Mat2c ttilde = closed_form_lift(LiftPair::x_to_ytilde, p);
      Mat2c sum;
      for (std::size_t k = 0; k < 4; ++k) sum.a[k] = stilde.a[k] + ttilde.a[k];
      Mat2c zero;
      negpair = std::max(negpair, max_abs_diff(sum, zero));
    }
    sink.add("lift-factorization.spin", spin, 1e-9);
    sink.add("lift-factorization.lorentz", lorentz, 1e-9);
    sink.add("lift-involution", invol, 1e-10);
    sink.add("lift-inverse-negation", negpair, 1e-12);
  }

  // constant basic fields: Clifford relation, trace orthogonality,
  // extension/reversion structure, equivariance, classification
  {
    double clifford = 0.0;
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n) {
        Mat4c anti = gamma_matrix(m) * gamma_matrix(n) + gamma_matrix(n) * gamma_matrix(m);
        Mat4c want;
        for (int d = 0; d < 4; ++d) want(d, d) = 2.0 * eta(m, n);
        clifford = std::max(clifford, max_abs_diff(anti, want));
      }
    sink.add("clifford-relation", clifford, 0.0);

    auto g = basic_field(BasicFieldId::G);
    double trace = 0.0;
    for (int pq = 1; pq < 4; ++pq)
      for (int q = 1; q < 4; ++q) {
        Complex tr = 0.0;
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) tr += g.at({i, j, pq}) * g.at({j, i, q});
        trace = std::max(trace, std::abs(tr - (pq == q ? 2.0 : 0.0)));
      }
    sink.add("pauli-trace", trace, 0.0);

    SampleRng rng(config.seed ^ 0x5555AAAA5555AAAAULL);
    auto gam = basic_field(BasicFieldId::gamma);
    double equiv = 0.0, exthom = 0.0;
    for (int n = 0; n < config.points; ++n) {
      Mat2c s = rng.random_sl2c();
      auto moved = transform(gam, chiral_extension(s), phi(s));
      for (std::size_t k = 0; k < moved.values.size(); ++k)
        equiv = std::max(equiv, std::abs(moved.values[k] - gam.values[k]));
      Mat2c b = rng.random_sl2c();
      exthom = std::max(exthom, max_abs_diff(chiral_extension(s * b),
                                             chiral_extension(s) * chiral_extension(b)));
    }
    sink.add("gamma-equivariance", equiv, 1e-9);
    sink.add("extension-homomorphism", exthom, 1e-12);

    Mat4c some = chiral_extension(SampleRng(config.seed).random_sl2c());
    sink.add("p-reversion-involution", max_abs_diff(p_reversion(p_reversion(some)), some), 0.0);

    // the reversed pair built by the frame relabeling classifies as the
    // second special type
    Mat4c perm;
    perm(0, 2) = perm(1, 3) = perm(2, 0) = perm(3, 1) = 1.0;
    auto d_rep = transform(basic_field(BasicFieldId::d4), perm, id4);
    auto h_rep = transform(basic_field(BasicFieldId::H), perm, id4);
    auto p_rep = transform(basic_field(BasicFieldId::D), perm, id4);
    bool ok = classify_frame_pair(d_rep, h_rep, p_rep) == FramePairClass::p_reverse_antichiral;
    ok = ok && classify_frame_pair(basic_field(BasicFieldId::d4), basic_field(BasicFieldId::H),
                                   basic_field(BasicFieldId::D)) == FramePairClass::canon_chiral;
    sink.add("frame-pair-classification", ok ? 0.0 : 1.0, 0.0);
  }

  // connection invariants
  for (FrameId f : kFrames) {
    double general = 0.0, torsion = 0.0, compat = 0.0;
    for (const Point& p : points_for(home_chart(f), pts)) {
      Rank3d special = gamma_special(f, p, sf);
      Rank3d full = gamma_general(f, p, sf);
      auto cc = commutators(f, p, sf);
      for (int k = 0; k < 4; ++k)
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j) {
            general = std::max(general, std::abs(full(k, i, j) - special(k, i, j)));
            torsion = std::max(torsion,
                               std::abs(special(k, i, j) - special(k, j, i) - cc(k, i, j)));
          }
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          for (int k = 0; k < 4; ++k) {
            double v = kMinkowskiSign[k] * special(k, i, j) + kMinkowskiSign[j] * special(j, i, k);
            compat = std::max(compat, std::abs(v));
          }
    }
    sink.add(std::string("connection-general-vs-reduced.") + to_string(f), general, 1e-12);
    sink.add(std::string("connection-torsion.") + to_string(f), torsion, 1e-10);
    sink.add(std::string("connection-metric-compatibility.") + to_string(f), compat, 1e-10);
  }
  for (FramePair pair : kPairs) {
    double conj_res = 0.0;
    double annihilate = 0.0;
    for (const Point& p : points_for(home_chart(tangent_frame(pair)), pts)) {
      auto sc = spinor_connection(pair, p, sf);
      for (int a = 0; a < 4; ++a)
        for (int i = 0; i < 4; ++i)
          for (int b = 0; b < 4; ++b)
            conj_res = std::max(conj_res,
                                std::abs(sc.a_bar(a, i, b) - std::conj(sc.a(a, i, b))));
      // the connection annihilates every constant basic field: the covariant
      // derivative of gamma, of the skew metric, of the chirality operator
      // and of the pairing all vanish
      Rank3d g = gamma_special(tangent_frame(pair), p, sf);
      auto a_mat = [&](int i) {
        Mat4c m;
        for (int a = 0; a < 4; ++a)
          for (int b = 0; b < 4; ++b) m(a, b) = sc.a(a, i, b);
        return m;
      };
      auto abar_mat = [&](int i) {
        Mat4c m;
        for (int a = 0; a < 4; ++a)
          for (int b = 0; b < 4; ++b) m(a, b) = sc.a_bar(a, i, b);
        return m;
      };
      Mat4c d_form, h_form, pairing;
      {
        auto d4 = basic_field(BasicFieldId::d4);
        auto h4 = basic_field(BasicFieldId::H);
        auto dp = basic_field(BasicFieldId::D);
        for (int a = 0; a < 4; ++a)
          for (int b = 0; b < 4; ++b) {
            d_form(a, b) = d4.at({a, b});
            h_form(a, b) = h4.at({a, b});
            pairing(a, b) = dp.at({a, b});
          }
      }
      for (int i = 0; i < 4; ++i) {
        Mat4c ai = a_mat(i);
        Mat4c ait = transpose(ai);
        for (int q = 0; q < 4; ++q) {
          Mat4c res = ai * gamma_matrix(q) - gamma_matrix(q) * ai;
          for (int k = 0; k < 4; ++k) {
            if (g(k, i, q) == 0.0) continue;
            Mat4c gk = gamma_matrix(k);
            for (int a = 0; a < 4; ++a)
              for (int b = 0; b < 4; ++b) res(a, b) -= g(k, i, q) * gk(a, b);
          }
          annihilate = std::max(annihilate, max_abs_diff(res, Mat4c{}));
        }
        annihilate = std::max(annihilate, max_abs_diff(ait * d_form + d_form * ai, Mat4c{}));
        annihilate = std::max(annihilate, max_abs_diff(ai * h_form - h_form * ai, Mat4c{}));
        Mat4c conj_ai = abar_mat(i);
        annihilate =
            std::max(annihilate, max_abs_diff(ait * pairing + pairing * conj_ai, Mat4c{}));
      }
    }
    sink.add(std::string("connection-conjugate.") + to_string(pair), conj_res, 0.0);
    sink.add(std::string("connection-annihilates-fields.") + to_string(pair), annihilate, 1e-9);
  }
  {
    // the configured scale model: finite differences of R agree with the
    // reported derivatives
    double worst = 0.0;
    constexpr double h = 1e-5;
    for (const Point& p : points_for(ChartId::north_stereo, pts)) {
      double eta = p.coords[0];
      auto d = sf.evaluate(eta);
      double fd1 = (sf.evaluate(eta + h).value - sf.evaluate(eta - h).value) / (2.0 * h);
      double fd2 = (sf.evaluate(eta + h).first - sf.evaluate(eta - h).first) / (2.0 * h);
      worst = std::max(worst, std::abs(fd1 - d.first) / std::max(std::abs(d.first), 1.0));
      worst = std::max(worst, std::abs(fd2 - d.second) / std::max(std::abs(d.second), 1.0));
    }
    sink.add("scale-factor-fd", worst, 1e-7);
  }

  // curvature invariants
  for (FrameId f : kFrames) {
    double antisym = 0.0, bianchi = 0.0, offdiag = 0.0;
    for (const Point& p : points_for(home_chart(f), pts)) {
      Rank4d r = riemann(f, p, sf);
      for (int pp = 0; pp < 4; ++pp)
        for (int q = 0; q < 4; ++q)
          for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
              antisym = std::max(antisym, std::abs(r(pp, q, i, j) + r(pp, q, j, i)));
      for (int pp = 0; pp < 4; ++pp)
        for (int q = 0; q < 4; ++q)
          for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
              bianchi = std::max(bianchi, std::abs(r(pp, q, i, j) + r(pp, i, j, q) +
                                                   r(pp, j, q, i)));
      RicciScalar rs = ricci_and_scalar(f, p, sf);
      for (int q = 0; q < 4; ++q)
        for (int j = 0; j < 4; ++j)
          if (q != j) offdiag = std::max(offdiag, std::abs(rs.ricci(q, j)));
    }
    sink.add(std::string("curvature-antisymmetry.") + to_string(f), antisym, 1e-10);
    sink.add(std::string("curvature-bianchi.") + to_string(f), bianchi, 1e-9);
    sink.add(std::string("ricci-off-diagonal.") + to_string(f), offdiag, 1e-10);
  }
  for (FramePair pair : kPairs) {
    double inter = 0.0, antisym = 0.0;
    for (const Point& p : points_for(home_chart(tangent_frame(pair)), pts)) {
      inter = std::max(inter, check_intertwining(pair, p, sf));
      Rank4c s = spinor_curvature(pair, p, sf);
      for (int pp = 0; pp < 4; ++pp)
        for (int q = 0; q < 4; ++q)
          for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
              antisym = std::max(antisym, std::abs(s(pp, q, i, j) + s(pp, q, j, i)));
    }
    sink.add(std::string("curvature-intertwining.") + to_string(pair), inter, 1e-9);
    sink.add(std::string("spinor-curvature-antisymmetry.") + to_string(pair), antisym, 1e-10);
  }
  {
    // component tables coincide across frames at the same event
    double worst_r = 0.0, worst_s = 0.0;
    for (const Point& p : points_for(ChartId::north_stereo, pts)) {
      Rank4d rx = riemann(FrameId::X, home_point(FrameId::X, p), sf);
      for (FrameId f : {FrameId::Y, FrameId::Ytilde, FrameId::E}) {
        Rank4d rf = riemann(f, home_point(f, p), sf);
        for (std::size_t k = 0; k < rx.v.size(); ++k)
          worst_r = std::max(worst_r, std::abs(rx.v[k] - rf.v[k]));
      }
      Rank4c sx = spinor_curvature(FramePair::psi_x, home_point(FrameId::X, p), sf);
      for (FramePair pr : {FramePair::phi_y, FramePair::xi_e}) {
        Rank4c sp = spinor_curvature(pr, home_point(tangent_frame(pr), p), sf);
        for (std::size_t k = 0; k < sx.v.size(); ++k)
          worst_s = std::max(worst_s, std::abs(sx.v[k] - sp.v[k]));
      }
    }
    sink.add("curvature-frame-agreement", worst_r, 1e-9);
    sink.add("spinor-curvature-frame-agreement", worst_s, 1e-9);
  }
}

}  // namespace

VerificationReport run_verification(const RunConfig& config) {
  if (config.points < 1) throw UsageError("verification requires a point count >= 1");
  if (!(config.tol > 0.0)) throw UsageError("verification requires a tolerance > 0");
  ScaleFactor sf = ScaleFactor::parse(config.scale);

  std::array<std::vector<Point>, 3> pts;
  for (ChartId c : kCharts)
    pts[static_cast<std::size_t>(c)] = sample_points(c, config.points, config.seed);

  VerificationReport report;
  report.config = config;

  // reference-table comparisons, worst sampled point per index tuple
  for (const ReferenceEntry& entry : reference_registry()) {
    std::vector<ReportRow> agg;
    bool first = true;
    for (const Point& p : points_for(entry.sample_chart, pts)) {
      ComparisonReport rep = compare(entry.id, p, sf, config.tol);
      if (first) {
        agg.reserve(rep.rows.size());
        for (auto& row : rep.rows)
          agg.push_back({row.quantity, row.indices, row.computed, row.reference, row.abs_err,
                         row.status});
        first = false;
        continue;
      }
      for (std::size_t k = 0; k < rep.rows.size(); ++k) {
        const ComparisonRow& row = rep.rows[k];
        ReportRow& dst = agg[k];
        if (row.abs_err > dst.abs_err) {
          dst.computed = row.computed;
          dst.reference = row.reference;
          dst.abs_err = row.abs_err;
        }
        // mismatch dominates, then suspected-erratum, then match
        if (row.status == MatchStatus::mismatch)
          dst.status = MatchStatus::mismatch;
        else if (row.status == MatchStatus::suspected_erratum &&
                 dst.status == MatchStatus::match)
          dst.status = MatchStatus::suspected_erratum;
      }
    }
    for (auto& row : agg) report.rows.push_back(std::move(row));
  }

  run_invariants(config, sf, pts, report.rows);

  std::sort(report.rows.begin(), report.rows.end(), [](const ReportRow& a, const ReportRow& b) {
    if (a.quantity != b.quantity) return a.quantity < b.quantity;
    return a.indices < b.indices;
  });
  for (const ReportRow& row : report.rows) {
    switch (row.status) {
      case MatchStatus::match:
        ++report.matches;
        break;
      case MatchStatus::mismatch:
        ++report.mismatches;
        break;
      case MatchStatus::suspected_erratum:
        ++report.errata;
        break;
    }
  }
  return report;
}

std::string serialize_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["config"] = {{"command", report.config.command}, {"scale", report.config.scale},
                 {"points", report.config.points},   {"seed", report.config.seed},
                 {"tol", report.config.tol},         {"format", report.config.format}};
  j["entries"] = nlohmann::ordered_json::array();
  for (const ReportRow& row : report.rows) {
    nlohmann::ordered_json e;
    e["quantity"] = row.quantity;
    e["indices"] = row.indices;
    e["computed"] = {row.computed.real(), row.computed.imag()};
    e["reference"] = {row.reference.real(), row.reference.imag()};
    e["abs_err"] = row.abs_err;
    e["status"] = to_string(row.status);
    j["entries"].push_back(std::move(e));
  }
  j["summary"] = {{"matches", report.matches},
                  {"mismatches", report.mismatches},
                  {"errata", report.errata}};
  return j.dump(2) + "\n";
}

std::string serialize_csv(const VerificationReport& report) {
  std::string out;
  char buf[512];
  std::snprintf(buf, sizeof(buf), "# command=%s scale=%s points=%d seed=%llu tol=%.17g\n",
                report.config.command.c_str(), report.config.scale.c_str(), report.config.points,
                static_cast<unsigned long long>(report.config.seed), report.config.tol);
  out += buf;
  out += "quantity,indices,computed_re,computed_im,reference_re,reference_im,abs_err,status\n";
  for (const ReportRow& row : report.rows) {
    std::string idx;
    for (std::size_t k = 0; k < row.indices.size(); ++k) {
      if (k) idx += ':';
      idx += std::to_string(row.indices[k]);
    }
    std::snprintf(buf, sizeof(buf), "%s,%s,%.17g,%.17g,%.17g,%.17g,%.17g,%s\n",
                  row.quantity.c_str(), idx.c_str(), row.computed.real(), row.computed.imag(),
                  row.reference.real(), row.reference.imag(), row.abs_err,
                  to_string(row.status));
    out += buf;
  }
  std::snprintf(buf, sizeof(buf), "# summary matches=%zu mismatches=%zu errata=%zu\n",
                report.matches, report.mismatches, report.errata);
  out += buf;
  return out;
}

}  // namespace spinsphere
