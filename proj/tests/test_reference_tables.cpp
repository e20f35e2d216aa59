#include "spinsphere/reference_tables.hpp"

#include "spinsphere/spin_lift.hpp"
#include "test_util.hpp"

using namespace tests;

namespace {

const Complex kI(0.0, 1.0);

int count_status(const ComparisonReport& rep, MatchStatus s) {
  int n = 0;
  for (const auto& row : rep.rows) n += row.status == s ? 1 : 0;
  return n;
}

}  // namespace

TEST_CASE("reference evaluation basics") {
  auto r2 = ScaleFactor::constant(2.0);
  auto scal = evaluate_reference("scalar", north(0.0, 1.0, 0.0, 0.0), r2);
  CHECK(scal.values[0].real() == doctest::Approx(-1.5));

  // at R = 1 the printed and the pattern-corrected scalings coincide
  auto r1 = ScaleFactor::constant(1.0);
  auto c = evaluate_reference("commutators.x", north(0.0, 1.0, 0.0, 0.0), r1);
  CHECK(c.at({2, 1, 2}).real() == doctest::Approx(1.0));

  auto lifted = evaluate_reference("lift.ytilde-x", south(0.0, 0.0, 0.0, 1.0), r1);
  CHECK(std::abs(lifted.at({0, 0}) - kI) <= 1e-15);
  CHECK(std::abs(lifted.at({1, 1}) + kI) <= 1e-15);

  CHECK_THROWS_AS(evaluate_reference("nope", north(0.0, 1.0, 0.0, 0.0), r1), UsageError);
}

TEST_CASE("transcribed homomorphism expressions match the engine") {
  SampleRng rng(8);
  for (int n = 0; n < 200; ++n) {
    Mat2c s = rng.random_sl2c();
    check_close(reference_lorentz_image(s), phi(s), 1e-12);
  }
}

TEST_CASE("comparison classifies matches and flagged errata") {
  auto sf = ScaleFactor::hyperbolic_cosine(1.0);
  Point p = north(0.4, 0.9, -1.3, 0.6);  // R != 1 separates the scalings

  auto gamma_rep = compare("connection.x", p, sf, 1e-9);
  CHECK(count_status(gamma_rep, MatchStatus::mismatch) == 0);
  CHECK(count_status(gamma_rep, MatchStatus::suspected_erratum) == 12);

  auto spin_rep = compare("spin-connection.x", p, sf, 1e-9);
  CHECK(count_status(spin_rep, MatchStatus::mismatch) == 0);
  CHECK(count_status(spin_rep, MatchStatus::suspected_erratum) == 1);
  for (const auto& row : spin_rep.rows)
    if (row.status == MatchStatus::suspected_erratum) {
      CHECK(row.indices == std::vector<int>{1, 1, 0});
      CHECK(row.abs_err > 1e-9);  // measured against the verbatim value
    }

  auto c_rep = compare("commutators.x", p, sf, 1e-9);
  CHECK(count_status(c_rep, MatchStatus::mismatch) == 0);
  CHECK(count_status(c_rep, MatchStatus::suspected_erratum) == 12);

  auto riem_rep = compare("riemann.x", p, sf, 1e-9);
  CHECK(count_status(riem_rep, MatchStatus::mismatch) == 0);
  CHECK(count_status(riem_rep, MatchStatus::suspected_erratum) == 1);

  auto spinc_rep = compare("spinor-curvature.x", p, sf, 1e-9);
  CHECK(count_status(spinc_rep, MatchStatus::mismatch) == 0);
  CHECK(count_status(spinc_rep, MatchStatus::suspected_erratum) == 2);

  auto trans_rep = compare("transition.x-ytilde", p, sf, 1e-9);
  CHECK(count_status(trans_rep, MatchStatus::mismatch) == 0);
  CHECK(count_status(trans_rep, MatchStatus::suspected_erratum) == 9);

  auto dirac_rep = compare("dirac.x-ytilde", p, sf, 1e-9);
  CHECK(count_status(dirac_rep, MatchStatus::mismatch) == 0);
  CHECK(count_status(dirac_rep, MatchStatus::suspected_erratum) == 8);

  // a constant table compared against the engine constants: zero error
  auto d4_rep = compare("d4", p, sf, 1e-9);
  CHECK(d4_rep.all_pass());
  for (const auto& row : d4_rep.rows) CHECK(row.abs_err == 0.0);
}

TEST_CASE("unflagged tables pass cleanly at many points") {
  auto sf = ScaleFactor::hyperbolic_cosine(1.0);
  for (const char* id : {"commutators.e", "connection.e", "spin-connection.e", "ricci.e",
                         "transition.e-x", "transition.e-ytilde", "lift.e-x", "lift.e-ytilde",
                         "lift.ytilde-x.spherical", "dirac.e-x", "dirac.e-ytilde.p"}) {
    for (const Point& p : sample_points(ChartId::spherical, 20, 51)) {
      auto rep = compare(id, p, sf, 1e-9);
      CHECK(count_status(rep, MatchStatus::mismatch) == 0);
      CHECK(count_status(rep, MatchStatus::suspected_erratum) == 0);
    }
  }
  // the spherical curvature tables repeat the stereographic label slips
  for (const Point& p : sample_points(ChartId::spherical, 20, 51)) {
    auto rep = compare("riemann.e", p, sf, 1e-9);
    CHECK(count_status(rep, MatchStatus::mismatch) == 0);
    CHECK(count_status(rep, MatchStatus::suspected_erratum) == 1);
  }
  for (const char* id : {"metric.north", "frame.x", "commutators.y", "transition.y-x",
                         "transition.ytilde-x", "lorentz-image.ytilde-x", "lift.ytilde-x",
                         "dirac.ytilde-x", "dirac.ytilde-x.p", "scalar"}) {
    ChartId chart = find_reference(id).sample_chart;
    for (const Point& p : sample_points(chart, 20, 52)) {
      auto rep = compare(id, p, sf, 1e-9);
      CHECK(count_status(rep, MatchStatus::mismatch) == 0);
    }
  }
}

TEST_CASE("every registry entry carries evaluators and a sane shape") {
  auto sf = ScaleFactor::hyperbolic_cosine(1.0);
  for (const ReferenceEntry& e : reference_registry()) {
    CHECK_FALSE(e.id.empty());
    CHECK_FALSE(e.provenance.empty());
    Point p = sample_points(e.sample_chart, 1, 53)[0];
    auto verb = e.verbatim(p, sf);
    auto eng = e.engine(p, sf);
    CHECK(verb.dims == eng.dims);
    for (const auto& flag : e.flags) CHECK_NOTHROW(verb.flat(flag.index));
  }
}
