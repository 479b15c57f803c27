#include <doctest.h>

#include <random>

#include "evspace/admissibility.hpp"
#include "evspace/errors.hpp"
#include "support.hpp"

using namespace evspace;
using testing::P;
using testing::T;

namespace {

// Classical interval written out with min/max instead of absolute values.
bool classical_oracle(const CondTriple& t) {
  Rational p = t.p.value(), q = t.q.value(), r = t.r.value();
  Rational s = p + q - 1;
  Rational lower = s < 0 ? Rational(-s) : s;
  Rational upper = 1 - (p > q ? Rational(p - q) : Rational(q - p));
  return lower <= r && r <= upper;
}

// Quantum interval endpoints at 512 bits; ties within 1e-100 count as on the
// endpoint, which is only reachable when sqrt(ab) is rational.
struct ComplexOracle {
  bool inside = false;
  bool on_endpoint = false;
};

ComplexOracle complex_oracle(const CondTriple& t) {
  constexpr unsigned kBits = 512;
  mpf_class p(t.p.value(), kBits), q(t.q.value(), kBits), r(t.r.value(), kBits);
  mpf_class sa = sqrt(mpf_class(p * q, kBits));
  mpf_class sb = sqrt(mpf_class((1 - p) * (1 - q), kBits));
  mpf_class lo = (sa - sb) * (sa - sb);
  mpf_class hi = (sa + sb) * (sa + sb);
  mpf_class tol("1e-100", kBits);
  bool at_lo = abs(mpf_class(r - lo, kBits)) < tol;
  bool at_hi = abs(mpf_class(r - hi, kBits)) < tol;
  return {at_lo || at_hi || (lo < r && r < hi), at_lo || at_hi};
}

}  // namespace

TEST_CASE("check_classical examples") {
  CHECK_FALSE(check_classical(T("13/18", "5/18", "10/17")));
  CHECK(check_classical(T("1/2", "1/2", "1/2")));
  CHECK(check_classical(T("1/4", "1/4", "1/2")));
  CHECK_FALSE(check_classical(T("1", "1", "1/2")));
}

TEST_CASE("check_complex_qs examples") {
  CHECK_FALSE(check_complex_qs(T("1/12", "1/12", "1/12")));
  CHECK_FALSE(check_complex_qs(T("1/10", "2/10", "3/10")));
  CHECK(check_complex_qs(T("1/4", "1/4", "1/2")));
}

TEST_CASE("check_real_qs examples") {
  CHECK(check_real_qs(T("1/4", "1/4", "1/4")));
  CHECK_FALSE(check_real_qs(T("1/4", "1/4", "1/2")));
  CHECK(check_real_qs(T("1/2", "1/2", "0")));
}

TEST_CASE("classify rows of the survey table") {
  auto row = [](const char* p, const char* q, const char* r) {
    auto v = classify(T(p, q, r));
    return std::array<bool, 3>{v.classical, v.real_qs, v.complex_qs};
  };
  CHECK(row("1", "1", "1") == std::array<bool, 3>{true, true, true});
  CHECK(row("1/4", "1/4", "1/2") == std::array<bool, 3>{true, false, true});
  CHECK(row("1/4", "1/4", "1/4") == std::array<bool, 3>{false, true, true});
  CHECK(row("1/12", "1/12", "1/12") == std::array<bool, 3>{false, false, false});
}

TEST_CASE("classify bounds, boundary and symmetry flags") {
  auto v = classify(T("13/18", "5/18", "10/17"));
  CHECK(v.classical_bounds.lower == P("0"));
  CHECK(v.classical_bounds.upper == P("5/9"));
  CHECK_FALSE(v.symmetry_checked);
  CHECK(v.complex_bounds.lower == doctest::Approx(0.0));
  CHECK(v.complex_bounds.upper == doctest::Approx((std::sqrt(65.0) + std::sqrt(65.0)) *
                                                  (std::sqrt(65.0) + std::sqrt(65.0)) / 324.0));

  auto edge = classify(CondTriple(P("2/5"), P("4/5"), P("1/5"), P("1/2")));
  CHECK(edge.classical);
  CHECK(edge.boundary);
  CHECK(edge.symmetry_checked);

  auto other = classify(CondTriple(P("1/2"), P("1/2"), P("1/2"), P("1/3")));
  CHECK_FALSE(other.symmetry_checked);
  CHECK_FALSE(other.boundary);
}

TEST_CASE("classify is pure") {
  auto t = T("3/7", "2/9", "5/11");
  CHECK(classify(t) == classify(t));
}

TEST_CASE("neither space admits (1/10, 2/10, 3/10)") {
  auto v = classify(T("1/10", "2/10", "3/10"));
  CHECK_FALSE(v.classical);
  CHECK_FALSE(v.complex_qs);
  CHECK_FALSE(v.real_qs);
}

TEST_CASE("admissibility agrees with independent oracles") {
  std::mt19937 rng(2024);
  int endpoints = 0;
  for (int iter = 0; iter < 3000; ++iter) {
    CondTriple t = testing::random_triple(rng, 12);
    INFO(to_string(t));
    REQUIRE(check_classical(t) == classical_oracle(t));
    auto oracle = complex_oracle(t);
    REQUIRE(check_complex_qs(t) == oracle.inside);
    REQUIRE(check_real_qs(t) == oracle.on_endpoint);
    endpoints += oracle.on_endpoint;
  }
  CHECK(endpoints > 0);
}

TEST_CASE("classical and real admissibility each imply complex admissibility") {
  std::mt19937 rng(99);
  for (int iter = 0; iter < 3000; ++iter) {
    CondTriple t = testing::random_triple(rng, 12);
    INFO(to_string(t));
    if (check_classical(t)) REQUIRE(check_complex_qs(t));
    if (check_real_qs(t)) REQUIRE(check_complex_qs(t));
    auto v = classify(t);
    if (v.classical) REQUIRE(v.classical_bounds.lower <= v.classical_bounds.upper);
  }
}

TEST_CASE("statistical_invariant examples") {
  auto a = statistical_invariant(P("1/2"), P("1/5"), P("9/10"));
  REQUIRE(a.ratio.has_value());
  CHECK(*a.ratio == Rational(3, 7));
  CHECK(a.holds);
  CHECK(a.between);
  CHECK_FALSE(a.degenerate);

  auto b = statistical_invariant(P("1/5"), P("1/5"), P("2/3"));
  CHECK(*b.ratio == 0);
  CHECK(b.holds);

  auto c = statistical_invariant(P("19/20"), P("1/5"), P("9/10"));
  CHECK(*c.ratio == Rational(15, 14));
  CHECK_FALSE(c.holds);
  // No pA in [0,1] reaches 19/20: the composition is monotone between 1/5 and 9/10.
  CHECK(ltp_compose(P("1"), P("1/5"), P("9/10")) < P("19/20"));
  CHECK(ltp_compose(P("0"), P("1/5"), P("9/10")) < P("19/20"));

  auto d = statistical_invariant(P("1/3"), P("1/3"), P("1/3"));
  CHECK(d.degenerate);
  CHECK(d.holds);
  auto e = statistical_invariant(P("1/2"), P("1/3"), P("1/3"));
  CHECK(e.degenerate);
  CHECK_FALSE(e.holds);
  CHECK_FALSE(e.ratio.has_value());
}

TEST_CASE("statistical_invariant matches existence of a mixing weight") {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 2000; ++iter) {
    Prob pb = testing::random_prob(rng), x = testing::random_prob(rng), y = testing::random_prob(rng);
    bool exists;
    if (x == y) {
      exists = pb == x;
    } else {
      Rational a = (pb.value() - y.value()) / (x.value() - y.value());
      exists = a >= 0 && a <= 1;
    }
    auto rep = statistical_invariant(pb, x, y);
    REQUIRE(rep.between == exists);
    if (rep.between) REQUIRE(rep.holds);
  }
  // The absolute ratio alone also admits the reflection of the interval.
  auto mirror = statistical_invariant(P("0"), P("1/5"), P("9/10"));
  CHECK(mirror.holds);
  CHECK(*mirror.ratio == Rational(2, 7));
  CHECK_FALSE(mirror.between);
}

TEST_CASE("ltp_compose examples and properties") {
  CHECK(ltp_compose(P("1"), P("2/7"), P("5/9")) == P("2/7"));
  CHECK(ltp_compose(P("0"), P("2/7"), P("5/9")) == P("5/9"));
  CHECK(ltp_compose(P("1/2"), P("1/5"), P("9/10")) == P("11/20"));

  std::mt19937 rng(3);
  for (int iter = 0; iter < 2000; ++iter) {
    Prob a = testing::random_prob(rng), x = testing::random_prob(rng), y = testing::random_prob(rng);
    Prob b = ltp_compose(a, x, y);
    REQUIRE(b.value() + ltp_compose(a, x.complement(), y.complement()).value() == 1);
    REQUIRE(statistical_invariant(b, x, y).holds);
    REQUIRE(statistical_invariant(b, x, y).between);
  }
}

TEST_CASE("bayes_invert examples and errors") {
  CHECK(bayes_invert(P("1/5"), P("1/2"), P("11/20")) == P("2/11"));
  CHECK(bayes_invert(P("3/7"), P("1"), P("3/7")) == P("1"));
  CHECK_THROWS_AS(bayes_invert(P("9/10"), P("9/10"), P("1/10")), IncoherentInputs);
  try {
    bayes_invert(P("9/10"), P("9/10"), P("1/10"));
  } catch (const IncoherentInputs& e) {
    CHECK(std::string(e.what()).rfind("incoherent-inputs", 0) == 0);
  }
  CHECK_THROWS_AS(bayes_invert(P("1/2"), P("1/2"), P("0")), ZeroMeasureError);
}
