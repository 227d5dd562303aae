#include <doctest.h>

#include "simulacra/constructions.hpp"
#include "simulacra/expression.hpp"

using namespace simulacra;

namespace {

// Closed-form signatures of the irreducible targets.
Signature real_sig(Int n) { return {n * (n + 1) / 2, n * n}; }
Signature complex_sig(Int n) { return {n * n, 2 * n * n - 1}; }
Signature quaternion_sig(Int n) { return {2 * n * n - n, 4 * n * n}; }
Signature lorentz_sig(Int n) { return {n, (n * n - n + 2) / 2}; }

}  // namespace

TEST_CASE("real symmetric witnesses") {
  CHECK(simulacrum_real_psd(3) == parse_cone("L4 + R2"));
  CHECK(simulacrum_real_psd(4) == parse_cone("L5 + R5"));
  CHECK(signature(simulacrum_real_psd(4)) == Signature{10, 16});
  CHECK(simulacrum_real_psd(5) == parse_cone("L6 + R9"));
  CHECK(signature(simulacrum_real_psd(5)) == Signature{15, 25});
  CHECK_THROWS_AS(simulacrum_real_psd(2), std::domain_error);
}

TEST_CASE("complex hermitian witnesses") {
  CHECK(simulacrum_complex_psd(4) == parse_cone("2*L5 + R2 + L4"));
  CHECK(signature(simulacrum_complex_psd(4)) == Signature{16, 31});
  CHECK(simulacrum_complex_psd(5) == parse_cone("2*L6 + R6 + L4 + L3"));
  CHECK(signature(simulacrum_complex_psd(5)) == Signature{25, 49});
  CHECK(signature(simulacrum_complex_psd(6)) == Signature{36, 71});
  CHECK_THROWS_AS(simulacrum_complex_psd(3), std::domain_error);
}

TEST_CASE("quaternion witnesses") {
  CHECK(simulacrum_quaternion_psd(3) == parse_cone("L8 + R7"));
  CHECK(signature(simulacrum_quaternion_psd(3)) == Signature{15, 36});
  CHECK(simulacrum_quaternion_psd(4) == parse_cone("L10 + R18"));
  CHECK(signature(simulacrum_quaternion_psd(5)) == Signature{45, 100});
  CHECK_THROWS_AS(simulacrum_quaternion_psd(2), std::domain_error);
}

TEST_CASE("octonion and double complex witnesses") {
  const Cone o = simulacrum_octonion_psd();
  CHECK(o == parse_cone("L11 + L5 + L3 + R8"));
  CHECK(signature(o) == Signature{27, 79});
  CHECK(relation(o, octonion_psd()) == Relation::Simulacra);
  const Cone d = simulacrum_double_complex();
  CHECK(signature(d) == Signature{18, 34});
  CHECK(relation(d, complex_psd(3) + complex_psd(3)) == Relation::Simulacra);
}

TEST_CASE("witness families hold up to n = 200") {
  for (Int n = 3; n <= 200; ++n) {
    CAPTURE(n);
    CHECK(signature(simulacrum_real_psd(n)) == real_sig(n));
    CHECK(simulacrum_real_psd(n).all_lorentz());
    CHECK(relation(simulacrum_real_psd(n), real_psd(n)) == Relation::Simulacra);
    CHECK(signature(simulacrum_quaternion_psd(n)) == quaternion_sig(n));
    CHECK(relation(simulacrum_quaternion_psd(n), quaternion_psd(n)) == Relation::Simulacra);
    if (n >= 4) {
      CHECK(signature(simulacrum_complex_psd(n)) == complex_sig(n));
      CHECK(relation(simulacrum_complex_psd(n), complex_psd(n)) == Relation::Simulacra);
    }
  }
}

TEST_CASE("lorentzify") {
  CHECK(lorentzify(parse_cone("H3(R) + L5")) == parse_cone("L5 + L4 + R2"));
  CHECK_FALSE(lorentzify(complex_psd(3)));
  CHECK_FALSE(lorentzify(parse_cone("H3(C) + H4(R)")));
  CHECK(lorentzify(lorentz(9)) == lorentz(9));
  CHECK(lorentzify(octonion_psd()) == simulacrum_octonion_psd());
  for (const char* expr : {"H4(C) + H3(H) + H3(O) + L7", "2*H5(R) + H6(C)", "R3"}) {
    const Cone c = parse_cone(expr);
    const auto l = lorentzify(c);
    REQUIRE(l);
    CHECK(l->all_lorentz());
    CHECK(signature(*l) == signature(c));
  }
}

TEST_CASE("large L^n + L^n witness") {
  const auto p = big_lnln_params(100);
  CHECK(p.m == 20);
  CHECK(p.k == 0);
  CHECK(p.r == 0);
  CHECK(p.alpha == 2);
  CHECK(p.gamma == 36);
  CHECK(big_lnln_simulacrum(100) == parse_cone("L140 + L16 + 2*L4 + R36"));
  CHECK(signature(big_lnln_simulacrum(100)) == Signature{200, 9902});
  const auto q = big_lnln_params(101);
  CHECK(q.m == 20);
  CHECK(q.k == 1);
  CHECK(q.r == 2);
  CHECK_THROWS_AS(big_lnln_params(99), std::domain_error);
}

TEST_CASE("large L^n + L^n parameters are integral and nonnegative") {
  for (Int n = 100; n <= 10000; ++n) {
    const auto p = big_lnln_params(n);
    const Int m = n / 5;
    const Int k = n % 5;
    const Int r = ((m - k * k + 1) % 3 + 3) % 3;
    const bool ok = p.m == m && p.k == k && p.r == r && p.alpha >= 0 && p.gamma >= 0 &&
                    3 * p.alpha == m - 4 * k * k + 15 * k - 14 - r &&
                    3 * (2 * m - 22 * k - p.gamma) == 4 * m - 16 * k * k - 68 + 5 * r;
    if (!ok) FAIL("bad parameters at n=" << n);
    if (n <= 2000) {
      const Cone j = big_lnln_simulacrum(n);
      const Signature s = lorentz_sig(n) + lorentz_sig(n);
      if (signature(j) != s || j.factors().front() != Factor{Kind::Lorentz, n + 2 * m}) {
        FAIL("bad witness at n=" << n);
      }
    }
  }
}

TEST_CASE("first-condition boundary family") {
  const auto b5 = condition1_boundary_counterexample(5);
  CHECK(b5.n == 7);
  CHECK(b5.left == parse_cone("L5 + L7"));
  CHECK(b5.right == parse_cone("R4 + L8"));
  CHECK(signature(b5.left) == Signature{12, 33});
  CHECK(signature(b5.right) == Signature{12, 33});
  CHECK(condition1_boundary_counterexample(6).n == 11);
  for (Int m = 5; m <= 200; ++m) {
    const auto b = condition1_boundary_counterexample(m);
    CHECK(relation(b.left, b.right) == Relation::Simulacra);
  }
  CHECK_THROWS_AS(condition1_boundary_counterexample(4), std::domain_error);
}
