#include "simulacra/constructions.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace simulacra {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::domain_error(what);
}

Cone copies(const Cone& c, Int times) {
  Cone out;
  for (Int i = 0; i < times; ++i) out += c;
  return out;
}

}  // namespace

Cone simulacrum_real_psd(Int n) {
  require(n >= 3 && n <= kMaxParameter / 1000,
          "real psd witness needs n >= 3 (n = 2 gives L3, which is H2(R) itself)");
  return lorentz(n + 1) + orthant((n * n - n - 2) / 2);
}

Cone simulacrum_complex_psd(Int n) {
  require(n >= 4 && n <= kMaxParameter / 1000,
          "complex psd witness needs n >= 4; H3(C) has no simulacra");
  return lorentz(n + 1) + lorentz(n + 1) + orthant(n * n - 5 * n + 6) + lorentz(4) +
         copies(lorentz(3), n - 4);
}

Cone simulacrum_quaternion_psd(Int n) {
  require(n >= 3 && n <= kMaxParameter / 1000, "quaternion psd witness needs n >= 3");
  return lorentz(2 * n + 2) + orthant(2 * n * n - 3 * n - 2);
}

Cone simulacrum_octonion_psd() {
  return lorentz(11) + lorentz(5) + lorentz(3) + orthant(8);
}

Cone simulacrum_double_complex() { return lorentz(7) + lorentz(3) + orthant(8); }

std::optional<Cone> lorentzify(const Cone& c) {
  Cone out;
  for (const Factor& f : c.factors()) {
    switch (f.kind) {
      case Kind::Lorentz: out += Cone::from_canonical({f}); break;
      case Kind::RealPSD: out += simulacrum_real_psd(f.n); break;
      case Kind::ComplexPSD:
        if (f.n == 3) return std::nullopt;
        out += simulacrum_complex_psd(f.n);
        break;
      case Kind::QuaternionPSD: out += simulacrum_quaternion_psd(f.n); break;
      case Kind::OctonionPSD: out += simulacrum_octonion_psd(); break;
    }
  }
  return out;
}

BigLnLnParams big_lnln_params(Int n) {
  require(n >= 100 && n <= kMaxParameter, "L^n + L^n closed form needs n >= 100");
  BigLnLnParams p;
  p.n = n;
  p.m = n / 5;
  p.k = n % 5;
  const Int m = p.m;
  const Int k = p.k;
  p.r = (m - k * k + 1) % 3;
  const Int alpha_num = m - 4 * k * k + 15 * k - 14 - p.r;
  const Int gamma_num = 4 * m - 16 * k * k - 68 + 5 * p.r;
  require(alpha_num % 3 == 0 && gamma_num % 3 == 0,
          "non-integral L^n + L^n parameters at n = " + std::to_string(n));
  p.alpha = alpha_num / 3;
  p.gamma = 2 * m - 22 * k - gamma_num / 3;
  require(p.alpha >= 0 && p.gamma >= 0,
          "negative L^n + L^n parameters at n = " + std::to_string(n));
  return p;
}

Cone big_lnln_simulacrum(Int n) {
  const BigLnLnParams p = big_lnln_params(n);
  return lorentz(7 * p.m + p.k) + lorentz(p.m + 3 * p.k - 4) +
         copies(lorentz(4), p.alpha) + copies(lorentz(3), p.r) + orthant(p.gamma);
}

BoundaryCounterexample condition1_boundary_counterexample(Int m) {
  require(m >= 5 && m <= 100'000, "boundary counterexample family needs m >= 5");
  BoundaryCounterexample out;
  out.n = 1 + lorentz_rank(m) - m;
  out.left = lorentz(m) + lorentz(out.n);
  out.right = orthant(m - 1) + lorentz(out.n + 1);
  return out;
}

}  // namespace simulacra
