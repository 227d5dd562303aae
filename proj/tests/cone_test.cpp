#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "simulacra/cone.hpp"
#include "simulacra/search.hpp"

using namespace simulacra;

namespace {

Factor L(Int n) { return {Kind::Lorentz, n}; }
Factor HR(Int n) { return {Kind::RealPSD, n}; }
Factor HC(Int n) { return {Kind::ComplexPSD, n}; }
Factor HH(Int n) { return {Kind::QuaternionPSD, n}; }
Factor HO(Int n) { return {Kind::OctonionPSD, n}; }

// Random raw factor, aliases included, small enough to keep sums cheap.
Factor random_raw(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, 4);
  std::uniform_int_distribution<Int> lor(0, 40);
  std::uniform_int_distribution<Int> mat(0, 8);
  std::uniform_int_distribution<Int> oct(0, 3);
  switch (kind(rng)) {
    case 0: return L(lor(rng));
    case 1: return HR(mat(rng));
    case 2: return HC(mat(rng));
    case 3: return HH(mat(rng));
    default: return HO(oct(rng));
  }
}

std::vector<Factor> random_raw_list(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(0, 6);
  std::vector<Factor> v(static_cast<std::size_t>(len(rng)));
  for (auto& f : v) f = random_raw(rng);
  return v;
}

}  // namespace

TEST_CASE("irreducible dimensions and ranks") {
  CHECK(factor_dim(L(5)) == 5);
  CHECK(factor_rank(L(5)) == 11);
  CHECK(factor_dim(HR(3)) == 6);
  CHECK(factor_rank(HR(3)) == 9);
  CHECK(factor_dim(HC(3)) == 9);
  CHECK(factor_rank(HC(3)) == 17);
  CHECK(factor_dim(HH(3)) == 15);
  CHECK(factor_rank(HH(3)) == 36);
  CHECK(factor_dim(HO(3)) == 27);
  CHECK(factor_rank(HO(3)) == 79);
  CHECK(factor_rank(L(1)) == 1);
  CHECK(factor_rank(L(3)) == 4);
}

TEST_CASE("dimensions agree with the matrix-size oracle") {
  for (Int n = 1; n <= 60; ++n) {
    CHECK(factor_dim(L(n)) == oracle::raw_dim(Kind::Lorentz, n));
    if (n >= 3) {
      CHECK(factor_dim(HR(n)) == oracle::raw_dim(Kind::RealPSD, n));
      CHECK(factor_dim(HC(n)) == oracle::raw_dim(Kind::ComplexPSD, n));
      CHECK(factor_dim(HH(n)) == oracle::raw_dim(Kind::QuaternionPSD, n));
    }
  }
  CHECK(factor_dim(HO(3)) == oracle::raw_dim(Kind::OctonionPSD, 3));
}

TEST_CASE("rank of non-canonical factors is refused") {
  CHECK_THROWS_AS(factor_rank(L(0)), NonCanonicalFactor);
  CHECK_THROWS_AS(factor_rank(L(2)), NonCanonicalFactor);
  CHECK_THROWS_AS(factor_rank(HH(1)), NonCanonicalFactor);
  CHECK_THROWS_AS(factor_rank(HR(2)), NonCanonicalFactor);
  CHECK_THROWS_AS(factor_rank(HO(4)), NonCanonicalFactor);
  CHECK_THROWS_AS(Cone::from_canonical({L(2)}), NonCanonicalFactor);
}

TEST_CASE("canonicalization of aliases") {
  CHECK(Cone::canonicalize({L(2)}) == orthant(2));
  CHECK(Cone::canonicalize({HR(1)}) == orthant(1));
  CHECK(Cone::canonicalize({HC(1)}) == orthant(1));
  CHECK(Cone::canonicalize({HH(1)}) == orthant(1));
  CHECK(Cone::canonicalize({HO(1)}) == orthant(1));
  CHECK(Cone::canonicalize({HR(2)}) == lorentz(3));
  CHECK(Cone::canonicalize({HC(2)}) == lorentz(4));
  CHECK(Cone::canonicalize({HH(2)}) == lorentz(6));
  CHECK(Cone::canonicalize({HO(2)}) == lorentz(10));
  CHECK(Cone::canonicalize({L(0), HR(0), HO(0)}).empty());
  CHECK(Cone::canonicalize({L(1), L(5), L(3)}).factors() ==
        std::vector<Factor>{L(5), L(3), L(1)});
  CHECK(Cone::canonicalize({HR(3), L(6)}).factors() ==
        std::vector<Factor>{HR(3), L(6)});
  CHECK_THROWS_AS(Cone::canonicalize({HO(4)}), CanonicalizationError);
  CHECK_THROWS_AS(Cone::canonicalize({L(-1)}), std::out_of_range);
}

TEST_CASE("signatures") {
  CHECK(signature(Cone::canonicalize({HO(3)})) == Signature{27, 79});
  CHECK(signature(Cone::canonicalize({HC(3), L(30)})) == Signature{39, 453});
  CHECK(signature(Cone{}) == Signature{0, 0});
  CHECK(signature(orthant(7)) == Signature{7, 7});
  CHECK(signature(Cone::canonicalize({L(2)})) == Signature{2, 2});
  CHECK(to_string(Signature{6, 9}) == "(6, 9)");
}

TEST_CASE("relations") {
  CHECK(relation(real_psd(3), Cone::canonicalize({L(4), L(1), L(1)})) ==
        Relation::Simulacra);
  CHECK(relation(Cone::canonicalize({L(2)}), orthant(2)) == Relation::Isomorphic);
  CHECK(relation(lorentz(5), Cone::canonicalize({L(4), L(1)})) == Relation::Distinct);
  CHECK(relation_name(Relation::Simulacra) == "Simulacra");
}

TEST_CASE("convenience constructors validate") {
  CHECK_THROWS(orthant(-1));
  CHECK_THROWS(orthant(kMaxParameter + 1));
  CHECK(orthant(0).empty());
  CHECK(octonion_psd().factors() == std::vector<Factor>{HO(3)});
}

TEST_CASE("low-dimensional aliases are consistent") {
  const std::vector<std::pair<Factor, Signature>> cases{
      {HR(2), {3, 4}}, {HC(2), {4, 7}}, {HH(2), {6, 16}}, {HO(2), {10, 46}}};
  for (const auto& [f, sig] : cases) {
    CHECK(signature(Cone::canonicalize({f})) == sig);
  }
}

TEST_CASE("lorentz rank extension") {
  CHECK(lorentz_rank(0) == 0);
  CHECK(lorentz_rank(1) == 1);
  CHECK(lorentz_rank(2) == 2);
  CHECK(lorentz_rank(4) == 7);
}

TEST_CASE("property: canonicalization is idempotent and order independent") {
  std::mt19937_64 rng(0x5eed0001);
  for (int i = 0; i < 10000; ++i) {
    auto raw = random_raw_list(rng);
    const Cone c = Cone::canonicalize(raw);
    CHECK(Cone::canonicalize(c.factors()) == c);
    std::shuffle(raw.begin(), raw.end(), rng);
    CHECK(Cone::canonicalize(raw) == c);
    for (std::size_t j = 1; j < c.size(); ++j) {
      CHECK_FALSE(factor_precedes(c.factors()[j], c.factors()[j - 1]));
    }
  }
}

TEST_CASE("property: signatures are additive") {
  std::mt19937_64 rng(0x5eed0002);
  for (int i = 0; i < 10000; ++i) {
    const Cone a = Cone::canonicalize(random_raw_list(rng));
    const Cone b = Cone::canonicalize(random_raw_list(rng));
    CHECK(signature(a + b) == signature(a) + signature(b));
    CHECK(a + b == b + a);
    CHECK((a + b).dim() == a.dim() + b.dim());
  }
}

TEST_CASE("property: relation trichotomy") {
  std::mt19937_64 rng(0x5eed0003);
  for (int i = 0; i < 10000; ++i) {
    const Cone a = Cone::canonicalize(random_raw_list(rng));
    const Cone b = Cone::canonicalize(random_raw_list(rng));
    const Relation r = relation(a, b);
    CHECK(r == relation(b, a));
    CHECK((r == Relation::Isomorphic) == (a == b));
    CHECK((r == Relation::Distinct) == (signature(a) != signature(b)));
  }
}

TEST_CASE("orthant has the smallest and Lorentz the largest rank per dimension") {
  for (Int d = 1; d <= 12; ++d) {
    const auto cones = oracle::all_cones(d);
    Int lo = signature(*cones.begin()).rank;
    Int hi = lo;
    for (const Cone& c : cones) {
      lo = std::min(lo, signature(c).rank);
      hi = std::max(hi, signature(c).rank);
    }
    CHECK(lo == d);
    CHECK(hi == lorentz_rank(d));
    for (const Cone& c : cones) {
      if (signature(c).rank == d) CHECK(c == orthant(d));
      if (d != 2 && signature(c).rank == hi) CHECK(c == lorentz(d));
    }
  }
}

TEST_CASE("without and contains") {
  const Cone c = Cone::canonicalize({L(5), L(5), HR(3)});
  CHECK(c.count(L(5)) == 2);
  CHECK(c.contains(HR(3)));
  CHECK(c.without(L(5)) == Cone::canonicalize({L(5), HR(3)}));
  CHECK_FALSE(c.without(L(4)).has_value());
  CHECK_FALSE(c.all_lorentz());
}
