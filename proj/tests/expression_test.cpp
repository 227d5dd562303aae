#include <doctest.h>

#include <random>

#include "simulacra/expression.hpp"

using namespace simulacra;

TEST_CASE("parsing cone expressions") {
  CHECK(signature(parse_cone("H3(O)")) == Signature{27, 79});
  CHECK(parse_cone("L2") == orthant(2));
  CHECK(parse_cone("  H3( C ) +L30 ") ==
        Cone::canonicalize({{Kind::ComplexPSD, 3}, {Kind::Lorentz, 30}}));
  CHECK(parse_cone("3*L4 + R2") ==
        Cone::canonicalize({{Kind::Lorentz, 4}, {Kind::Lorentz, 4},
                            {Kind::Lorentz, 4}, {Kind::Lorentz, 1},
                            {Kind::Lorentz, 1}}));
  CHECK(parse_cone("R0").empty());
  CHECK(parse_factors("H2(R) + L1") ==
        std::vector<Factor>{{Kind::RealPSD, 2}, {Kind::Lorentz, 1}});
}

TEST_CASE("parse errors carry a byte position") {
  auto pos = [](std::string_view text) -> std::size_t {
    try {
      parse_cone(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return std::string_view::npos;
  };
  CHECK(pos("L3 + X") == 5);
  CHECK(pos("") == 0);
  CHECK(pos("L") == 1);
  CHECK(pos("H3(Q)") == 3);
  CHECK(pos("H3(C") == 4);
  CHECK(pos("L3 +") == 4);
  CHECK(pos("L3 L4") == 3);
  CHECK(pos("L99999999999999999999") == 1);
  CHECK(pos("L20000000") == 1);
  CHECK_THROWS_AS(parse_cone("H5(O)"), CanonicalizationError);
}

TEST_CASE("formatting") {
  CHECK(format_cone(Cone{}) == "R0");
  CHECK(format_cone(parse_cone("L2")) == "R2");
  CHECK(format_cone(parse_cone("L1 + L5 + H3(R) + L5")) == "H3(R) + 2*L5 + R1");
  CHECK(format_cone(octonion_psd()) == "H3(O)");
  CHECK(format_factor({Kind::QuaternionPSD, 4}) == "H4(H)");
  CHECK(format_factor({Kind::Lorentz, 7}) == "L7");
}

TEST_CASE("property: format then parse is the identity") {
  std::mt19937_64 rng(0x5eed0101);
  std::uniform_int_distribution<int> kind(0, 4);
  std::uniform_int_distribution<Int> size(0, 12);
  std::uniform_int_distribution<int> len(0, 8);
  for (int i = 0; i < 10000; ++i) {
    std::vector<Factor> raw(static_cast<std::size_t>(len(rng)));
    for (auto& f : raw) {
      f.kind = static_cast<Kind>(kind(rng));
      f.n = f.kind == Kind::OctonionPSD ? size(rng) % 4 : size(rng);
    }
    const Cone c = Cone::canonicalize(raw);
    const std::string text = format_cone(c);
    CHECK(parse_cone(text) == c);
    CHECK(format_cone(parse_cone(text)) == text);
  }
}
