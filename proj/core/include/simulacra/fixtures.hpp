#ifndef SIMULACRA_FIXTURES_HPP
#define SIMULACRA_FIXTURES_HPP

#include <span>
#include <string_view>
#include <vector>

#include "simulacra/cone.hpp"

namespace simulacra {

/// One line of the L^n + L^n witness fixture: the Lorentz sizes of a cone
/// claimed to share the signature of L^n + L^n.
struct LnLnWitness {
  Int n = 0;
  std::vector<Int> parts;  // ascending
};

/// Parses the fixture format: UTF-8 lines `n: p1,p2,...,pk` with ascending
/// parts; blank lines and lines starting with '#' are ignored. Throws
/// ParseError (position = byte offset) on malformed lines.
std::vector<LnLnWitness> parse_lnln_fixture(std::string_view text);

/// The fixture shipped in data/appendix_b.txt, compiled in.
std::string_view lnln_fixture_text();

/// A published witness row for H_3(C) + L^n.
struct ComplexPlusLorentzRow {
  Int n;
  Int dim;
  Int rank;
  std::string_view witness;  // cone expression
};

std::span<const ComplexPlusLorentzRow> complex_plus_lorentz_rows();

/// n such that L^n + L^n has no symmetric simulacra.
std::span<const Int> lnln_exceptions();

}  // namespace simulacra

#endif  // SIMULACRA_FIXTURES_HPP
