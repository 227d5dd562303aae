#include "simulacra/fixtures.hpp"

#include <array>
#include <charconv>
#include <string>

#include "simulacra/expression.hpp"

namespace simulacra {

namespace {

constexpr std::array<ComplexPlusLorentzRow, 14> kComplexPlusLorentz{{
    {2, 11, 19, "L5 + L3 + L3"},
    {3, 12, 21, "L4 + L4 + L4"},
    {4, 13, 24, "L6 + L3 + R4"},
    {5, 14, 28, "L6 + L4 + L3 + R1"},
    {6, 15, 33, "L5 + L5 + L5"},
    {7, 16, 39, "L6 + L6 + L4"},
    {8, 17, 46, "L9 + L3 + R5"},
    {9, 18, 54, "L10 + R8"},
    {10, 19, 63, "L9 + L7 + L3"},
    {15, 24, 123, "L14 + L8 + R2"},
    {18, 27, 171, "L14 + L13"},
    {21, 30, 228, "L19 + L11"},
    {22, 31, 249, "L21 + L9 + R1"},
    {30, 39, 453, "L29 + L10"},
}};

constexpr std::array<Int, 11> kLnLnExceptions{0, 1, 2, 3, 5, 6, 7, 11, 12, 13, 18};

Int read_int(std::string_view text, std::size_t& pos, std::size_t base) {
  while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  Int value = 0;
  const char* first = text.data() + pos;
  const auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), value);
  if (ec != std::errc{} || value < 0) throw ParseError("expected integer", base + pos);
  pos += static_cast<std::size_t>(ptr - first);
  while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  return value;
}

}  // namespace

std::vector<LnLnWitness> parse_lnln_fixture(std::string_view text) {
  std::vector<LnLnWitness> rows;
  std::size_t offset = 0;
  while (offset < text.size()) {
    std::size_t end = text.find('\n', offset);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(offset, end - offset);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::size_t base = offset;
    offset = end + 1;

    const auto first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#') continue;

    std::size_t pos = 0;
    LnLnWitness row;
    row.n = read_int(line, pos, base);
    if (pos >= line.size() || line[pos] != ':') throw ParseError("expected ':'", base + pos);
    ++pos;
    for (;;) {
      const std::size_t at = base + pos;
      const Int part = read_int(line, pos, base);
      if (part < 1) throw ParseError("parts must be positive", at);
      if (!row.parts.empty() && part < row.parts.back()) {
        throw ParseError("parts must be ascending", at);
      }
      row.parts.push_back(part);
      if (pos == line.size()) break;
      if (line[pos] != ',') throw ParseError("expected ','", base + pos);
      ++pos;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::span<const ComplexPlusLorentzRow> complex_plus_lorentz_rows() {
  return kComplexPlusLorentz;
}

std::span<const Int> lnln_exceptions() { return kLnLnExceptions; }

}  // namespace simulacra
