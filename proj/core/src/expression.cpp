#include "simulacra/expression.hpp"

#include <cctype>
#include <limits>

namespace simulacra {

namespace {

constexpr Int kMaxFactors = 1'000'000;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::vector<Factor> parse() {
    std::vector<Factor> out;
    skip_space();
    if (at_end()) fail("empty expression");
    term(out);
    skip_space();
    while (!at_end()) {
      expect('+');
      term(out);
      skip_space();
    }
    return out;
  }

 private:
  void term(std::vector<Factor>& out) {
    skip_space();
    Int count = 1;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      count = integer();
      expect('*');
    }
    const std::size_t start = pos_;
    const Factor f = factor();
    Int copies = count;
    Factor pushed = f;
    if (orthant_) {
      copies = count * f.n;
      pushed = {Kind::Lorentz, 1};
    }
    total_ += copies;
    if (total_ > kMaxFactors) {
      throw ParseError("expression expands to too many factors", start);
    }
    out.insert(out.end(), static_cast<std::size_t>(copies), pushed);
  }

  Factor factor() {
    skip_space();
    if (at_end()) fail("expected factor");
    const char head = peek();
    orthant_ = false;
    switch (head) {
      case 'L': {
        ++pos_;
        return {Kind::Lorentz, integer()};
      }
      case 'R': {
        ++pos_;
        orthant_ = true;
        return {Kind::Lorentz, integer()};
      }
      case 'H': {
        ++pos_;
        const Int n = integer();
        expect('(');
        skip_space();
        if (at_end()) fail("expected field R, C, H or O");
        Kind kind{};
        switch (peek()) {
          case 'R': kind = Kind::RealPSD; break;
          case 'C': kind = Kind::ComplexPSD; break;
          case 'H': kind = Kind::QuaternionPSD; break;
          case 'O': kind = Kind::OctonionPSD; break;
          default: fail("expected field R, C, H or O");
        }
        ++pos_;
        expect(')');
        return {kind, n};
      }
      default:
        fail(std::string("unexpected character '") + head + "'");
    }
  }

  Int integer() {
    skip_space();
    const std::size_t start = pos_;
    Int value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > kMaxParameter) {
        throw ParseError("integer too large (limit " +
                             std::to_string(kMaxParameter) + ")",
                         start);
      }
      ++pos_;
    }
    if (pos_ == start) fail("expected integer");
    return value;
  }

  void expect(char c) {
    skip_space();
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, pos_);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
  bool orthant_ = false;
  Int total_ = 0;
};

}  // namespace

std::vector<Factor> parse_factors(std::string_view text) {
  return Parser(text).parse();
}

Cone parse_cone(std::string_view text) {
  const auto raw = parse_factors(text);
  return Cone::canonicalize(raw);
}

std::string format_factor(const Factor& f) {
  const std::string n = std::to_string(f.n);
  switch (f.kind) {
    case Kind::Lorentz: return "L" + n;
    case Kind::RealPSD: return "H" + n + "(R)";
    case Kind::ComplexPSD: return "H" + n + "(C)";
    case Kind::QuaternionPSD: return "H" + n + "(H)";
    case Kind::OctonionPSD: return "H" + n + "(O)";
  }
  return "?";
}

std::string format_cone(const Cone& c) {
  const auto& fs = c.factors();
  std::string out;
  std::size_t ones = 0;
  for (std::size_t i = 0; i < fs.size();) {
    if (fs[i] == Factor{Kind::Lorentz, 1}) {
      ++ones;
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < fs.size() && fs[j] == fs[i]) ++j;
    if (!out.empty()) out += " + ";
    if (j - i > 1) out += std::to_string(j - i) + "*";
    out += format_factor(fs[i]);
    i = j;
  }
  if (ones > 0 || out.empty()) {
    if (!out.empty()) out += " + ";
    out += "R" + std::to_string(ones);
  }
  return out;
}

}  // namespace simulacra
