#ifndef SIMULACRA_CONE_HPP
#define SIMULACRA_CONE_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace simulacra {

using Int = std::int64_t;

// Largest accepted family parameter. Keeps every rank (at most 4n^2) and
// every realistic direct sum comfortably inside 64 bits.
inline constexpr Int kMaxParameter = 10'000'000;

/// The five families of irreducible symmetric cones. The enumerator order is
/// the tie-breaking order used when sorting factors of equal dimension.
enum class Kind : std::uint8_t {
  Lorentz,
  RealPSD,
  ComplexPSD,
  QuaternionPSD,
  OctonionPSD,
};

std::string_view kind_name(Kind kind);

/// Thrown when a factor cannot name a Euclidean Jordan algebra at all,
/// e.g. 4x4 octonion matrices.
class CanonicalizationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a rank is requested for a factor outside its canonical range.
/// The closed-form ranks are wrong there (L^0, H_1 over the quaternions...),
/// so callers must canonicalize first.
class NonCanonicalFactor : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// One irreducible building block. For Lorentz cones `n` is the dimension;
/// for the matrix families it is the matrix size.
struct Factor {
  Kind kind = Kind::Lorentz;
  Int n = 1;

  bool is_canonical() const noexcept;

  friend bool operator==(const Factor&, const Factor&) = default;
};

std::string to_string(const Factor& f);

Int factor_dim(const Factor& f);
Int factor_rank(const Factor& f);

/// Total order on factors: larger dimension first, then larger kind, then
/// larger parameter. `a` precedes `b` in a canonical cone iff
/// `factor_precedes(a, b)`.
bool factor_precedes(const Factor& a, const Factor& b) noexcept;

struct Signature {
  Int dim = 0;
  Int rank = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
  friend Signature operator+(const Signature& a, const Signature& b);
  Signature& operator+=(const Signature& other);
};

std::string to_string(const Signature& s);

/// A symmetric cone in canonical form: the sorted multiset of its irreducible
/// factors. Equality of two `Cone` values is Jordan isomorphism.
class Cone {
 public:
  Cone() = default;

  /// Rewrites low-dimensional aliases into their canonical images and sorts.
  static Cone canonicalize(std::span<const Factor> raw);
  static Cone canonicalize(std::initializer_list<Factor> raw) {
    return canonicalize(std::span<const Factor>(raw.begin(), raw.size()));
  }

  /// Wraps factors already known to be canonical; only sorts them.
  /// Throws NonCanonicalFactor if any factor is out of range.
  static Cone from_canonical(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  bool empty() const noexcept { return factors_.empty(); }
  std::size_t size() const noexcept { return factors_.size(); }

  Int dim() const;
  std::size_t count(const Factor& f) const noexcept;
  bool contains(const Factor& f) const noexcept { return count(f) > 0; }
  bool all_lorentz() const noexcept;

  /// The cone with one copy of `f` removed, if `f` is present.
  std::optional<Cone> without(const Factor& f) const;

  /// Direct sum.
  friend Cone operator+(const Cone& a, const Cone& b);
  Cone& operator+=(const Cone& other);

  friend bool operator==(const Cone&, const Cone&) = default;
  /// Lexicographic over the canonical factor sequences; a cone whose leading
  /// factor precedes the other's sorts first.
  friend std::strong_ordering operator<=>(const Cone& a, const Cone& b);

 private:
  explicit Cone(std::vector<Factor> sorted) : factors_(std::move(sorted)) {}
  std::vector<Factor> factors_;
};

Signature signature(const Cone& c);

enum class Relation { Isomorphic, Simulacra, Distinct };

std::string_view relation_name(Relation r);

Relation relation(const Cone& a, const Cone& b);

/// n copies of L^1.
Cone orthant(Int n);

/// Convenience constructors; each canonicalizes.
Cone lorentz(Int n);
Cone real_psd(Int n);
Cone complex_psd(Int n);
Cone quaternion_psd(Int n);
Cone octonion_psd();

/// Rank of L^x extended to x = 0 by f(0) = 0. Superadditive and convex.
constexpr Int lorentz_rank(Int x) noexcept {
  return x <= 0 ? 0 : (x * x - x + 2) / 2;
}

}  // namespace simulacra

#endif  // SIMULACRA_CONE_HPP
