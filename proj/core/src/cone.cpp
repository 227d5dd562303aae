#include "simulacra/cone.hpp"

#include <algorithm>
#include <tuple>

namespace simulacra {

namespace {

Int checked_add(Int a, Int b) {
  Int out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("signature overflow");
  }
  return out;
}

void require_parameter(const Factor& f) {
  if (f.n < 0 || f.n > kMaxParameter) {
    throw std::out_of_range("factor parameter out of range: " + to_string(f));
  }
}

auto order_key(const Factor& f) {
  return std::make_tuple(factor_dim(f), static_cast<int>(f.kind), f.n);
}

}  // namespace

std::string_view kind_name(Kind kind) {
  switch (kind) {
    case Kind::Lorentz: return "Lorentz";
    case Kind::RealPSD: return "RealPSD";
    case Kind::ComplexPSD: return "ComplexPSD";
    case Kind::QuaternionPSD: return "QuaternionPSD";
    case Kind::OctonionPSD: return "OctonionPSD";
  }
  return "?";
}

bool Factor::is_canonical() const noexcept {
  if (n > kMaxParameter) return false;
  switch (kind) {
    case Kind::Lorentz: return n == 1 || n >= 3;
    case Kind::RealPSD:
    case Kind::ComplexPSD:
    case Kind::QuaternionPSD: return n >= 3;
    case Kind::OctonionPSD: return n == 3;
  }
  return false;
}

std::string to_string(const Factor& f) {
  return std::string(kind_name(f.kind)) + " " + std::to_string(f.n);
}

Int factor_dim(const Factor& f) {
  require_parameter(f);
  const Int n = f.n;
  switch (f.kind) {
    case Kind::Lorentz: return n;
    case Kind::RealPSD: return n * (n + 1) / 2;
    case Kind::ComplexPSD: return n * n;
    case Kind::QuaternionPSD: return 2 * n * n - n;
    case Kind::OctonionPSD:
      // Only n <= 3 exist; n = 2 is the 10-dimensional spin factor.
      if (n == 3) return 27;
      return n == 0 ? 0 : (n == 1 ? 1 : 10);
  }
  return 0;
}

Int factor_rank(const Factor& f) {
  if (!f.is_canonical()) {
    throw NonCanonicalFactor("rank requested for non-canonical factor " +
                             to_string(f) + "; canonicalize first");
  }
  const Int n = f.n;
  switch (f.kind) {
    case Kind::Lorentz: return lorentz_rank(n);
    case Kind::RealPSD: return n * n;
    case Kind::ComplexPSD: return 2 * n * n - 1;
    case Kind::QuaternionPSD: return 4 * n * n;
    case Kind::OctonionPSD: return 79;
  }
  return 0;
}

bool factor_precedes(const Factor& a, const Factor& b) noexcept {
  return order_key(a) > order_key(b);
}

Signature operator+(const Signature& a, const Signature& b) {
  return {checked_add(a.dim, b.dim), checked_add(a.rank, b.rank)};
}

Signature& Signature::operator+=(const Signature& other) {
  *this = *this + other;
  return *this;
}

std::string to_string(const Signature& s) {
  return "(" + std::to_string(s.dim) + ", " + std::to_string(s.rank) + ")";
}

Cone Cone::canonicalize(std::span<const Factor> raw) {
  std::vector<Factor> out;
  out.reserve(raw.size());
  auto push_lorentz = [&out](Int n, Int copies = 1) {
    for (Int i = 0; i < copies; ++i) out.push_back({Kind::Lorentz, n});
  };
  for (const Factor& f : raw) {
    require_parameter(f);
    if (f.kind == Kind::Lorentz) {
      if (f.n == 2) {
        push_lorentz(1, 2);
      } else if (f.n != 0) {
        out.push_back(f);
      }
      continue;
    }
    if (f.kind == Kind::OctonionPSD && f.n > 3) {
      throw CanonicalizationError("no Euclidean Jordan algebra of " +
                                  std::to_string(f.n) + "x" +
                                  std::to_string(f.n) + " octonion matrices");
    }
    switch (f.n) {
      case 0: break;
      case 1: push_lorentz(1); break;
      case 2: push_lorentz(factor_dim(f)); break;
      default: out.push_back(f); break;
    }
  }
  std::sort(out.begin(), out.end(), factor_precedes);
  return Cone(std::move(out));
}

Cone Cone::from_canonical(std::vector<Factor> factors) {
  for (const Factor& f : factors) {
    if (!f.is_canonical()) {
      throw NonCanonicalFactor("not a canonical factor: " + to_string(f));
    }
  }
  std::sort(factors.begin(), factors.end(), factor_precedes);
  return Cone(std::move(factors));
}

Int Cone::dim() const {
  Int d = 0;
  for (const Factor& f : factors_) d = checked_add(d, factor_dim(f));
  return d;
}

std::size_t Cone::count(const Factor& f) const noexcept {
  return static_cast<std::size_t>(std::count(factors_.begin(), factors_.end(), f));
}

bool Cone::all_lorentz() const noexcept {
  return std::all_of(factors_.begin(), factors_.end(),
                     [](const Factor& f) { return f.kind == Kind::Lorentz; });
}

std::optional<Cone> Cone::without(const Factor& f) const {
  auto it = std::find(factors_.begin(), factors_.end(), f);
  if (it == factors_.end()) return std::nullopt;
  std::vector<Factor> rest(factors_.begin(), it);
  rest.insert(rest.end(), std::next(it), factors_.end());
  return Cone(std::move(rest));
}

Cone operator+(const Cone& a, const Cone& b) {
  std::vector<Factor> merged;
  merged.reserve(a.size() + b.size());
  std::merge(a.factors_.begin(), a.factors_.end(), b.factors_.begin(),
             b.factors_.end(), std::back_inserter(merged), factor_precedes);
  return Cone(std::move(merged));
}

Cone& Cone::operator+=(const Cone& other) {
  *this = *this + other;
  return *this;
}

std::strong_ordering operator<=>(const Cone& a, const Cone& b) {
  const auto& x = a.factors_;
  const auto& y = b.factors_;
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (x[i] == y[i]) continue;
    return factor_precedes(x[i], y[i]) ? std::strong_ordering::less
                                       : std::strong_ordering::greater;
  }
  return x.size() <=> y.size();
}

Signature signature(const Cone& c) {
  Signature s;
  for (const Factor& f : c.factors()) s += {factor_dim(f), factor_rank(f)};
  return s;
}

std::string_view relation_name(Relation r) {
  switch (r) {
    case Relation::Isomorphic: return "Isomorphic";
    case Relation::Simulacra: return "Simulacra";
    case Relation::Distinct: return "Distinct";
  }
  return "?";
}

Relation relation(const Cone& a, const Cone& b) {
  if (a == b) return Relation::Isomorphic;
  return signature(a) == signature(b) ? Relation::Simulacra : Relation::Distinct;
}

Cone orthant(Int n) {
  if (n < 0 || n > kMaxParameter) {
    throw std::out_of_range("orthant dimension out of range");
  }
  return Cone::from_canonical(
      std::vector<Factor>(static_cast<std::size_t>(n), Factor{Kind::Lorentz, 1}));
}

Cone lorentz(Int n) { return Cone::canonicalize({Factor{Kind::Lorentz, n}}); }
Cone real_psd(Int n) { return Cone::canonicalize({Factor{Kind::RealPSD, n}}); }
Cone complex_psd(Int n) { return Cone::canonicalize({Factor{Kind::ComplexPSD, n}}); }
Cone quaternion_psd(Int n) {
  return Cone::canonicalize({Factor{Kind::QuaternionPSD, n}});
}
Cone octonion_psd() { return Cone::canonicalize({Factor{Kind::OctonionPSD, 3}}); }

}  // namespace simulacra
