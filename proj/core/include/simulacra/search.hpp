#ifndef SIMULACRA_SEARCH_HPP
#define SIMULACRA_SEARCH_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "simulacra/cone.hpp"

namespace simulacra {

/// Restricts which cones the enumerations and searches consider.
struct SearchPolicy {
  bool allow_nonlorentz = true;
  /// Non-Lorentz kinds admitted when allow_nonlorentz is set.
  std::vector<Kind> allowed_kinds = {Kind::RealPSD, Kind::ComplexPSD,
                                     Kind::QuaternionPSD, Kind::OctonionPSD};
  std::optional<Int> max_lorentz_part;
  std::optional<std::size_t> max_results;
  /// Worker threads for find_simulacra; 0 picks hardware concurrency.
  /// Never changes the result.
  unsigned threads = 1;

  static SearchPolicy full() { return {}; }
  static SearchPolicy lorentz_only() {
    SearchPolicy p;
    p.allow_nonlorentz = false;
    return p;
  }

  bool allows(const Factor& f) const;
  void validate() const;
};

/// Every canonical non-Lorentz factor of dimension at most `d`, in canonical
/// factor order.
std::vector<Factor> nonlorentz_factors_up_to(Int d);

/// Calls `visit` once for every canonical cone of dimension exactly `d`
/// admitted by `policy` (max_results is ignored). Stops early when `visit`
/// returns false. Lorentz parts come from the skip-two partition stream.
void for_each_cone(Int d, const SearchPolicy& policy,
                   const std::function<bool(const Cone&)>& visit);

std::vector<Cone> enumerate_cones(Int d, const SearchPolicy& policy);

/// Every admitted cone with signature `target`, in canonical cone order, up
/// to policy.max_results. Branch-and-bound over factor choices: a branch
/// with `d` dimensions left and `r` rank left survives only while
/// d <= r <= (largest rank reachable in d dimensions with the remaining
/// factor sizes).
std::vector<Cone> cones_with_signature(const Signature& target,
                                       const SearchPolicy& policy);

/// Cones sharing the target's signature that are not isomorphic to it.
std::vector<Cone> find_simulacra(const Cone& target, const SearchPolicy& policy);

/// Early-exit variant of find_simulacra: the first witness in canonical
/// order, if any.
std::optional<Cone> has_simulacra(const Cone& target, const SearchPolicy& policy);

/// The hypotheses on n used when reducing simulacra of K + L^n to
/// simulacra of K.
struct ConditionReport {
  bool c1 = false;  // n >= 2 + rank(K) - dim(K)
  bool c2 = false;  // n >= 2 + rank(L^(1 + dim K)) - rank(K)
  bool c3 = false;  // n >= 15
  bool n_gt_2dimK = false;

  bool all() const noexcept { return c1 && c2 && c3; }
};

ConditionReport check_conditions(const Cone& k, Int n);

/// True iff every simulacrum J of K + L^n found under `policy` splits as
/// J' + L^n with J' a simulacrum of K.
bool verify_subproblem_reduction(const Cone& k, Int n, const SearchPolicy& policy);

/// Multiset difference `a - b`, if `b` is a sub-multiset of `a`.
std::optional<Cone> remove_subcone(const Cone& a, const Cone& b);

}  // namespace simulacra

#endif  // SIMULACRA_SEARCH_HPP
