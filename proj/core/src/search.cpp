#include "simulacra/search.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "simulacra/partitions.hpp"

namespace simulacra {

bool SearchPolicy::allows(const Factor& f) const {
  if (f.kind == Kind::Lorentz) return !max_lorentz_part || f.n <= *max_lorentz_part;
  return allow_nonlorentz && std::find(allowed_kinds.begin(), allowed_kinds.end(),
                                       f.kind) != allowed_kinds.end();
}

void SearchPolicy::validate() const {
  if (max_lorentz_part && *max_lorentz_part < 1) {
    throw std::invalid_argument("max_lorentz_part must be >= 1");
  }
  if (max_results && *max_results < 1) {
    throw std::invalid_argument("max_results must be >= 1");
  }
}

std::vector<Factor> nonlorentz_factors_up_to(Int d) {
  std::vector<Factor> out;
  for (Kind kind : {Kind::RealPSD, Kind::ComplexPSD, Kind::QuaternionPSD}) {
    for (Int n = 3; n <= kMaxParameter && factor_dim({kind, n}) <= d; ++n) {
      out.push_back({kind, n});
    }
  }
  if (d >= 27) out.push_back({Kind::OctonionPSD, 3});
  std::sort(out.begin(), out.end(), factor_precedes);
  return out;
}

namespace {

std::vector<Factor> admitted_nonlorentz(Int d, const SearchPolicy& policy) {
  std::vector<Factor> out;
  if (!policy.allow_nonlorentz) return out;
  for (const Factor& f : nonlorentz_factors_up_to(d)) {
    if (policy.allows(f)) out.push_back(f);
  }
  return out;
}

// Multisets of non-Lorentz factors (indices non-decreasing into `pool`) with
// total dimension <= budget; the rest of the dimension goes to Lorentz parts.
class ConeEnumerator {
 public:
  ConeEnumerator(Int d, const SearchPolicy& policy,
                 const std::function<bool(const Cone&)>& visit)
      : d_(d), policy_(policy), visit_(visit), pool_(admitted_nonlorentz(d, policy)) {}

  void run() { extend(0, d_); }

 private:
  bool extend(std::size_t start, Int budget) {
    if (!fill_lorentz(budget)) return false;
    for (std::size_t i = start; i < pool_.size(); ++i) {
      const Int fd = factor_dim(pool_[i]);
      if (fd > budget) continue;
      chosen_.push_back(pool_[i]);
      const bool more = extend(i, budget - fd);
      chosen_.pop_back();
      if (!more) return false;
    }
    return true;
  }

  bool fill_lorentz(Int remaining) {
    PartitionConstraints pc;
    pc.total = remaining;
    pc.skip_two = true;
    pc.max_part = policy_.max_lorentz_part;
    PartitionStream parts(pc);
    while (parts.next()) {
      std::vector<Factor> factors = chosen_;
      for (Int p : parts.current()) factors.push_back({Kind::Lorentz, p});
      if (!visit_(Cone::from_canonical(std::move(factors)))) return false;
    }
    return true;
  }

  Int d_;
  const SearchPolicy& policy_;
  const std::function<bool(const Cone&)>& visit_;
  std::vector<Factor> pool_;
  std::vector<Factor> chosen_;
};

// Largest rank of any cone of dimension d whose factors all have dimension
// <= largest. Lorentz factors maximize rank in each dimension and the Lorentz
// rank is convex, so greedily packing the largest size is optimal.
Int rank_ceiling(Int d, Int largest) {
  if (largest <= 0) return d == 0 ? 0 : -1;
  const Int full = d / largest;
  return full * lorentz_rank(largest) + lorentz_rank(d % largest);
}

class SignatureSearch {
 public:
  SignatureSearch(const Signature& target, const SearchPolicy& policy)
      : target_(target) {
    std::vector<Factor> pool = admitted_nonlorentz(target.dim, policy);
    Int top = target.dim;
    if (policy.max_lorentz_part) top = std::min(top, *policy.max_lorentz_part);
    for (Int m = top; m >= 1; --m) {
      if (m != 2) pool.push_back({Kind::Lorentz, m});
    }
    std::sort(pool.begin(), pool.end(), factor_precedes);
    for (const Factor& f : pool) {
      candidates_.push_back({f, factor_dim(f), factor_rank(f)});
    }
  }

  std::size_t top_level_choices() const { return candidates_.size(); }

  /// Explores the subtree whose first factor is candidates_[first], or the
  /// whole tree when first is empty.
  void run(std::optional<std::size_t> first, const Cone* exclude,
           std::optional<std::size_t> limit, std::vector<Cone>& out) const {
    Frame frame{exclude, limit, out, {}};
    if (target_.dim == 0) {
      if (target_.rank == 0) emit(frame);
      return;
    }
    if (first) {
      const Candidate& c = candidates_[*first];
      if (c.dim > target_.dim) return;
      if (!admissible(target_.dim, target_.rank, c.dim)) return;
      frame.stack.push_back(c.factor);
      descend(frame, *first, target_.dim - c.dim, target_.rank - c.rank);
      return;
    }
    descend(frame, 0, target_.dim, target_.rank);
  }

 private:
  struct Candidate {
    Factor factor;
    Int dim;
    Int rank;
  };

  struct Frame {
    const Cone* exclude;
    std::optional<std::size_t> limit;
    std::vector<Cone>& out;
    std::vector<Factor> stack;
  };

  static bool admissible(Int dim_left, Int rank_left, Int largest) {
    return rank_left >= dim_left && rank_left <= rank_ceiling(dim_left, largest);
  }

  static bool full(const Frame& f) { return f.limit && f.out.size() >= *f.limit; }

  // Returns false once the result limit is reached.
  bool emit(Frame& f) const {
    Cone c = Cone::from_canonical(f.stack);
    if (f.exclude == nullptr || c != *f.exclude) f.out.push_back(std::move(c));
    return !full(f);
  }

  bool descend(Frame& f, std::size_t start, Int dim_left, Int rank_left) const {
    if (dim_left == 0) return rank_left == 0 ? emit(f) : true;
    if (rank_left < dim_left) return true;
    // Candidates are sorted by non-increasing dimension.
    auto it = std::lower_bound(
        candidates_.begin() + static_cast<std::ptrdiff_t>(start), candidates_.end(),
        dim_left, [](const Candidate& c, Int d) { return c.dim > d; });
    for (; it != candidates_.end(); ++it) {
      // Ceilings only shrink further down the list.
      if (rank_left > rank_ceiling(dim_left, it->dim)) break;
      f.stack.push_back(it->factor);
      const bool more =
          descend(f, static_cast<std::size_t>(it - candidates_.begin()),
                  dim_left - it->dim, rank_left - it->rank);
      f.stack.pop_back();
      if (!more) return false;
    }
    return true;
  }

  Signature target_;
  std::vector<Candidate> candidates_;
};

std::vector<Cone> run_search(const Signature& target, const SearchPolicy& policy,
                             const Cone* exclude) {
  policy.validate();
  const SignatureSearch search(target, policy);
  unsigned threads = policy.threads == 0 ? std::thread::hardware_concurrency()
                                         : policy.threads;
  const std::size_t roots = search.top_level_choices();
  if (threads <= 1 || roots < 2 || target.dim == 0) {
    std::vector<Cone> out;
    search.run(std::nullopt, exclude, policy.max_results, out);
    return out;
  }
  // One subtree per top-level factor; concatenating subtrees in candidate
  // order reproduces the sequential order exactly.
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, roots));
  std::vector<std::vector<Cone>> per_root(roots);
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < roots; i = next++) {
          search.run(i, exclude, policy.max_results, per_root[i]);
        }
      });
    }
  }
  std::vector<Cone> out;
  for (auto& chunk : per_root) {
    for (auto& c : chunk) {
      if (policy.max_results && out.size() >= *policy.max_results) return out;
      out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace

void for_each_cone(Int d, const SearchPolicy& policy,
                   const std::function<bool(const Cone&)>& visit) {
  if (d < 0) throw std::invalid_argument("dimension must be >= 0");
  policy.validate();
  ConeEnumerator(d, policy, visit).run();
}

std::vector<Cone> enumerate_cones(Int d, const SearchPolicy& policy) {
  std::vector<Cone> out;
  for_each_cone(d, policy, [&out](const Cone& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

std::vector<Cone> cones_with_signature(const Signature& target,
                                       const SearchPolicy& policy) {
  if (target.dim < 0 || target.rank < 0) return {};
  return run_search(target, policy, nullptr);
}

std::vector<Cone> find_simulacra(const Cone& target, const SearchPolicy& policy) {
  if (target.empty()) return {};
  return run_search(signature(target), policy, &target);
}

std::optional<Cone> has_simulacra(const Cone& target, const SearchPolicy& policy) {
  SearchPolicy first = policy;
  first.max_results = 1;
  auto found = find_simulacra(target, first);
  if (found.empty()) return std::nullopt;
  return std::move(found.front());
}

ConditionReport check_conditions(const Cone& k, Int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const Signature s = signature(k);
  ConditionReport r;
  r.c1 = n >= 2 + s.rank - s.dim;
  r.c2 = n >= 2 + lorentz_rank(1 + s.dim) - s.rank;
  r.c3 = n >= 15;
  r.n_gt_2dimK = n > 2 * s.dim;
  return r;
}

std::optional<Cone> remove_subcone(const Cone& a, const Cone& b) {
  std::optional<Cone> rest = a;
  for (const Factor& f : b.factors()) {
    rest = rest->without(f);
    if (!rest) return std::nullopt;
  }
  return rest;
}

bool verify_subproblem_reduction(const Cone& k, Int n, const SearchPolicy& policy) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const Cone ln = lorentz(n);
  for (const Cone& j : find_simulacra(k + ln, policy)) {
    const auto rest = remove_subcone(j, ln);
    if (!rest || relation(*rest, k) != Relation::Simulacra) return false;
  }
  return true;
}

}  // namespace simulacra
