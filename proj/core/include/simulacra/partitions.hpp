#ifndef SIMULACRA_PARTITIONS_HPP
#define SIMULACRA_PARTITIONS_HPP

#include <optional>
#include <span>
#include <vector>

#include "simulacra/cone.hpp"

namespace simulacra {

struct PartitionConstraints {
  Int total = 0;
  Int min_part = 1;
  std::optional<Int> max_part;  // unbounded when empty
  /// Omit partitions containing a part equal to 2. Sound for cone
  /// enumeration because L^2 and L^1 + L^1 are the same cone.
  bool skip_two = false;

  /// Throws std::invalid_argument on negative totals or min > max.
  void validate() const;
};

/// Streams the partitions of `total` as ascending compositions, in
/// lexicographic order, reusing one buffer. The span returned by current()
/// is invalidated by the next call to next(); copy it to keep it.
///
///   PartitionStream s(c);
///   while (s.next()) use(s.current());
class PartitionStream {
 public:
  explicit PartitionStream(PartitionConstraints c);

  /// Advances to the next partition; false once exhausted.
  bool next();

  std::span<const Int> current() const noexcept {
    return {parts_.data(), size_};
  }

  const PartitionConstraints& constraints() const noexcept { return c_; }

 private:
  bool allowed(Int part) const noexcept;
  Int smallest_allowed_at_least(Int part) const noexcept;
  bool representable(Int remainder, Int min_part) const noexcept;
  bool fill(std::size_t from, Int remainder, Int min_part);

  PartitionConstraints c_;
  Int hi_;
  std::vector<Int> parts_;
  std::size_t size_ = 0;
  bool started_ = false;
  bool done_ = false;
};

/// Number of partitions the stream emits for `c`, by enumeration.
Int partition_count(const PartitionConstraints& c);

/// Materializes the whole stream.
std::vector<std::vector<Int>> partitions(const PartitionConstraints& c);

}  // namespace simulacra

#endif  // SIMULACRA_PARTITIONS_HPP
