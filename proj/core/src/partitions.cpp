#include "simulacra/partitions.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace simulacra {

void PartitionConstraints::validate() const {
  if (total < 0) throw std::invalid_argument("partition total must be >= 0");
  if (min_part < 1) throw std::invalid_argument("min_part must be >= 1");
  if (max_part && *max_part < min_part) {
    throw std::invalid_argument("min_part exceeds max_part");
  }
}

PartitionStream::PartitionStream(PartitionConstraints c)
    : c_(c), hi_(std::numeric_limits<Int>::max()) {
  c_.validate();
  if (c_.max_part) hi_ = *c_.max_part;
  parts_.resize(static_cast<std::size_t>(c_.total / c_.min_part) + 1);
}

bool PartitionStream::allowed(Int part) const noexcept {
  return part >= c_.min_part && part <= hi_ && !(c_.skip_two && part == 2);
}

Int PartitionStream::smallest_allowed_at_least(Int part) const noexcept {
  Int q = std::max(part, c_.min_part);
  if (c_.skip_two && q == 2) q = 3;
  return q;
}

// Can `remainder` be written as a (possibly empty) sum of allowed parts,
// each at least `min_part`?
bool PartitionStream::representable(Int remainder, Int min_part) const noexcept {
  if (remainder == 0) return true;
  const Int q = smallest_allowed_at_least(min_part);
  if (q > hi_ || q > remainder) return false;
  if (q == 1) return true;
  // Parts range over the interval [q, hi_]; c parts reach [c*q, c*hi_].
  const Int fewest = (remainder + hi_ - 1) / hi_;
  return fewest * q <= remainder;
}

// Writes the lexicographically smallest ascending tail summing to
// `remainder` with every part >= `min_part`.
bool PartitionStream::fill(std::size_t from, Int remainder, Int min_part) {
  std::size_t pos = from;
  while (remainder > 0) {
    Int v = smallest_allowed_at_least(min_part);
    while (!representable(remainder - v, v)) {
      if (remainder - v < v) {
        v = remainder;
        if (!allowed(v)) return false;
        break;
      }
      v = smallest_allowed_at_least(v + 1);
      if (v > hi_ || v > remainder) return false;
    }
    parts_[pos++] = v;
    remainder -= v;
    min_part = v;
  }
  size_ = pos;
  return true;
}

bool PartitionStream::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    if (c_.total == 0) {
      size_ = 0;
      return true;
    }
    if (!representable(c_.total, c_.min_part) ||
        !fill(0, c_.total, c_.min_part)) {
      done_ = true;
      return false;
    }
    return true;
  }
  if (size_ >= 2) {
    Int suffix = parts_[size_ - 1];
    for (std::size_t i = size_ - 1; i-- > 0;) {
      suffix += parts_[i];
      Int v = smallest_allowed_at_least(parts_[i] + 1);
      while (v <= hi_ && v <= suffix) {
        if (representable(suffix - v, v)) {
          parts_[i] = v;
          fill(i + 1, suffix - v, v);
          return true;
        }
        v = (suffix - v < v) ? suffix : smallest_allowed_at_least(v + 1);
        if (v == suffix && !allowed(v)) break;
      }
    }
  }
  done_ = true;
  return false;
}

Int partition_count(const PartitionConstraints& c) {
  PartitionStream s(c);
  Int n = 0;
  while (s.next()) ++n;
  return n;
}

std::vector<std::vector<Int>> partitions(const PartitionConstraints& c) {
  std::vector<std::vector<Int>> out;
  PartitionStream s(c);
  while (s.next()) {
    const auto p = s.current();
    out.emplace_back(p.begin(), p.end());
  }
  return out;
}

}  // namespace simulacra
