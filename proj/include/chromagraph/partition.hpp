#pragma once

#include <compare>
#include <string>
#include <vector>

namespace chromagraph {

/// Integer partition: weakly decreasing positive parts. The empty partition
/// (of 0) is allowed and acts as the multiplicative identity for merging.
class Partition {
 public:
  Partition() = default;
  /// Parts must already be weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);
  /// Sorts into weakly decreasing order first; parts must be positive.
  static Partition from_unsorted(std::vector<int> parts);

  int size() const { return size_; }  // sum of parts
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  const std::vector<int>& parts() const { return parts_; }

  /// Multiset union of parts; realizes products of multiplicative generators.
  Partition merged_with(const Partition& other) const;

  std::string to_string() const;  // "[3,1]", "[]" for the empty partition
  static Partition parse(const std::string& s);

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }
  /// Canonical order: grade by size, then largest-part-first within a grade,
  /// so partitions of 4 run (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// All partitions of n, in the canonical order above. n must be >= 0.
std::vector<Partition> partitions_of(int n);

}  // namespace chromagraph
