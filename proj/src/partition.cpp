#include "chromagraph/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace chromagraph {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i - 1] < parts_[i])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return Partition(std::move(parts));
}

Partition Partition::merged_with(const Partition& other) const {
  std::vector<int> merged;
  merged.reserve(parts_.size() + other.parts_.size());
  std::merge(parts_.begin(), parts_.end(), other.parts_.begin(),
             other.parts_.end(), std::back_inserter(merged),
             std::greater<int>());
  return Partition(std::move(merged));
}

std::string Partition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  s += ']';
  return s;
}

Partition Partition::parse(const std::string& s) {
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw std::invalid_argument("bad partition literal: " + s);
  std::vector<int> parts;
  std::size_t i = 1;
  const std::size_t end = s.size() - 1;
  while (i < end) {
    std::size_t j = i;
    while (j < end && s[j] != ',') ++j;
    std::size_t pos = 0;
    int value = 0;
    const std::string tok = s.substr(i, j - i);
    try {
      value = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad partition literal: " + s);
    }
    if (pos != tok.size())
      throw std::invalid_argument("bad partition literal: " + s);
    parts.push_back(value);
    i = j + 1;
    if (j < end && i >= end)
      throw std::invalid_argument("bad partition literal: " + s);
  }
  return Partition(std::move(parts));
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (a.size_ != b.size_) return a.size_ <=> b.size_;
  return std::lexicographical_compare_three_way(
      b.parts_.begin(), b.parts_.end(), a.parts_.begin(), a.parts_.end());
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: n must be >= 0");
  std::vector<Partition> out;
  std::vector<int> prefix;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(Partition(prefix));
      return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
      prefix.push_back(k);
      rec(remaining - k, k);
      prefix.pop_back();
    }
  };
  rec(n, n > 0 ? n : 1);
  return out;
}

}  // namespace chromagraph
