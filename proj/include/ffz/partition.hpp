#pragma once

#include <initializer_list>
#include <string>
#include <vector>

namespace ffz {

/// Integer partition stored as weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept;                                   // |lambda|
  int length() const noexcept { return static_cast<int>(parts_.size()); }  // l(lambda)
  bool empty() const noexcept { return parts_.empty(); }
  /// lambda_i with 1-based i; zero past the length.
  int operator[](int i) const noexcept { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }

  Partition conjugate() const;
  bool contains(const Partition& mu) const noexcept;  // mu inside lambda
  /// Parts padded with zeros to length k.
  std::vector<int> padded(int k) const;

  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) noexcept { return a.parts_ == b.parts_; }
  friend bool operator<(const Partition& a, const Partition& b) noexcept;

 private:
  std::vector<int> parts_;
};

/// All partitions of k, in reverse lexicographic order.
std::vector<Partition> partitions_of(int k);
/// All partitions with at most `rows` parts, each at most `cols`.
std::vector<Partition> partitions_in_box(int rows, int cols);
/// All partitions of size at most k.
std::vector<Partition> partitions_up_to(int k);

}  // namespace ffz
