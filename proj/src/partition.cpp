#include "ffz/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ffz {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
}

int Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> c(parts_.empty() ? 0 : parts_[0], 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++c[j];
  return Partition(std::move(c));
}

bool Partition::contains(const Partition& mu) const noexcept {
  if (mu.length() > length()) return false;
  for (int i = 1; i <= mu.length(); ++i)
    if (mu[i] > (*this)[i]) return false;
  return true;
}

std::vector<int> Partition::padded(int k) const {
  std::vector<int> v(std::max(k, length()), 0);
  std::copy(parts_.begin(), parts_.end(), v.begin());
  v.resize(k);
  return v;
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "()";
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

bool operator<(const Partition& a, const Partition& b) noexcept {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.parts_ > b.parts_;
}

namespace {

void gen(int remaining, int max_part, int max_len, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (max_len == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen(remaining - p, p, max_len - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int k) {
  std::vector<Partition> out;
  std::vector<int> cur;
  gen(k, k, k, cur, out);
  return out;
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  std::vector<int> cur;
  for (int k = 0; k <= rows * cols; ++k) gen(k, cols, rows, cur, out);
  return out;
}

std::vector<Partition> partitions_up_to(int k) {
  std::vector<Partition> out;
  for (int s = 0; s <= k; ++s) {
    auto v = partitions_of(s);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

}  // namespace ffz
