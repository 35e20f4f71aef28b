#pragma once
#include <cstdint>
#include <vector>

namespace triality {

// Permutation of {0..n-1}. Products compose left to right: x^(a*b) = (x^a)^b.
// This is the right-action convention; all loop and autotopy operator
// identities are stated with it.
class Perm {
 public:
  Perm() = default;
  static Perm identity(int n);
  explicit Perm(std::vector<int> images);

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x]; }
  const std::vector<int>& images() const { return img_; }

  Perm operator*(const Perm& o) const;  // apply *this, then o
  Perm inverse() const;
  bool is_identity() const;
  int order() const;

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return img_ != o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

  std::uint64_t hash() const;

 private:
  std::vector<int> img_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const { return static_cast<std::size_t>(p.hash()); }
};

}  // namespace triality
