#include "triality/perm.hpp"

#include <stdexcept>

namespace triality {

Perm Perm::identity(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  Perm p;
  p.img_ = std::move(v);
  return p;
}

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int x : img_) {
    if (x < 0 || x >= static_cast<int>(img_.size()) || seen[x]) throw std::invalid_argument("not a permutation");
    seen[x] = 1;
  }
}

Perm Perm::operator*(const Perm& o) const {
  if (size() != o.size()) throw std::invalid_argument("permutation size mismatch");
  Perm r;
  r.img_.resize(img_.size());
  for (int x = 0; x < size(); ++x) r.img_[x] = o.img_[img_[x]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(img_.size());
  for (int x = 0; x < size(); ++x) r.img_[img_[x]] = x;
  return r;
}

bool Perm::is_identity() const {
  for (int x = 0; x < size(); ++x)
    if (img_[x] != x) return false;
  return true;
}

int Perm::order() const {
  Perm p = *this;
  int k = 1;
  while (!p.is_identity()) {
    p = p * *this;
    ++k;
  }
  return k;
}

std::uint64_t Perm::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (int x : img_) {
    h ^= static_cast<std::uint64_t>(x) + 1;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace triality
