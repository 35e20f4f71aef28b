#pragma once
#include <array>
#include <optional>
#include <vector>

#include "json.hpp"
#include "triality/error.hpp"
#include "triality/parallel.hpp"
#include "triality/qmatrix.hpp"
#include "triality/subspace.hpp"

namespace triality {

// Finite-dimensional algebra over the rationals given by structure constants;
// used both for general products (Cayley algebras) and for brackets.
struct AlgebraSC {
  int dim = 0;
  std::vector<QVec> c;  // c[i*dim+j] = coefficient vector of eᵢ∘eⱼ

  static AlgebraSC zero(int d);
  const QVec& mul_basis(int i, int j) const { return c[static_cast<std::size_t>(i) * dim + j]; }
  void set(int i, int j, int k, Rat v) { c[static_cast<std::size_t>(i) * dim + j][static_cast<std::size_t>(k)] = std::move(v); }
  void set_anti(int i, int j, int k, const Rat& v) {
    set(i, j, k, v);
    set(j, i, k, -v);
  }

  QVec mul(const QVec& x, const QVec& y) const;
  QVec assoc(const QVec& x, const QVec& y, const QVec& z) const;  // (xy)z - x(yz)
  QVec jac(const QVec& x, const QVec& y, const QVec& z) const;    // [[x,y],z]+[[y,z],x]+[[z,x],y]
  QMatrix lmat(const QVec& x) const;  // y ↦ x∘y
  QMatrix rmat(const QVec& x) const;  // y ↦ y∘x
  QVec basis_vec(int i) const;

  bool is_anticommutative() const;
  std::optional<std::array<int, 3>> jacobi_witness() const;

  // {"dim": d, "bracket": [[i, j, [[k, "p/q"], ...]], ...]}, 1-based; a pair
  // absent from the list is completed to −(transpose) when the transpose is
  // present, and to zero otherwise
  static AlgebraSC from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

AlgebraSC direct_sum(const AlgebraSC& a, const AlgebraSC& b);
AlgebraSC sl2();

// m(eᵢ∘eⱼ) = m(eᵢ)∘m(eⱼ) on all basis pairs
bool is_bracket_automorphism(const AlgebraSC& sc, const QMatrix& m);

// least basis 4-tuple (x,y,z,w), x ≤ w, violating the linearized identity
// Jac(x,y,[w,z]) + Jac(w,y,[x,z]) = [Jac(x,y,z),w] + [Jac(w,y,z),x]
std::optional<std::array<int, 4>> malcev_witness(const AlgebraSC& sc, par::Exec exec = par::Exec::OpenMP);
bool check_malcev(const AlgebraSC& sc, par::Exec exec = par::Exec::OpenMP);

// {a : (a,x,y) = −(x,a,y) = (x,y,a) for all x,y}, the generalized alternative
// nucleus, as the kernel of the stacked linear conditions
Subspace nalt(const AlgebraSC& sc);

}  // namespace triality
