#pragma once
#include <array>
#include "json.hpp"
#include <optional>
#include <string>

#include "triality/error.hpp"
#include "triality/parallel.hpp"
#include "triality/perm.hpp"

namespace triality {

// Finite loop as a validated Cayley table. Indices are 0-based internally and
// 1-based in the text format; the unit is always index 0.
class FiniteLoop {
 public:
  // validates Latin-square + unit-first; throws CheckError
  static FiniteLoop from_table(int n, std::vector<int> table0);

  int order() const { return n_; }
  int mul(int a, int b) const { return tab_[static_cast<std::size_t>(a) * n_ + b]; }
  int unit() const { return 0; }

  bool has_two_sided_inverses() const;
  int inv(int x) const;  // throws CheckError if x lacks a two-sided inverse
  int power(int x, int k) const;  // left-normed; negative k via inv(x)

  Perm L(int a) const;  // y -> a*y
  Perm R(int a) const;  // y -> y*a
  Perm P(int x) const { return R(x).inverse() * L(x).inverse(); }
  Perm U(int x) const { return L(x) * R(x); }
  Perm J() const;  // x -> x^{-1}

  std::optional<std::array<int, 3>> associativity_witness(par::Exec exec = par::Exec::OpenMP) const;

  // subloop generated by a subset; returns sorted element list
  std::vector<int> closure(std::vector<int> gens) const;
  // smallest generating set found by subset search (size <= 3 at corpus scale)
  std::vector<int> find_generators(int max_size = 4) const;

  bool operator==(const FiniteLoop& o) const { return n_ == o.n_ && tab_ == o.tab_; }

 private:
  int n_ = 0;
  std::vector<int> tab_;
  std::vector<int> inv_;  // -1 when no two-sided inverse
};

struct IdentityCheck {
  std::string name;
  bool pass = false;
  nlohmann::json witness;  // null when passing
};

struct LoopReport {
  std::string check;
  std::vector<IdentityCheck> identities;
  nlohmann::json counts;
  bool pass() const {
    for (const auto& e : identities)
      if (!e.pass) return false;
    return true;
  }
  nlohmann::json to_json() const;
};

// the three Moufang identities, each scanned over all (a,x,y)
LoopReport check_moufang(const FiniteLoop& q, par::Exec exec = par::Exec::OpenMP);

// Glauberman's relations for the multiplication operators P_x, L_x, R_x of a
// Moufang loop, as permutation identities under right-action composition
LoopReport verify_doro_relations(const FiniteLoop& q, par::Exec exec = par::Exec::OpenMP);

struct MultGroup {
  std::vector<Perm> elements;        // sorted canonically
  std::vector<int> generator_index;  // positions of L_0..L_{n-1}, R_0..R_{n-1}
};
MultGroup multiplication_group(const FiniteLoop& q, std::size_t cap = 4'000'000);

// loop isomorphism search (images of a generating set + closure extension)
std::optional<Perm> find_loop_isomorphism(const FiniteLoop& a, const FiniteLoop& b);

// text format: "n" then n rows of n 1-based entries
FiniteLoop parse_loop_text(const std::string& text);
std::string loop_to_text(const FiniteLoop& q);

}  // namespace triality
