#include "triality/rational.hpp"

#include <stdexcept>

namespace triality {

std::string rat_str(const Rat& r) { return r.str(); }

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  for (char c : s)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
      throw std::invalid_argument("bad rational literal: " + s);
  Rat r;
  try {
    r = Rat(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
  // mpq_set_str does not canonicalize; do it explicitly so "4/6" == "2/3"
  mpq_canonicalize(r.backend().data());
  return r;
}

bool is_zero_vec(const QVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

QVec zero_vec(std::size_t n) { return QVec(n, Rat(0)); }

}  // namespace triality
