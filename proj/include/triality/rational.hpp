#pragma once
#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <vector>

namespace triality {

// exact rationals over GMP; always reduced, denominator > 0
using Rat = boost::multiprecision::mpq_rational;
using QVec = std::vector<Rat>;

// text form "p/q", "/q" omitted when q == 1
std::string rat_str(const Rat& r);
Rat parse_rat(const std::string& s);

bool is_zero_vec(const QVec& v);
QVec zero_vec(std::size_t n);

}  // namespace triality
