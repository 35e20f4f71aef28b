#pragma once
#include "triality/cayley.hpp"
#include "triality/group.hpp"

namespace triality {

// Chein double M(G,2) on G ∪ Gu with g·h = gh, g·(hu) = (hg)u,
// (gu)·h = (gh⁻¹)u, (gu)·(hu) = h⁻¹g. Always Moufang; nonassociative
// exactly when G is nonabelian. Elements 0..n-1 are G, n..2n-1 are Gu.
FiniteLoop chein_loop(const FiniteGroup& g);

// The sixteen unit elements ±1, ±e₁..±e₇ of a Cayley algebra whose basis
// products all have coefficient ±1 (parameters ±1); throws otherwise.
// Index i < 8 is +e_i, index 8+i is -e_i.
FiniteLoop octonion_unit_loop(const CayleyAlgebra& o);
FiniteLoop octonion_unit_loop();  // the (-1,-1,-1) algebra

// Lexicographically least normalized order-5 Latin square that fails a
// Moufang identity.
FiniteLoop non_moufang_5();

}  // namespace triality
