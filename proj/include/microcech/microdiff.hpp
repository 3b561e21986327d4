#ifndef MICROCECH_MICRODIFF_HPP
#define MICROCECH_MICRODIFF_HPP

#include "microcech/symbol.hpp"

#include <utility>
#include <vector>

namespace mcech::md {

/* Operators are identified with their total symbols; the functions here
 * implement the noncommutative calculus on a chart where D1 is invertible.
 * Every operation reports the guaranteed window of its result. */

/* tot(PQ) = sum_alpha (1/alpha!) d_xi^alpha tot(P) d_x^alpha tot(Q),
 * truncated to window min(W_P, W_Q). */
GradedSymbol leibniz_product(const GradedSymbol& p, const GradedSymbol& q);

/* The degree-mu homogeneous component (may be zero). mu outside the stored
 * window is an error: truncated data cannot distinguish it from zero. */
GradedSymbol symbol_of_order(const GradedSymbol& p, const Rat& mu);

// top nonzero component with its degree; error on the zero operator
std::pair<Rat, GradedSymbol> principal_symbol(const GradedSymbol& p);

/* True iff the principal symbol is a single monomial c*xi1^s with c != 0:
 * the chart-global form of "principal symbol does not vanish". */
bool is_invertible(const GradedSymbol& p);

// two-sided inverse on the effective window; order flips sign
GradedSymbol formal_inverse(const GradedSymbol& p);

/* Formal adjoint, integer order and trivial sector only:
 * tot(P*)(x,xi) = sum_alpha (1/alpha!) d_xi^alpha d_x^alpha [tot(P)(x,-xi)].
 * Satisfies (PQ)* = Q* P* and P** = P on the window. */
GradedSymbol adjoint(const GradedSymbol& p);

// ad(P)(Q) = P Q P^{-1}; requires is_invertible(p)
GradedSymbol ad_conjugation(const GradedSymbol& p, const GradedSymbol& q);

// D1^lambda = xi1^lambda, the chart realization of the sector-shift bimodule
GradedSymbol sector_shift_generator(const Rat& lambda, int nvars, int window);

/* Basis of bimodule homs between the sector shifts lambda and mu: solves,
 * over a xi1-Laurent ansatz with integer exponents |s| <= window-1, the
 * linear system  [P,D1] = [P,x_i] = [P,D_i] = 0 (i >= 2)  and
 * [x1,P] = (mu-lambda) P D1^{-1}.  The basis is {D1^{lambda-mu}} when
 * lambda-mu is an integer inside the window, empty otherwise. */
std::vector<GradedSymbol> bimodule_hom_basis(const Rat& lambda, const Rat& mu,
                                             int nvars, int window);

}  // namespace mcech::md

#endif
