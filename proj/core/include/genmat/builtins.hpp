#pragma once

#include <string>

#include "genmat/trace_poly.hpp"

namespace genmat {

// std(k): alternating sum over all orderings of x_1..x_k; std(2n) is an
// identity of n x n matrices.
TracePolynomial standard_identity(int k);

// (x1x2 - x2x1)^2, the classical degree-4 central polynomial for 2x2 matrices.
TracePolynomial commutator_square();

// Friedland's invariant for pairs of 2x2 matrices as a word-free trace
// polynomial: (2tr(X1^2)-tr(X1)^2)(2tr(X2^2)-tr(X2)^2) - (2tr(X1X2)-tr(X1)tr(X2))^2.
// Nonzero at a pair exactly when the pair generates the full matrix algebra.
TracePolynomial friedland_invariant();

// Formanek's central polynomial for n x n matrices in generators
// x = X1, y_i = X{1+i}. Built from the auxiliary commutative polynomial
//   F(t_1..t_{n+1}) = prod_{i=2..n} (t_1-t_i)(t_{n+1}-t_i)
//                   * prod_{2<=i<j<=n} (t_i-t_j)^2
// by sending t_1^{a_1}..t_{n+1}^{a_{n+1}} to x^{a_1} y_1 x^{a_2} .. y_n x^{a_{n+1}}
// and summing over the n cyclic shifts of (y_1..y_n). The interior
// discriminant square is required for n >= 3; without it the result fails
// centrality (machine-checked in the test suite).
TracePolynomial formanek(int n);

// Dispatch by name: "std(k)", "comm_sq", "friedland_c", "formanek(n)".
TracePolynomial builtin(const std::string& name);

}  // namespace genmat
