#pragma once
// KP sign vectors, the diagonal actions h(+/-), induced cell signs, Toda
// signs, and the Weyl-group propagation rule. The Toda propagation builds the
// same double-edge set as the h(+/-) eigenvalue comparison; the two are
// produced independently and cross-checked.

#include <vector>

#include "grassmann/schubert.hpp"

namespace gr {

enum class Coeffs { trivial, twisted };

// n-tuple of +/-1 attached to the exponentials E_1..E_n.
struct KPSigns {
  std::vector<int> eps;  // eps[j-1] in {+1,-1}
  bool odd_parity = false;  // true: h(-) pattern, false: h(+) pattern

  int at(int j) const { return eps[j - 1]; }  // 1-based
  int n() const { return static_cast<int>(eps.size()); }
};

// h(-) = diag(+,-,-,+,+,-,...): eps_j = (-1)^{floor(j/2)}.
// h(+) = diag(+,+,-,-,+,+,...): eps_j = (-1)^{floor((j-1)/2)}.
KPSigns h_minus(int n);
KPSigns h_plus(int n);

// The sign vector forced by the assignment rules for Gr(k,n): h(-) when k is
// odd, h(+) when k is even.
KPSigns kp_sign_vector(int k, int n);

// Sign vector used to build the graph of Gr(k,n) with the given coefficient
// system: trivial keeps the parity of k, twisted takes the opposite one.
KPSigns graph_sign_vector(int k, int n, Coeffs c);

// Product of eps over the entries of sigma: the h(+/-) eigenvalue on the
// wedge E_{sigma_1} ^ ... ^ E_{sigma_k}.
int cell_sign(const Symbol& s, const KPSigns& eps);

// Toda signs: (n-1)-tuple eps~_j = eps_j * eps_{j+1}.
std::vector<int> toda_from_kp(const KPSigns& eps);

// Type-A Weyl propagation across s_i (1-based): neighbours of position i are
// multiplied by eps~_i, position i itself is fixed.
std::vector<int> weyl_propagate(const std::vector<int>& toda, int i);

// Per-edge tags for g computed purely from Toda-sign propagation, aligned
// with g.edges: true = double edge. Starting vector is all minus (trivial) or
// all minus with +1 at position k (twisted); the edge w -> s_i w is double
// exactly when eps~_i = + at w. The propagated vector at a vertex must be
// path independent; a conflict throws std::logic_error.
std::vector<char> toda_double_edges(const BruhatGraph& g, Coeffs c);

}  // namespace gr
