#pragma once
// Integral cohomology of the cochain complexes via Smith normal form, and
// homology read off through Poincare-Lefschetz duality.

#include <string>
#include <vector>

#include "grassmann/incidence.hpp"
#include "grassmann/qpoly.hpp"
#include "grassmann/zmatrix.hpp"

namespace gr {

struct SNFResult {
  std::vector<Int> factors;  // invariant factors d_1 | d_2 | ..., all > 0
  int rank = 0;              // count of nonzero factors
};

// Exact Smith normal form; pivot choice = smallest nonzero absolute value to
// limit coefficient growth. The input is taken by value and destroyed.
SNFResult smith_normal_form(ZMatrix m);

// Finitely generated abelian group: free rank plus invariant-factor torsion
// (each order divides the next; Z_2 + Z_2 is torsion [2,2]).
struct AbGroup {
  int rank = 0;
  std::vector<Int> torsion;
  bool operator==(const AbGroup& o) const {
    return rank == o.rank && torsion == o.torsion;
  }
  std::string str() const;  // "Z + Z_2 + Z_2", "0"
};

struct CohomologyTable {
  int k = 0;
  int n = 0;
  Coeffs coeffs = Coeffs::trivial;
  std::vector<AbGroup> groups;  // degrees 0 .. k(n-k)
};

// H^d = ker(delta_d) / im(delta_{d-1}): rank = dim ker - rank im, torsion =
// invariant factors of delta_{d-1} exceeding 1.
CohomologyTable cohomology(const CochainComplex& c);

CohomologyTable cohomology_of(int k, int n, Coeffs coeffs);

// H_j via duality: H_j = H^{k(n-k)-j} with trivial coefficients when n is
// even, with twisted coefficients when n is odd. The table is indexed by j.
CohomologyTable homology(int k, int n);

// sum rank(H^d) t^d.
Poly betti_polynomial(const CohomologyTable& t);

}  // namespace gr
