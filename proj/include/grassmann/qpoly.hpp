#pragma once
// Exact integer polynomial algebra in one variable: Gaussian binomials,
// the closed-form Poincare / blow-up polynomials of real Grassmannians,
// their Pascal-style recursions, and Euler characteristics.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace gr {

using Int = mpz_class;

struct IncidenceGraph;  // incidence.hpp

// Dense polynomial, coefficient index = exponent. The zero polynomial is the
// empty coefficient vector and has degree() == -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(char var) : var_(var) {}
  Poly(std::vector<Int> coeffs, char var);
  static Poly constant(Int c, char var = 'q');
  static Poly monomial(Int c, int exp, char var = 'q');

  char var() const { return var_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Int>& coeffs() const { return c_; }
  Int coeff(int exp) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Multiply by c * x^exp.
  Poly shifted(int exp, const Int& c = 1) const;
  // Substitute x -> x^step (spreads exponents; step >= 1).
  Poly expand_exponents(int step) const;
  // Exact division; throws std::domain_error if there is a remainder.
  Poly divide_exact(const Poly& divisor) const;
  // Truncate to degrees < limit.
  Poly truncated(int limit) const;

  Int eval(const Int& x) const;

  // "1 + 2q^4 - q^6"; "0" for the zero polynomial.
  std::string str() const;

 private:
  void normalize();
  std::vector<Int> c_;
  char var_ = 'q';
};

// Gaussian binomial [m j] in the variable q^step, by exact division of
// cyclotomic-style factors (the remainder must vanish).
Poly qbinom(int m, int j, int step = 1);

// Betti polynomial of Gr(k,n) with Z coefficients, variable t.
//   (2j,2m), (2j,2m+1), (2j+1,2m+1)  ->  [m j]_{t^4}
//   (2j+1,2m)                        ->  (1+t^{2m-1}) [m-1 j]_{t^4}
// k = 0 (a point) gives 1.
Poly poincare(int k, int n);

// Betti polynomial with the twisted rank-one local system, variable t.
//   (2j+1,2m)   -> 0
//   (2j,2m+1)   -> t^{2j} [m j]_{t^4}
//   (2j+1,2m+1) -> t^{2(m-j)} [m j]_{t^4}
//   (2j,2m)     -> t^{2j} [m-1 j]_{t^4} + t^{2(m-j)} [m-1 j-1]_{t^4}
// The even/even case is the split form forced by the recursion
// P*_{(2j,2m)} = P*_{(2j,2m-1)} + t^{2(m-j)} P_{(2j-1,2m-1)}; it matches the
// complexes computed from the incidence graphs (the two-term product form
// found in some sources has degree above the manifold dimension).
Poly poincare_twisted(int k, int n);

// Blow-up polynomial p_{(k,n)}(q):
//   regular shapes -> [m j]_{q^2};  (2j+1,2m) -> (1-q^m) [m-1 j]_{q^2}.
Poly p_poly(int k, int n);

// Twisted blow-up polynomial, stated for odd n only:
//   (2j,2m+1) -> q^j [m j]_{q^2};  (2j+1,2m+1) -> q^{m-j} [m j]_{q^2}.
// Throws std::invalid_argument for even n (no closed form is asserted there;
// use p_from_graph on the twisted graph instead).
Poly p_star_poly(int k, int n);

// Alternating vertex sum sum_w (-1)^{l(w)} q^{eta(w)} over an incidence graph.
Poly p_from_graph(const IncidenceGraph& g);

// Euler characteristic: binom(m,j) on regular shapes, 0 on (2j+1,2m).
// Computed both from the closed form and as poincare(k,n) at t=-1; the two
// must agree (internal check).
Int euler_char(int k, int n);

// Truncation of prod_{j=1}^{floor(k/2)} 1/(1 - t^{4j}) to degrees <= degree.
Poly bo_series_truncation(int k, int degree);

// Symbolic verification of the eight Pascal-style recursions for P and P*
// over all shapes with m <= max_m. Every item must pass.
struct RecursionReport {
  struct Item {
    std::string identity;
    int j;
    int m;
    bool ok;
  };
  std::vector<Item> items;
  bool all_ok() const;
  int failures() const;
};
RecursionReport check_recursions(int max_m);

}  // namespace gr
