#pragma once
// F_q point counts of the (complexified) real Grassmannian: closed forms for
// Grassmannians, spheres, isotropic cones and SO_n orders, plus a brute-force
// subspace-enumeration oracle over small prime fields.

#include <cstdint>

#include "grassmann/qpoly.hpp"

namespace gr {

// Prime field F_q, q an odd prime with -1 a square (q = 1 mod 4), so that
// sqrt(-1) exists without extension-field machinery. Prime powers with
// exponent > 1 are rejected as unsupported.
struct PrimeField {
  int64_t q = 0;
  int64_t sqrt_minus_one = 0;  // some x with x^2 = -1 (mod q)
};

// Validates and constructs; throws std::invalid_argument if q is not an odd
// prime or -1 is not a square mod q.
PrimeField make_prime_field(int64_t q);

// |Gr(k,n)_{F_q}| as a polynomial in q:
//   regular shapes: q^r [m j]_{q^2},              r = k(n-k) - 2j(m-j)
//   (2j+1,2m):      q^r (q^m - 1) [m-1 j]_{q^2},  r = k(n-k) - 2j(m-j-1) - m
// Both equal q^{k(n-k)-D} |p_{(k,n)}(q)| with D = deg p.
Poly grass_points_closed(int k, int n);

// |S^n(F_q)|: q^{m-1}(q^m - 1) for n = 2m-1, q^m(q^m + 1) for n = 2m.
Poly sphere_points(int n);

// Number of solutions (including 0) of x_1^2 + ... + x_n^2 = 0 in F_q^n:
// q^{2m-2} for n = 2m-1, q^{2m-1} + q^m - q^{m-1} for n = 2m.
Poly isotropic_zero_count(int n);

// |SO_n(F_q)| closed form; also computed as prod_{k=1}^{n} |S^{n-k}(F_q)|
// (with |S^0| = 2) and asserted equal.
Poly so_order(int n);

// Exhaustive count of k-subspaces of F_q^n with nondegenerate restriction of
// the standard symmetric form, enumerated via echelon representatives per
// Schubert cell. Throws std::length_error when C(n,k) q^{k(n-k)} exceeds the
// 1e8 field-operation budget.
int64_t oracle_count(int k, int n, const PrimeField& f);

// Checks oracle_count(k,n,q) == grass_points_closed(k,n)(q) and that both
// equal |q^{k(n-k)-D} p_{(k,n)}(q)| with D = deg p.
struct PointCountCheck {
  bool ok = false;
  Int closed;      // closed-form value at q
  Int via_p;       // |q^{k(n-k)-D} p(q)|
  int64_t oracle;  // enumerated value
};
PointCountCheck verify_p_relation(int k, int n, const PrimeField& f);

}  // namespace gr
