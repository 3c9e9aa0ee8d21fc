#include "grassmann/qpoly.hpp"

#include <sstream>

#include "grassmann/incidence.hpp"

namespace gr {

Poly::Poly(std::vector<Int> coeffs, char var) : c_(std::move(coeffs)), var_(var) {
  normalize();
}

Poly Poly::constant(Int c, char var) {
  return Poly(std::vector<Int>{std::move(c)}, var);
}

Poly Poly::monomial(Int c, int exp, char var) {
  if (exp < 0) throw std::invalid_argument("monomial: negative exponent");
  std::vector<Int> v(exp + 1, 0);
  v[exp] = std::move(c);
  return Poly(std::move(v), var);
}

void Poly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Int Poly::coeff(int exp) const {
  if (exp < 0 || exp >= static_cast<int>(c_.size())) return 0;
  return c_[exp];
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return Poly(std::move(r), var_);
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return Poly(std::move(r), var_);
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly(var_);
  std::vector<Int> r(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return Poly(std::move(r), var_);
}

bool Poly::operator==(const Poly& o) const { return c_ == o.c_; }

Poly Poly::shifted(int exp, const Int& c) const {
  if (is_zero() || c == 0) return Poly(var_);
  std::vector<Int> r(c_.size() + exp, 0);
  for (size_t i = 0; i < c_.size(); ++i) r[i + exp] = c_[i] * c;
  return Poly(std::move(r), var_);
}

Poly Poly::expand_exponents(int step) const {
  if (step < 1) throw std::invalid_argument("expand_exponents: step < 1");
  if (is_zero() || step == 1) return *this;
  std::vector<Int> r(static_cast<size_t>(degree()) * step + 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) r[i * step] = c_[i];
  return Poly(std::move(r), var_);
}

Poly Poly::divide_exact(const Poly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("divide_exact: zero divisor");
  if (is_zero()) return Poly(var_);
  if (degree() < divisor.degree())
    throw std::domain_error("divide_exact: nonzero remainder");
  std::vector<Int> rem = c_;
  std::vector<Int> quo(degree() - divisor.degree() + 1, 0);
  const Int& lead = divisor.c_.back();
  for (int i = static_cast<int>(quo.size()) - 1; i >= 0; --i) {
    Int& top = rem[i + divisor.degree()];
    if (top == 0) continue;
    if (top % lead != 0) throw std::domain_error("divide_exact: nonzero remainder");
    quo[i] = top / lead;
    for (int j = 0; j <= divisor.degree(); ++j)
      rem[i + j] -= quo[i] * divisor.c_[j];
  }
  for (const Int& x : rem)
    if (x != 0) throw std::domain_error("divide_exact: nonzero remainder");
  return Poly(std::move(quo), var_);
}

Poly Poly::truncated(int limit) const {
  std::vector<Int> r;
  for (int i = 0; i < limit && i < static_cast<int>(c_.size()); ++i)
    r.push_back(c_[i]);
  return Poly(std::move(r), var_);
}

Int Poly::eval(const Int& x) const {
  Int acc = 0;
  for (int i = degree(); i >= 0; --i) acc = acc * x + c_[i];
  return acc;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Int a = c_[i];
    if (first) {
      if (a < 0) out << "-";
    } else {
      out << (a < 0 ? " - " : " + ");
    }
    Int mag = abs(a);
    if (mag != 1 || i == 0) out << mag.get_str();
    if (i > 0) {
      out << var_;
      if (i > 1) out << "^" << i;
    }
    first = false;
  }
  return out.str();
}

Poly qbinom(int m, int j, int step) {
  if (j < 0 || j > m) throw std::invalid_argument("qbinom: need 0 <= j <= m");
  if (step < 1) throw std::invalid_argument("qbinom: step < 1");
  // [m j]_q = prod_{i=0}^{j-1} (1 - q^{m-i}) / (1 - q^{j-i}); every division
  // is exact and checked.
  auto one_minus_pow = [](int e) {
    std::vector<Int> v(e + 1, 0);
    v[0] = 1;
    v[e] = -1;
    return Poly(std::move(v), 'q');
  };
  Poly acc = Poly::constant(1, 'q');
  for (int i = 0; i < j; ++i) acc = acc * one_minus_pow(m - i);
  for (int i = 0; i < j; ++i) acc = acc.divide_exact(one_minus_pow(j - i));
  return acc.expand_exponents(step);
}

namespace {

// Shape (k,n) -> (j, m) with k in {2j, 2j+1}, n in {2m, 2m+1}.
struct Shape {
  int j, m;
  bool k_odd, n_odd;
};

Shape shape_of(int k, int n) {
  if (k < 0 || n < 0 || k > n)
    throw std::invalid_argument("need 0 <= k <= n");
  return Shape{k / 2, n / 2, k % 2 == 1, n % 2 == 1};
}

// [m j] in t^4 with out-of-range j treated as zero.
Poly qb4(int m, int j) {
  if (j < 0 || j > m) return Poly('t');
  Poly p = qbinom(m, j, 4);
  return Poly(p.coeffs(), 't');
}

}  // namespace

Poly poincare(int k, int n) {
  auto [j, m, k_odd, n_odd] = shape_of(k, n);
  if (!k_odd) return qb4(m, j);                       // (2j,2m), (2j,2m+1)
  if (n_odd) return qb4(m, j);                        // (2j+1,2m+1)
  // (2j+1,2m)
  return (Poly::constant(1, 't') + Poly::monomial(1, 2 * m - 1, 't')) *
         qb4(m - 1, j);
}

Poly poincare_twisted(int k, int n) {
  auto [j, m, k_odd, n_odd] = shape_of(k, n);
  if (k_odd && !n_odd) return Poly('t');                         // (2j+1,2m)
  if (!k_odd && n_odd) return qb4(m, j).shifted(2 * j);          // (2j,2m+1)
  if (k_odd && n_odd) return qb4(m, j).shifted(2 * (m - j));     // (2j+1,2m+1)
  // (2j,2m): split form from the recursion
  // P*_{(2j,2m)} = P*_{(2j,2m-1)} + t^{2(m-j)} P_{(2j-1,2m-1)}.
  return qb4(m - 1, j).shifted(2 * j) +
         qb4(m - 1, j - 1).shifted(2 * (m - j));
}

Poly p_poly(int k, int n) {
  auto [j, m, k_odd, n_odd] = shape_of(k, n);
  if (!k_odd || n_odd) return qbinom(m, j, 2);
  // (2j+1,2m)
  Poly factor = Poly::constant(1, 'q') - Poly::monomial(1, m, 'q');
  return factor * qbinom(m - 1, j, 2);
}

Poly p_star_poly(int k, int n) {
  auto [j, m, k_odd, n_odd] = shape_of(k, n);
  if (!n_odd)
    throw std::invalid_argument(
        "p_star_poly: no closed form for even n; use the graph sum");
  if (!k_odd) return qbinom(m, j, 2).shifted(j);       // (2j,2m+1)
  return qbinom(m, j, 2).shifted(m - j);               // (2j+1,2m+1)
}

Poly p_from_graph(const IncidenceGraph& g) {
  Poly acc('q');
  for (size_t v = 0; v < g.verts.size(); ++v) {
    int sign = g.verts[v].dim() % 2 == 0 ? 1 : -1;
    acc = acc + Poly::monomial(sign, g.eta[v], 'q');
  }
  return acc;
}

Int euler_char(int k, int n) {
  auto [j, m, k_odd, n_odd] = shape_of(k, n);
  Int closed;
  if (k_odd && !n_odd) {
    closed = 0;
  } else {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), m, j);
    closed = b;
  }
  Int via_eval = poincare(k, n).eval(-1);
  if (closed != via_eval)
    throw std::logic_error("euler_char: closed form and P(-1) disagree");
  return closed;
}

Poly bo_series_truncation(int k, int degree) {
  if (degree < 0 || degree > 64)
    throw std::invalid_argument("bo_series_truncation: degree out of range");
  // prod 1/(1-t^{4j}) expanded as iterated geometric series, truncated.
  std::vector<Int> acc(degree + 1, 0);
  acc[0] = 1;
  for (int j = 1; j <= k / 2; ++j) {
    // multiply by 1/(1-t^{4j}): prefix recurrence a[i] += a[i-4j]
    for (int i = 4 * j; i <= degree; ++i) acc[i] += acc[i - 4 * j];
  }
  return Poly(std::move(acc), 't');
}

namespace {

// P/P* with out-of-range k treated as the zero polynomial, so that the
// recursions can be checked uniformly near the boundary. k = 0 is a point.
Poly P(int k, int n) {
  if (k < 0 || k > n) return Poly('t');
  return poincare(k, n);
}
Poly Pstar(int k, int n) {
  if (k < 0 || k > n) return Poly('t');
  return poincare_twisted(k, n);
}

}  // namespace

bool RecursionReport::all_ok() const {
  for (const auto& it : items)
    if (!it.ok) return false;
  return true;
}

int RecursionReport::failures() const {
  int f = 0;
  for (const auto& it : items)
    if (!it.ok) ++f;
  return f;
}

RecursionReport check_recursions(int max_m) {
  if (max_m > 8) throw std::invalid_argument("check_recursions: max_m > 8");
  RecursionReport rep;
  auto record = [&rep](const char* name, int j, int m, const Poly& lhs,
                       const Poly& rhs) {
    rep.items.push_back({name, j, m, lhs == rhs});
  };
  auto t = [](int e) { return Poly::monomial(1, e, 't'); };

  for (int m = 1; m <= max_m; ++m) {
    for (int j = 0; j <= m; ++j) {
      // (a*)  P*_{(2j,2m+1)} = P*_{(2j,2m-1)} + t^{4(m-j)+2} P*_{(2j-2,2m-1)}
      if (2 * j <= 2 * m - 1)
        record("a*", j, m, Pstar(2 * j, 2 * m + 1),
               Pstar(2 * j, 2 * m - 1) +
                   t(4 * (m - j) + 2) * Pstar(2 * j - 2, 2 * m - 1));
      // (b*)  P*_{(2j+1,2m)} = P*_{(2j+1,2m-2)} + t^{4(m-j)-2} P*_{(2j-1,2m-2)}
      if (2 * j + 1 <= 2 * m - 2)
        record("b*", j, m, Pstar(2 * j + 1, 2 * m),
               Pstar(2 * j + 1, 2 * m - 2) +
                   t(4 * (m - j) - 2) * Pstar(2 * j - 1, 2 * m - 2));
      // (c*)  P*_{(2j,2m)} = P*_{(2j,2m-1)} + t^{2(m-j)} P_{(2j-1,2m-1)}
      if (2 * j <= 2 * m - 1)
        record("c*", j, m, Pstar(2 * j, 2 * m),
               Pstar(2 * j, 2 * m - 1) + t(2 * (m - j)) * P(2 * j - 1, 2 * m - 1));
      // (d*)  P*_{(2j+1,2m+1)} = P*_{(2j+1,2m)} + t^{2(m-j)} P_{(2j,2m)}
      if (2 * j + 1 <= 2 * m)
        record("d*", j, m, Pstar(2 * j + 1, 2 * m + 1),
               Pstar(2 * j + 1, 2 * m) + t(2 * (m - j)) * P(2 * j, 2 * m));
      // (a)  P_{(2j,2m+1)} = P_{(2j,2m)} + t^{2(m-j)+1} P*_{(2j-1,2m)}
      if (2 * j <= 2 * m)
        record("a", j, m, P(2 * j, 2 * m + 1),
               P(2 * j, 2 * m) + t(2 * (m - j) + 1) * Pstar(2 * j - 1, 2 * m));
      // (b)  P_{(2j+1,2m)} = P_{(2j+1,2m-1)} + t^{2(m-j)-1} P*_{(2j,2m-1)}
      if (2 * j + 1 <= 2 * m - 1)
        record("b", j, m, P(2 * j + 1, 2 * m),
               P(2 * j + 1, 2 * m - 1) +
                   t(2 * (m - j) - 1) * Pstar(2 * j, 2 * m - 1));
      // (c)  P_{(2j,2m)} = P_{(2j,2m-2)} + t^{4(m-j)} P_{(2j-2,2m-2)}
      if (2 * j <= 2 * m - 2)
        record("c", j, m, P(2 * j, 2 * m),
               P(2 * j, 2 * m - 2) + t(4 * (m - j)) * P(2 * j - 2, 2 * m - 2));
      // (d)  P_{(2j+1,2m+1)} = P_{(2j+1,2m-1)} + t^{4(m-j)} P_{(2j-1,2m-1)}
      if (2 * j + 1 <= 2 * m - 1)
        record("d", j, m, P(2 * j + 1, 2 * m + 1),
               P(2 * j + 1, 2 * m - 1) + t(4 * (m - j)) * P(2 * j - 1, 2 * m - 1));
    }
  }
  return rep;
}

}  // namespace gr
