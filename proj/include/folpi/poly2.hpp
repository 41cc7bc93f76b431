#pragma once
// Bivariate polynomials over exact rationals, plus the univariate helpers
// needed for tangent-direction analysis. No floating point anywhere here.

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace folpi {

using Rat = mpq_class;
using Int = mpz_class;

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& m) : std::runtime_error(m) {}
};

// Dense univariate polynomial; c[i] is the coefficient of t^i.
// Invariant: either empty (the zero polynomial) or c.back() != 0.
struct Poly1 {
  std::vector<Rat> c;

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  void trim();
  Rat eval(const Rat& t) const;
  Poly1 derivative() const;
};

Poly1 p1_add(const Poly1& a, const Poly1& b);
Poly1 p1_sub(const Poly1& a, const Poly1& b);
Poly1 p1_mul(const Poly1& a, const Poly1& b);
// Remainder of a by monic-normalized b; b must be nonzero.
Poly1 p1_rem(const Poly1& a, const Poly1& b);
Poly1 p1_gcd(const Poly1& a, const Poly1& b);  // monic, or zero if both zero
bool p1_squarefree(const Poly1& a);
// Exact division by (t - r); asserts divisibility.
Poly1 p1_deflate(const Poly1& a, const Rat& r);
// All rational roots with multiplicities, plus the root-free cofactor.
struct RationalRoots {
  std::vector<std::pair<Rat, int>> roots;  // ascending by value
  Poly1 cofactor;                          // no rational roots remain
};
RationalRoots p1_rational_roots(const Poly1& a);

// Sparse bivariate polynomial; keys are (x-exponent, y-exponent).
// Invariant: no explicit zero coefficients.
struct Poly2 {
  std::map<std::pair<int, int>, Rat> t;

  bool is_zero() const { return t.empty(); }
  Rat coeff(int i, int j) const;
  Rat eval(const Rat& x, const Rat& y) const;
  int total_degree() const;  // -1 for zero
  int ord_origin() const;    // min i+j; -1 for zero
  int ord_x() const;         // min x-exponent; -1 for zero
  int ord_y() const;
  std::string str() const;   // canonical, ascending (i,j)
};

Poly2 p2_from(const Rat& c, int i = 0, int j = 0);
Poly2 p2_add(const Poly2& a, const Poly2& b);
Poly2 p2_sub(const Poly2& a, const Poly2& b);
Poly2 p2_neg(const Poly2& a);
Poly2 p2_mul(const Poly2& a, const Poly2& b);
Poly2 p2_pow(const Poly2& a, unsigned e);
Poly2 p2_dx(const Poly2& a);
Poly2 p2_dy(const Poly2& a);
Poly2 p2_swap_xy(const Poly2& a);
Poly2 p2_chart1(const Poly2& a);              // (x,y) -> (x, x*y)
Poly2 p2_chart2(const Poly2& a);              // (x,y) -> (x*y, y)
Poly2 p2_translate(const Poly2& a, const Rat& u, const Rat& v);  // f(x+u, y+v)
Poly2 p2_div_xpow(const Poly2& a, int k);     // exact; asserts ord_x >= k
Poly2 p2_div_ypow(const Poly2& a, int k);
Poly1 p2_at_x0(const Poly2& a);               // f(0, t)
Poly1 p2_at_y0(const Poly2& a);               // f(t, 0)

// GCD in Q[x,y], primitive with positive leading coefficient.
Poly2 p2_gcd(const Poly2& a, const Poly2& b);
bool p2_squarefree(const Poly2& a);

// Expression parser: + - * ^ with integer or p/q literals and variables x, y.
Poly2 parse_poly2(const std::string& text);

}  // namespace folpi
