#include "folpi/poly2.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <cstdint>

namespace folpi {

void Poly1::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Rat Poly1::eval(const Rat& t) const {
  Rat r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * t + *it;
  return r;
}

Poly1 Poly1::derivative() const {
  Poly1 d;
  for (size_t i = 1; i < c.size(); ++i) d.c.push_back(c[i] * Rat(static_cast<long>(i)));
  d.trim();
  return d;
}

Poly1 p1_add(const Poly1& a, const Poly1& b) {
  Poly1 r = a;
  if (r.c.size() < b.c.size()) r.c.resize(b.c.size(), Rat(0));
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  r.trim();
  return r;
}

Poly1 p1_sub(const Poly1& a, const Poly1& b) {
  Poly1 r = a;
  if (r.c.size() < b.c.size()) r.c.resize(b.c.size(), Rat(0));
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
  r.trim();
  return r;
}

Poly1 p1_mul(const Poly1& a, const Poly1& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Poly1 r;
  r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  r.trim();
  return r;
}

Poly1 p1_rem(const Poly1& a, const Poly1& b) {
  assert(!b.is_zero());
  Poly1 r = a;
  const int db = b.degree();
  const Rat lead = b.c.back();
  while (!r.is_zero() && r.degree() >= db) {
    const Rat q = r.c.back() / lead;
    const int shift = r.degree() - db;
    for (int i = 0; i <= db; ++i) r.c[i + shift] -= q * b.c[i];
    r.trim();
  }
  return r;
}

Poly1 p1_gcd(const Poly1& a, const Poly1& b) {
  Poly1 f = a, g = b;
  f.trim();
  g.trim();
  while (!g.is_zero()) {
    Poly1 r = p1_rem(f, g);
    f = g;
    g = r;
  }
  if (!f.is_zero()) {
    const Rat lead = f.c.back();
    for (auto& x : f.c) x /= lead;
  }
  return f;
}

bool p1_squarefree(const Poly1& a) {
  if (a.is_zero()) return false;
  if (a.degree() <= 1) return true;
  return p1_gcd(a, a.derivative()).degree() == 0;
}

Poly1 p1_deflate(const Poly1& a, const Rat& r) {
  // synthetic division by (t - r)
  assert(!a.is_zero() && a.degree() >= 1);
  Poly1 q;
  q.c.assign(a.c.size() - 1, Rat(0));
  Rat carry = a.c.back();
  for (int i = a.degree() - 1; i >= 0; --i) {
    q.c[i] = carry;
    carry = a.c[i] + carry * r;
  }
  assert(carry == 0);
  q.trim();
  return q;
}

RationalRoots p1_rational_roots(const Poly1& a) {
  RationalRoots out;
  Poly1 f = a;
  f.trim();
  assert(!f.is_zero());

  // factor out t^k first
  int k = 0;
  while (!f.is_zero() && f.c[0] == 0) {
    f.c.erase(f.c.begin());
    ++k;
  }
  if (k > 0) out.roots.push_back({Rat(0), k});

  if (f.degree() >= 1) {
    // clear denominators to a primitive integer polynomial
    Int den = 1;
    for (const auto& c : f.c) den = lcm(den, Int(c.get_den()));
    std::vector<Int> ic;
    for (const auto& c : f.c) ic.push_back(Int(c.get_num() * den / c.get_den()));

    // candidates p/q with p | ic[0], q | ic.back()
    auto divisors = [](Int n) {
      n = abs(n);
      std::vector<Int> d;
      for (Int i = 1; i * i <= n; ++i)
        if (n % i == 0) {
          d.push_back(i);
          if (i * i != n) d.push_back(n / i);
        }
      return d;
    };
    std::vector<Rat> cands;
    for (const Int& p : divisors(ic.front()))
      for (const Int& q : divisors(ic.back())) {
        Rat r(p, q);
        r.canonicalize();
        cands.push_back(r);
        cands.push_back(-r);
      }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

    for (const Rat& r : cands) {
      int mult = 0;
      while (f.degree() >= 1 && f.eval(r) == 0) {
        f = p1_deflate(f, r);
        ++mult;
      }
      if (mult > 0) out.roots.push_back({r, mult});
    }
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  out.cofactor = f;
  return out;
}

Rat Poly2::coeff(int i, int j) const {
  auto it = t.find({i, j});
  return it == t.end() ? Rat(0) : it->second;
}

Rat Poly2::eval(const Rat& x, const Rat& y) const {
  Rat r = 0;
  for (const auto& [ij, c] : t) {
    Rat m = c;
    for (int k = 0; k < ij.first; ++k) m *= x;
    for (int k = 0; k < ij.second; ++k) m *= y;
    r += m;
  }
  return r;
}

int Poly2::total_degree() const {
  int d = -1;
  for (const auto& [ij, c] : t) d = std::max(d, ij.first + ij.second);
  return d;
}

int Poly2::ord_origin() const {
  if (t.empty()) return -1;
  int d = INT32_MAX;
  for (const auto& [ij, c] : t) d = std::min(d, ij.first + ij.second);
  return d;
}

int Poly2::ord_x() const {
  if (t.empty()) return -1;
  int d = INT32_MAX;
  for (const auto& [ij, c] : t) d = std::min(d, ij.first);
  return d;
}

int Poly2::ord_y() const {
  if (t.empty()) return -1;
  int d = INT32_MAX;
  for (const auto& [ij, c] : t) d = std::min(d, ij.second);
  return d;
}

std::string Poly2::str() const {
  if (t.empty()) return "0";
  std::string s;
  for (const auto& [ij, c] : t) {
    const bool neg = c < 0;
    Rat a = neg ? Rat(-c) : c;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    std::string mono;
    if (ij.first > 0) mono += "x" + (ij.first > 1 ? "^" + std::to_string(ij.first) : "");
    if (ij.second > 0) {
      if (!mono.empty()) mono += "*";
      mono += "y" + (ij.second > 1 ? "^" + std::to_string(ij.second) : "");
    }
    if (mono.empty())
      s += a.get_str();
    else if (a == 1)
      s += mono;
    else
      s += a.get_str() + "*" + mono;
  }
  return s;
}

static void p2_set(Poly2& p, int i, int j, const Rat& c) {
  if (c == 0)
    p.t.erase({i, j});
  else
    p.t[{i, j}] = c;
}

static void p2_addto(Poly2& p, int i, int j, const Rat& c) {
  auto it = p.t.find({i, j});
  if (it == p.t.end()) {
    if (c != 0) p.t[{i, j}] = c;
  } else {
    it->second += c;
    if (it->second == 0) p.t.erase(it);
  }
}

Poly2 p2_from(const Rat& c, int i, int j) {
  Poly2 p;
  p2_set(p, i, j, c);
  return p;
}

Poly2 p2_add(const Poly2& a, const Poly2& b) {
  Poly2 r = a;
  for (const auto& [ij, c] : b.t) p2_addto(r, ij.first, ij.second, c);
  return r;
}

Poly2 p2_sub(const Poly2& a, const Poly2& b) {
  Poly2 r = a;
  for (const auto& [ij, c] : b.t) p2_addto(r, ij.first, ij.second, Rat(-c));
  return r;
}

Poly2 p2_neg(const Poly2& a) {
  Poly2 r;
  for (const auto& [ij, c] : a.t) r.t[ij] = -c;
  return r;
}

Poly2 p2_mul(const Poly2& a, const Poly2& b) {
  Poly2 r;
  for (const auto& [ia, ca] : a.t)
    for (const auto& [ib, cb] : b.t)
      p2_addto(r, ia.first + ib.first, ia.second + ib.second, ca * cb);
  return r;
}

Poly2 p2_pow(const Poly2& a, unsigned e) {
  Poly2 r = p2_from(Rat(1));
  for (unsigned k = 0; k < e; ++k) r = p2_mul(r, a);
  return r;
}

Poly2 p2_dx(const Poly2& a) {
  Poly2 r;
  for (const auto& [ij, c] : a.t)
    if (ij.first > 0) r.t[{ij.first - 1, ij.second}] = c * ij.first;
  return r;
}

Poly2 p2_dy(const Poly2& a) {
  Poly2 r;
  for (const auto& [ij, c] : a.t)
    if (ij.second > 0) r.t[{ij.first, ij.second - 1}] = c * ij.second;
  return r;
}

Poly2 p2_swap_xy(const Poly2& a) {
  Poly2 r;
  for (const auto& [ij, c] : a.t) r.t[{ij.second, ij.first}] = c;
  return r;
}

Poly2 p2_chart1(const Poly2& a) {
  Poly2 r;
  for (const auto& [ij, c] : a.t) p2_addto(r, ij.first + ij.second, ij.second, c);
  return r;
}

Poly2 p2_chart2(const Poly2& a) {
  Poly2 r;
  for (const auto& [ij, c] : a.t) p2_addto(r, ij.first, ij.first + ij.second, c);
  return r;
}

Poly2 p2_translate(const Poly2& a, const Rat& u, const Rat& v) {
  // f(x+u, y+v) by repeated binomial expansion; degrees here are small
  if (u == 0 && v == 0) return a;
  Poly2 r;
  for (const auto& [ij, c] : a.t) {
    // (x+u)^i
    std::vector<Rat> xb(ij.first + 1);
    xb[ij.first] = 1;
    for (int k = ij.first - 1; k >= 0; --k) xb[k] = xb[k + 1] * u * (k + 1) / (ij.first - k);
    std::vector<Rat> yb(ij.second + 1);
    yb[ij.second] = 1;
    for (int k = ij.second - 1; k >= 0; --k) yb[k] = yb[k + 1] * v * (k + 1) / (ij.second - k);
    for (int p = 0; p <= ij.first; ++p)
      for (int q = 0; q <= ij.second; ++q) p2_addto(r, p, q, c * xb[p] * yb[q]);
  }
  return r;
}

Poly2 p2_div_xpow(const Poly2& a, int k) {
  if (k == 0) return a;
  Poly2 r;
  for (const auto& [ij, c] : a.t) {
    assert(ij.first >= k);
    r.t[{ij.first - k, ij.second}] = c;
  }
  return r;
}

Poly2 p2_div_ypow(const Poly2& a, int k) {
  if (k == 0) return a;
  Poly2 r;
  for (const auto& [ij, c] : a.t) {
    assert(ij.second >= k);
    r.t[{ij.first, ij.second - k}] = c;
  }
  return r;
}

Poly1 p2_at_x0(const Poly2& a) {
  Poly1 r;
  for (const auto& [ij, c] : a.t)
    if (ij.first == 0) {
      if (static_cast<int>(r.c.size()) <= ij.second) r.c.resize(ij.second + 1, Rat(0));
      r.c[ij.second] = c;
    }
  r.trim();
  return r;
}

Poly1 p2_at_y0(const Poly2& a) {
  Poly1 r;
  for (const auto& [ij, c] : a.t)
    if (ij.second == 0) {
      if (static_cast<int>(r.c.size()) <= ij.first) r.c.resize(ij.first + 1, Rat(0));
      r.c[ij.first] = c;
    }
  r.trim();
  return r;
}

// --- bivariate gcd via primitive PRS in (Q[x])[y] ---

namespace {

// y-recursive view: coefficient of y^j is a Poly1 in x
std::vector<Poly1> to_yrec(const Poly2& a) {
  std::vector<Poly1> r;
  for (const auto& [ij, c] : a.t) {
    if (static_cast<int>(r.size()) <= ij.second) r.resize(ij.second + 1);
    auto& p = r[ij.second];
    if (static_cast<int>(p.c.size()) <= ij.first) p.c.resize(ij.first + 1, Rat(0));
    p.c[ij.first] = c;
  }
  for (auto& p : r) p.trim();
  while (!r.empty() && r.back().is_zero()) r.pop_back();
  return r;
}

Poly2 from_yrec(const std::vector<Poly1>& v) {
  Poly2 r;
  for (size_t j = 0; j < v.size(); ++j)
    for (size_t i = 0; i < v[j].c.size(); ++i)
      if (v[j].c[i] != 0) r.t[{static_cast<int>(i), static_cast<int>(j)}] = v[j].c[i];
  return r;
}

Poly1 content_y(const std::vector<Poly1>& v) {
  Poly1 g;
  for (const auto& p : v) g = p1_gcd(g, p);
  return g;
}

// exact division of univariate polynomials; asserts exactness
Poly1 p1_divexact(const Poly1& a, const Poly1& b) {
  if (a.is_zero()) return {};
  Poly1 r = a, q;
  q.c.assign(a.degree() - b.degree() + 1, Rat(0));
  const int db = b.degree();
  const Rat lead = b.c.back();
  while (!r.is_zero() && r.degree() >= db) {
    const Rat f = r.c.back() / lead;
    const int shift = r.degree() - db;
    q.c[shift] = f;
    for (int i = 0; i <= db; ++i) r.c[i + shift] -= f * b.c[i];
    r.trim();
  }
  assert(r.is_zero());
  q.trim();
  return q;
}

std::vector<Poly1> yrec_primitive(const std::vector<Poly1>& v, Poly1* content_out) {
  Poly1 ct = content_y(v);
  if (content_out) *content_out = ct;
  std::vector<Poly1> r;
  r.reserve(v.size());
  for (const auto& p : v) r.push_back(p.is_zero() ? Poly1{} : p1_divexact(p, ct));
  return r;
}

// pseudo-remainder of a by b in (Q[x])[y]
std::vector<Poly1> yrec_prem(std::vector<Poly1> a, const std::vector<Poly1>& b) {
  const int db = static_cast<int>(b.size()) - 1;
  const Poly1& lb = b.back();
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    const int da = static_cast<int>(a.size()) - 1;
    const Poly1 la = a.back();
    // a := lb*a - la * y^(da-db) * b
    for (auto& p : a) p = p1_mul(p, lb);
    for (int i = 0; i <= db; ++i) {
      a[da - db + i] = p1_sub(a[da - db + i], p1_mul(la, b[i]));
    }
    while (!a.empty() && a.back().is_zero()) a.pop_back();
  }
  return a;
}

}  // namespace

Poly2 p2_gcd(const Poly2& a, const Poly2& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  auto fa = to_yrec(a), fb = to_yrec(b);
  if (fa.size() == 1 && fb.size() == 1) {
    Poly1 g = p1_gcd(fa[0], fb[0]);
    return from_yrec({g});
  }
  Poly1 ca, cb;
  auto pa = yrec_primitive(fa, &ca);
  auto pb = yrec_primitive(fb, &cb);
  Poly1 cg = p1_gcd(ca, cb);
  if (pa.size() < pb.size()) std::swap(pa, pb);
  while (!pb.empty()) {
    auto r = yrec_prem(pa, pb);
    pa = pb;
    pb = yrec_primitive(r, nullptr);
  }
  auto g = yrec_primitive(pa, nullptr);
  // fold back the x-content gcd
  for (auto& p : g) p = p1_mul(p, cg);
  Poly2 out = from_yrec(g);
  // normalize sign: leading (max key) coefficient positive
  if (!out.t.empty() && out.t.rbegin()->second < 0) out = p2_neg(out);
  return out;
}

bool p2_squarefree(const Poly2& a) {
  if (a.is_zero()) return false;
  Poly2 g = p2_gcd(p2_gcd(a, p2_dx(a)), p2_dy(a));
  return g.total_degree() == 0;
}

// --- parser ---

namespace {

struct Lexer {
  const std::string& s;
  size_t pos = 0;
  explicit Lexer(const std::string& str) : s(str) {}
  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }
  char get() {
    skip();
    return pos < s.size() ? s[pos++] : '\0';
  }
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError("parse error at position " + std::to_string(pos) + ": " + what);
  }
};

Int lex_uint(Lexer& lx) {
  lx.skip();
  if (lx.pos >= lx.s.size() || !std::isdigit(static_cast<unsigned char>(lx.s[lx.pos])))
    lx.fail("expected integer");
  std::string digits;
  while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos])))
    digits += lx.s[lx.pos++];
  return Int(digits);
}

Poly2 parse_expr(Lexer& lx);

Poly2 parse_base(Lexer& lx) {
  const char c = lx.peek();
  if (c == '(') {
    lx.get();
    Poly2 e = parse_expr(lx);
    if (lx.get() != ')') lx.fail("expected ')'");
    return e;
  }
  if (c == 'x') {
    lx.get();
    return p2_from(Rat(1), 1, 0);
  }
  if (c == 'y') {
    lx.get();
    return p2_from(Rat(1), 0, 1);
  }
  if (std::isdigit(static_cast<unsigned char>(c))) {
    Int num = lex_uint(lx);
    if (lx.peek() == '/') {
      lx.get();
      Int den = lex_uint(lx);
      if (den == 0) lx.fail("zero denominator");
      Rat r(num, den);
      r.canonicalize();
      return p2_from(r);
    }
    return p2_from(Rat(num));
  }
  lx.fail("expected '(', variable, or number");
}

Poly2 parse_factor(Lexer& lx) {
  Poly2 b = parse_base(lx);
  if (lx.peek() == '^') {
    lx.get();
    Int e = lex_uint(lx);
    if (e > 64) lx.fail("exponent too large");
    return p2_pow(b, static_cast<unsigned>(e.get_ui()));
  }
  return b;
}

Poly2 parse_term(Lexer& lx) {
  Poly2 r = parse_factor(lx);
  while (lx.peek() == '*') {
    lx.get();
    r = p2_mul(r, parse_factor(lx));
  }
  return r;
}

Poly2 parse_expr(Lexer& lx) {
  bool neg = false;
  if (lx.peek() == '+' || lx.peek() == '-') neg = lx.get() == '-';
  Poly2 r = parse_term(lx);
  if (neg) r = p2_neg(r);
  while (true) {
    const char c = lx.peek();
    if (c != '+' && c != '-') break;
    lx.get();
    Poly2 t = parse_term(lx);
    r = (c == '+') ? p2_add(r, t) : p2_sub(r, t);
  }
  return r;
}

}  // namespace

Poly2 parse_poly2(const std::string& text) {
  Lexer lx(text);
  Poly2 p = parse_expr(lx);
  lx.skip();
  if (lx.pos != text.size()) lx.fail("trailing input");
  return p;
}

}  // namespace folpi
