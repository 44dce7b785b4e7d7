// Dense univariate polynomials over Z with exact GMP coefficients.
#pragma once

#include "monoquartic/numtheory.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace monoquartic {

/// Coefficient i is the coefficient of x^i. No trailing zeros; the zero polynomial is empty.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> ascending) : c_(std::move(ascending)) { normalize(); }
  IntPoly(std::initializer_list<long> ascending) {
    for (long v : ascending) c_.emplace_back(v);
    normalize();
  }

  /// Coefficients listed from the leading term down, e.g. {1, 2, 0, 2, 1} is x^4+2x^3+2x+1.
  static IntPoly from_descending(std::initializer_list<long> descending) {
    std::vector<Int> c;
    for (long v : descending) c.emplace_back(v);
    std::reverse(c.begin(), c.end());
    return IntPoly(std::move(c));
  }

  static IntPoly monomial(const Int& coeff, std::size_t power) {
    std::vector<Int> c(power + 1, Int(0));
    c[power] = coeff;
    return IntPoly(std::move(c));
  }

  static IntPoly constant(const Int& v) { return IntPoly(std::vector<Int>{v}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Int>& coeffs() const { return c_; }

  Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }

  const Int& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return c_.back();
  }

  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  Int eval(const Int& t) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  IntPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Int> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(d));
  }

  /// p(-x)
  IntPoly negate_variable() const {
    std::vector<Int> c = c_;
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return IntPoly(std::move(c));
  }

  Int content() const {
    Int g = 0;
    for (const auto& v : c_) g = gcd(g, v);
    return g;
  }

  IntPoly operator-() const {
    std::vector<Int> c = c_;
    for (auto& v : c) v = -v;
    return IntPoly(std::move(c));
  }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return IntPoly(std::move(c));
  }

  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(c));
  }

  friend IntPoly operator*(const Int& k, const IntPoly& p) {
    std::vector<Int> c = p.c_;
    for (auto& v : c) v *= k;
    return IntPoly(std::move(c));
  }

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  /// Degree first, then coefficients lexicographically from the constant term up.
  friend bool canonical_less(const IntPoly& a, const IntPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
  }

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Int> c_;
};

inline IntPoly pow(const IntPoly& p, unsigned e) {
  IntPoly out{1};
  for (unsigned i = 0; i < e; ++i) out = out * p;
  return out;
}

/// Exact quotient p / q in Z[x]. Throws std::domain_error if q is zero or does not divide p.
inline IntPoly exact_div(const IntPoly& p, const IntPoly& q) {
  if (q.is_zero()) throw std::domain_error("exact_div: division by the zero polynomial");
  if (p.is_zero()) return {};
  if (p.degree() < q.degree()) throw std::domain_error("exact_div: divisor does not divide dividend");
  std::vector<Int> rem = p.coeffs();
  const int dq = q.degree();
  std::vector<Int> quot(static_cast<std::size_t>(p.degree() - dq + 1), Int(0));
  for (int k = p.degree() - dq; k >= 0; --k) {
    Int& top = rem[static_cast<std::size_t>(k + dq)];
    if (!mpz_divisible_p(top.get_mpz_t(), q.leading().get_mpz_t()))
      throw std::domain_error("exact_div: divisor does not divide dividend");
    Int t;
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), q.leading().get_mpz_t());
    quot[static_cast<std::size_t>(k)] = t;
    for (int j = 0; j <= dq; ++j) rem[static_cast<std::size_t>(k + j)] -= t * q.coeffs()[static_cast<std::size_t>(j)];
  }
  for (const auto& r : rem) {
    if (r != 0) throw std::domain_error("exact_div: divisor does not divide dividend");
  }
  return IntPoly(std::move(quot));
}

/// Exact division of every coefficient by k.
inline IntPoly exact_div(const IntPoly& p, const Int& k) {
  std::vector<Int> c = p.coeffs();
  for (auto& v : c) {
    if (!mpz_divisible_p(v.get_mpz_t(), k.get_mpz_t()))
      throw std::domain_error("exact_div: scalar does not divide every coefficient");
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), k.get_mpz_t());
  }
  return IntPoly(std::move(c));
}

/// lc(b)^(deg a - deg b + 1) * a mod b, computed without fractions.
inline IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("pseudo_remainder: zero divisor");
  IntPoly r = a;
  const int db = b.degree();
  int e = a.degree() - db + 1;
  while (!r.is_zero() && r.degree() >= db) {
    IntPoly t = IntPoly::monomial(r.leading(), static_cast<std::size_t>(r.degree() - db));
    r = b.leading() * r - t * b;
    --e;
  }
  if (e > 0) {
    Int scale;
    mpz_pow_ui(scale.get_mpz_t(), b.leading().get_mpz_t(), static_cast<unsigned long>(e));
    r = scale * r;
  }
  return r;
}

/// Determinant of an integer matrix by fraction-free (Bareiss) elimination.
inline Int bareiss_determinant(std::vector<std::vector<Int>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot][k] == 0) ++pivot;
      if (pivot == n) return 0;
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// Res(a, b) as the determinant of the Sylvester matrix.
inline Int resultant_sylvester(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  const auto m = static_cast<std::size_t>(a.degree());
  const auto n = static_cast<std::size_t>(b.degree());
  const std::size_t size = m + n;
  std::vector<std::vector<Int>> s(size, std::vector<Int>(size, Int(0)));
  for (std::size_t row = 0; row < n; ++row)
    for (std::size_t j = 0; j <= m; ++j) s[row][row + j] = a.coeff(m - j);
  for (std::size_t row = 0; row < m; ++row)
    for (std::size_t j = 0; j <= n; ++j) s[n + row][row + j] = b.coeff(n - j);
  return bareiss_determinant(std::move(s));
}

/// Res(a, b) via the subresultant pseudo-remainder sequence.
inline Int resultant_subresultant(IntPoly a, IntPoly b) {
  if (a.is_zero() || b.is_zero()) return 0;
  const Int ca = a.content();
  const Int cb = b.content();
  a = exact_div(a, ca);
  b = exact_div(b, cb);
  Int t, tb;
  mpz_pow_ui(t.get_mpz_t(), ca.get_mpz_t(), static_cast<unsigned long>(b.degree()));
  mpz_pow_ui(tb.get_mpz_t(), cb.get_mpz_t(), static_cast<unsigned long>(a.degree()));
  t *= tb;

  int s = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -s;
  }
  Int g = 1, h = 1;
  while (b.degree() > 0) {
    const int delta = a.degree() - b.degree();
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -s;
    IntPoly r = pseudo_remainder(a, b);
    a = b;
    Int hd;
    mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
    b = exact_div(r, Int(g * hd));
    g = a.leading();
    if (delta == 0) continue;
    Int gd, hd1;
    mpz_pow_ui(gd.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
    mpz_pow_ui(hd1.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
    mpz_divexact(h.get_mpz_t(), gd.get_mpz_t(), hd1.get_mpz_t());
  }
  if (b.is_zero()) return 0;
  const auto da = static_cast<unsigned long>(a.degree());
  Int num, den;
  mpz_pow_ui(num.get_mpz_t(), b.leading().get_mpz_t(), da);
  mpz_pow_ui(den.get_mpz_t(), h.get_mpz_t(), da - 1);
  Int hf;
  mpz_divexact(hf.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return s * t * hf;
}

/// disc(p) = (-1)^(n(n-1)/2) Res(p, p') / lc(p), so that disc(x^2+1) = -4.
inline Int discriminant(const IntPoly& p) {
  if (p.degree() < 2) throw std::domain_error("discriminant: degree must be at least 2");
  const int n = p.degree();
  Int res = resultant_sylvester(p, p.derivative());
  Int out;
  mpz_divexact(out.get_mpz_t(), res.get_mpz_t(), p.leading().get_mpz_t());
  if ((n * (n - 1) / 2) % 2 == 1) out = -out;
  return out;
}

/// Distinct integer roots of a monic polynomial, ascending. Requires a nonzero constant term.
inline std::vector<Int> rational_roots_monic(const IntPoly& p) {
  if (!p.is_monic()) throw std::domain_error("rational_roots_monic: polynomial is not monic");
  if (p.coeff(0) == 0) throw std::domain_error("rational_roots_monic: zero constant term");
  std::vector<Int> roots;
  for (const Int& d : numtheory::positive_divisors(p.coeff(0))) {
    if (p.eval(-d) == 0) roots.push_back(-d);
    if (p.eval(d) == 0) roots.push_back(d);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

struct IrreducibilityVerdict {
  enum class Kind { Irreducible, LinearFactor, QuadraticSplit };

  Kind kind = Kind::Irreducible;
  Int root;           // LinearFactor
  IntPoly first;      // QuadraticSplit, canonically ordered
  IntPoly second;

  bool irreducible() const { return kind == Kind::Irreducible; }

  static IrreducibilityVerdict linear(Int r) {
    IrreducibilityVerdict v;
    v.kind = Kind::LinearFactor;
    v.root = std::move(r);
    return v;
  }

  static IrreducibilityVerdict split(IntPoly q1, IntPoly q2) {
    IrreducibilityVerdict v;
    v.kind = Kind::QuadraticSplit;
    if (canonical_less(q2, q1)) std::swap(q1, q2);
    v.first = std::move(q1);
    v.second = std::move(q2);
    return v;
  }
};

namespace detail {

// (x^2 + a x + b)(x^2 + c x + d) = x^4 + s x^3 + u x^2 + t x + e with bd = e fixed.
inline std::optional<std::pair<IntPoly, IntPoly>> quadratic_pair(const Int& b, const Int& d, const Int& s,
                                                                 const Int& u, const Int& t) {
  Int a, c;
  if (b == d) {
    if (t != b * s) return std::nullopt;
    const Int disc = s * s - 4 * (u - 2 * b);
    if (!numtheory::is_perfect_square(disc)) return std::nullopt;
    const Int r = numtheory::isqrt(disc);
    if (!mpz_even_p(Int(s + r).get_mpz_t())) return std::nullopt;
    a = (s + r) / 2;
    c = s - a;
  } else {
    const Int num = t - b * s;
    const Int den = d - b;
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) return std::nullopt;
    a = num / den;
    c = s - a;
    if (b + d + a * c != u) return std::nullopt;
  }
  return std::make_pair(IntPoly(std::vector<Int>{b, a, 1}), IntPoly(std::vector<Int>{d, c, 1}));
}

}  // namespace detail

/// Decides irreducibility over Q of a monic integer quartic with nonzero constant term.
/// Linear factors are checked first, then every factorization into two monic integer quadratics.
inline IrreducibilityVerdict quartic_irreducible(const IntPoly& p) {
  if (p.degree() != 4 || !p.is_monic()) throw std::domain_error("quartic_irreducible: expected a monic quartic");
  if (p.coeff(0) == 0) throw std::domain_error("quartic_irreducible: zero constant term");
  const auto roots = rational_roots_monic(p);
  if (!roots.empty()) return IrreducibilityVerdict::linear(roots.front());

  const Int& e = p.coeff(0);
  for (const Int& pos : numtheory::positive_divisors(e)) {
    for (const Int& b : {Int(-pos), pos}) {
      const Int d = e / b;
      if (auto pair = detail::quadratic_pair(b, d, p.coeff(3), p.coeff(2), p.coeff(1))) {
        if (pair->first * pair->second != p) throw std::logic_error("quartic_irreducible: inconsistent split");
        return IrreducibilityVerdict::split(std::move(pair->first), std::move(pair->second));
      }
    }
  }
  return {};
}

/// Renders e.g. "x^4 + 2*x^3 + 2*x + 1": descending powers, zero terms and unit coefficients omitted.
inline std::string to_string(const IntPoly& p, char var = 'x') {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const Int& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const bool negative = sgn(c) < 0;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const Int mag = abs(c);
    if (i == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

/// Parses the grammar produced by to_string (whitespace-insensitive; '*' optional).
inline IntPoly parse_poly(std::string_view text, char var = 'x') {
  std::string s;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch)) == 0) s += ch;
  }
  if (s.empty()) throw std::invalid_argument("parse_poly: empty input");
  std::vector<Int> c;
  auto add = [&c](std::size_t power, const Int& v) {
    if (c.size() <= power) c.resize(power + 1, Int(0));
    c[power] += v;
  };
  auto fail = [&text]() { throw std::invalid_argument("parse_poly: malformed polynomial '" + std::string(text) + "'"); };

  std::size_t i = 0;
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      fail();
    }
    first = false;
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])) != 0) ++i;
    const bool has_coeff = i > start;
    Int coeff = has_coeff ? Int(s.substr(start, i - start)) : Int(1);
    if (i < s.size() && s[i] == '*') {
      if (!has_coeff) fail();
      ++i;
      if (i >= s.size() || s[i] != var) fail();
    }
    std::size_t power = 0;
    if (i < s.size() && s[i] == var) {
      ++i;
      power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])) != 0) ++i;
        if (i == start) fail();
        power = std::stoul(s.substr(start, i - start));
      }
    } else if (!has_coeff) {
      fail();
    }
    add(power, sign * coeff);
  }
  return IntPoly(std::move(c));
}

}  // namespace monoquartic
