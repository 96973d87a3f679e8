#include "symtft/num.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace symtft {

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }
long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

Root::Root(long long o, long long e) {
  ord = o;
  exp = ((e % o) + o) % o;
  long long g = std::gcd(ord, exp == 0 ? ord : exp);
  if (exp == 0) {
    ord = 1;
  } else if (g > 1) {
    ord /= g;
    exp /= g;
  }
}

Root Root::operator*(const Root& o) const {
  long long l = lcm_ll(ord, o.ord);
  return Root(l, exp * (l / ord) + o.exp * (l / o.ord));
}

Root Root::operator/(const Root& o) const { return *this * o.conj(); }

Root Root::conj() const { return Root(ord, -exp); }

Root Root::pow(long long k) const {
  long long e = ((k % ord) + ord) % ord;
  return Root(ord, exp * e);
}

Root Root::sqrt() const { return Root(2 * ord, exp); }

bool Root::operator<(const Root& o) const {
  if (ord != o.ord) return ord < o.ord;
  return exp < o.exp;
}

cplx Root::value() const {
  if (ord == 1) return {1.0, 0.0};
  if (ord == 2) return {-1.0, 0.0};
  double t = 2.0 * M_PI * double(exp) / double(ord);
  return {std::cos(t), std::sin(t)};
}

std::string Root::str() const {
  if (ord == 1) return "1";
  if (ord == 2) return "-1";
  if (ord == 4) return exp == 1 ? "i" : "-i";
  std::ostringstream os;
  os << "z" << ord;
  if (exp != 1) os << "^" << exp;
  return os.str();
}

std::optional<Root> snap_root(cplx z, long long max_ord, double tol) {
  if (!approx(std::abs(z), 1.0, tol)) return std::nullopt;
  double ang = std::arg(z) / (2.0 * M_PI);
  for (long long n = 1; n <= max_ord; ++n) {
    double k = ang * double(n);
    double kr = std::round(k);
    if (std::abs(k - kr) < tol * double(n)) {
      Root r(n, (long long)kr);
      if (approx(r.value(), z, tol)) return r;
    }
  }
  return std::nullopt;
}

CycSum CycSum::integer(long long k) {
  CycSum s;
  for (long long i = 0; i < std::llabs(k); ++i) s.terms.push_back(k > 0 ? Root::one() : Root::minus_one());
  return s;
}

cplx CycSum::value() const {
  cplx v = 0;
  for (const auto& t : terms) v += t.value();
  return v;
}

CycSum CycSum::conj() const {
  CycSum s;
  for (const auto& t : terms) s.terms.push_back(t.conj());
  return s;
}

CycSum CycSum::operator*(const CycSum& o) const {
  CycSum s;
  for (const auto& x : terms)
    for (const auto& y : o.terms) s.terms.push_back(x * y);
  return s;
}

CycSum CycSum::operator+(const CycSum& o) const {
  CycSum s = *this;
  s.terms.insert(s.terms.end(), o.terms.begin(), o.terms.end());
  return s;
}

std::string CycSum::str() const {
  cplx v = value();
  double re = v.real(), im = v.imag();
  std::ostringstream os;
  if (approx(im, 0.0)) {
    if (approx(re, std::round(re))) {
      os << (long long)std::llround(re);
      return os.str();
    }
  }
  os << re;
  if (!approx(im, 0.0)) os << (im < 0 ? "-" : "+") << std::abs(im) << "i";
  return os.str();
}

std::optional<CycSum> snap_cyc(cplx z, int n, long long max_ord, double tol) {
  // Depth-first search over multisets of n roots with order dividing max_ord.
  std::vector<Root> roots;
  for (long long k = 0; k < max_ord; ++k) roots.emplace_back(max_ord, k);
  std::vector<Root> cur;
  std::optional<CycSum> out;
  auto rec = [&](auto&& self, int start, int left, cplx acc) -> bool {
    if (left == 0) {
      if (approx(acc, z, tol)) {
        CycSum s;
        s.terms = cur;
        out = s;
        return true;
      }
      return false;
    }
    for (int i = start; i < (int)roots.size(); ++i) {
      // Remaining terms can move acc by at most `left` in modulus.
      if (std::abs(acc + roots[i].value() - z) > double(left - 1) + tol) {
        if (left == 1) continue;
      }
      cur.push_back(roots[i]);
      if (self(self, i, left - 1, acc + roots[i].value())) return true;
      cur.pop_back();
    }
    return false;
  };
  rec(rec, 0, n, cplx(0));
  return out;
}

bool QDim::operator<(const QDim& o) const {
  long long da = a - o.a;
  long long db = o.b - b;
  // compare da < db*sqrt(2) exactly
  if (db == 0) return da < 0;
  if (db > 0) {
    if (da <= 0) return da < 0 || db > 0;
    return da * da < 2 * db * db;
  }
  if (da >= 0) return false;
  return da * da > 2 * db * db;
}

double QDim::value() const { return double(a) + double(b) * std::sqrt(2.0); }

std::string QDim::str() const {
  std::ostringstream os;
  if (b == 0) {
    os << a;
  } else if (a == 0) {
    if (b != 1) os << b;
    os << "sqrt2";
  } else {
    os << a << "+" << b << "sqrt2";
  }
  return os.str();
}

}  // namespace symtft
