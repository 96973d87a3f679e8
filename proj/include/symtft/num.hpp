#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace symtft {

using cplx = std::complex<double>;

inline constexpr double kTol = 1e-9;

inline bool approx(cplx a, cplx b, double tol = kTol) { return std::abs(a - b) <= tol; }
inline bool approx(double a, double b, double tol = kTol) { return std::abs(a - b) <= tol; }

// Exact root of unity e^{2*pi*i*exp/ord}, stored in lowest terms with 0 <= exp < ord.
struct Root {
  long long ord = 1;
  long long exp = 0;

  Root() = default;
  Root(long long o, long long e);

  static Root one() { return Root(1, 0); }
  static Root minus_one() { return Root(2, 1); }

  Root operator*(const Root& o) const;
  Root operator/(const Root& o) const;
  Root conj() const;
  Root pow(long long k) const;
  // One of the two square roots; the other is sqrt()*Root::minus_one().
  Root sqrt() const;

  bool operator==(const Root& o) const { return ord == o.ord && exp == o.exp; }
  bool operator!=(const Root& o) const { return !(*this == o); }
  bool operator<(const Root& o) const;
  bool is_one() const { return exp == 0; }
  bool is_real() const { return ord <= 2; }

  cplx value() const;
  std::string str() const;
};

// Nearest root of unity of order dividing max_ord, if within tol.
std::optional<Root> snap_root(cplx z, long long max_ord, double tol = 1e-6);

// A small sum of roots of unity (cyclotomic integer), e.g. a character value.
struct CycSum {
  std::vector<Root> terms;  // unordered multiset

  CycSum() = default;
  explicit CycSum(Root r) : terms{r} {}
  static CycSum integer(long long k);

  cplx value() const;
  CycSum conj() const;
  CycSum operator*(const CycSum& o) const;
  CycSum operator+(const CycSum& o) const;
  bool is_zero(double tol = kTol) const { return approx(value(), cplx(0), tol); }
  bool equals(const CycSum& o, double tol = kTol) const { return approx(value(), o.value(), tol); }
  std::string str() const;
};

// Snap a complex number to a sum of exactly n roots of unity with order dividing max_ord.
std::optional<CycSum> snap_cyc(cplx z, int n, long long max_ord, double tol = 1e-6);

// Element a + b*sqrt(2) of Z[sqrt(2)]; exact quantum-dimension arithmetic.
struct QDim {
  long long a = 0;
  long long b = 0;

  QDim() = default;
  QDim(long long a_, long long b_ = 0) : a(a_), b(b_) {}

  QDim operator+(const QDim& o) const { return {a + o.a, b + o.b}; }
  QDim operator-(const QDim& o) const { return {a - o.a, b - o.b}; }
  QDim operator*(const QDim& o) const { return {a * o.a + 2 * b * o.b, a * o.b + b * o.a}; }
  QDim operator*(long long k) const { return {a * k, b * k}; }
  bool operator==(const QDim& o) const { return a == o.a && b == o.b; }
  bool operator!=(const QDim& o) const { return !(*this == o); }
  // Exact order on a + b*sqrt(2).
  bool operator<(const QDim& o) const;
  bool operator<=(const QDim& o) const { return *this < o || *this == o; }

  bool is_integer() const { return b == 0; }
  double value() const;
  std::string str() const;
};

long long gcd_ll(long long a, long long b);
long long lcm_ll(long long a, long long b);

}  // namespace symtft
