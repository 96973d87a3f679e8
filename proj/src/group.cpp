#include "symtft/group.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cassert>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace symtft {

int FiniteGroup::exponent() const {
  int e = 1;
  for (int o : elem_order) e = (int)lcm_ll(e, o);
  return e;
}

std::vector<int> FiniteGroup::centralizer(int g) const {
  std::vector<int> c;
  for (int x = 0; x < n; ++x)
    if (mul[x][g] == mul[g][x]) c.push_back(x);
  return c;
}

bool FiniteGroup::is_abelian() const {
  for (int g = 0; g < n; ++g)
    for (int h = g + 1; h < n; ++h)
      if (mul[g][h] != mul[h][g]) return false;
  return true;
}

int FiniteGroup::element_by_name(const std::string& s) const {
  for (int i = 0; i < n; ++i)
    if (elem_name[i] == s) return i;
  throw std::runtime_error("no element named '" + s + "' in " + name);
}

void FiniteGroup::finalize() {
  if ((int)mul.size() != n) throw std::runtime_error("bad multiplication table size");
  for (auto& row : mul)
    if ((int)row.size() != n) throw std::runtime_error("bad multiplication table row");
  for (int g = 0; g < n; ++g) {
    if (mul[0][g] != g || mul[g][0] != g) throw std::runtime_error("identity must sit at index 0");
  }
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int k = 0; k < n; ++k)
        if (mul[mul[g][h]][k] != mul[g][mul[h][k]]) throw std::runtime_error("non-associative table");
  inv.assign(n, -1);
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h)
      if (mul[g][h] == 0) {
        inv[g] = h;
        break;
      }
    if (inv[g] < 0) throw std::runtime_error("missing inverse");
  }
  elem_order.assign(n, 1);
  for (int g = 0; g < n; ++g) {
    int x = g, o = 1;
    while (x != 0) {
      x = mul[x][g];
      ++o;
    }
    elem_order[g] = o;
  }
  class_of.assign(n, -1);
  classes.clear();
  for (int g = 0; g < n; ++g) {
    if (class_of[g] >= 0) continue;
    std::vector<int> cl;
    for (int x = 0; x < n; ++x) {
      int c = conj(g, x);
      if (class_of[c] < 0) {
        class_of[c] = (int)classes.size();
        cl.push_back(c);
      }
    }
    std::sort(cl.begin(), cl.end());
    classes.push_back(cl);
  }
  if (elem_name.empty()) {
    elem_name.resize(n);
    for (int g = 0; g < n; ++g) elem_name[g] = "g" + std::to_string(g);
    elem_name[0] = "1";
  }
  class_name.resize(classes.size());
  for (size_t c = 0; c < classes.size(); ++c) class_name[c] = "[" + elem_name[classes[c][0]] + "]";
}

FiniteGroup cyclic_group(int n) {
  FiniteGroup g;
  g.n = n;
  g.name = "Z" + std::to_string(n);
  g.mul.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.mul[i][j] = (i + j) % n;
  g.generators = {1 % n};
  g.elem_name.resize(n);
  for (int i = 0; i < n; ++i) {
    if (i == 0)
      g.elem_name[i] = "1";
    else if (i == 1)
      g.elem_name[i] = "a";
    else
      g.elem_name[i] = "a" + std::to_string(i);
  }
  g.finalize();
  return g;
}

FiniteGroup z2k_group(int k) {
  FiniteGroup g;
  g.n = 1 << k;
  g.name = k == 1 ? "Z2" : "Z2^" + std::to_string(k);
  if (k == 2) g.name = "Z2xZ2";
  g.mul.assign(g.n, std::vector<int>(g.n));
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) g.mul[i][j] = i ^ j;
  for (int b = 0; b < k; ++b) g.generators.push_back(1 << b);
  g.elem_name.resize(g.n);
  const char* letters = "abcd";
  for (int i = 0; i < g.n; ++i) {
    std::string s;
    for (int b = 0; b < k; ++b)
      if (i & (1 << b)) s += letters[b];
    g.elem_name[i] = s.empty() ? "1" : s;
  }
  g.finalize();
  return g;
}

FiniteGroup s3_group() {
  // element a^i b^j at index i + 3j, with bab = a^2
  FiniteGroup g;
  g.n = 6;
  g.name = "S3";
  g.mul.assign(6, std::vector<int>(6));
  auto idx = [](int i, int j) { return (i % 3 + 3) % 3 + 3 * ((j % 2 + 2) % 2); };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 2; ++l) {
          int ii = j == 0 ? i + k : i - k;
          g.mul[idx(i, j)][idx(k, l)] = idx(ii, j + l);
        }
  g.generators = {1, 3};
  g.elem_name = {"1", "a", "a2", "b", "ab", "a2b"};
  g.finalize();
  return g;
}

FiniteGroup d8_group() {
  // element c^x a^y b^z at index 4x + 2y + z, with c a c = b
  FiniteGroup g;
  g.n = 8;
  g.name = "D8";
  g.mul.assign(8, std::vector<int>(8));
  for (int x1 = 0; x1 < 2; ++x1)
    for (int y1 = 0; y1 < 2; ++y1)
      for (int z1 = 0; z1 < 2; ++z1)
        for (int x2 = 0; x2 < 2; ++x2)
          for (int y2 = 0; y2 < 2; ++y2)
            for (int z2 = 0; z2 < 2; ++z2) {
              int yy = x2 ? z1 : y1, zz = x2 ? y1 : z1;
              int i = 4 * x1 + 2 * y1 + z1, j = 4 * x2 + 2 * y2 + z2;
              g.mul[i][j] = 4 * ((x1 + x2) % 2) + 2 * ((yy + y2) % 2) + ((zz + z2) % 2);
            }
  g.generators = {2, 1, 4};
  g.elem_name = {"1", "b", "a", "ab", "c", "cb", "ca", "cab"};
  g.finalize();
  return g;
}

FiniteGroup product_group(const FiniteGroup& a, const FiniteGroup& b) {
  FiniteGroup g;
  g.n = a.n * b.n;
  g.name = a.name + "x" + b.name;
  g.mul.assign(g.n, std::vector<int>(g.n));
  auto idx = [&](int i, int j) { return i * b.n + j; };
  for (int i1 = 0; i1 < a.n; ++i1)
    for (int j1 = 0; j1 < b.n; ++j1)
      for (int i2 = 0; i2 < a.n; ++i2)
        for (int j2 = 0; j2 < b.n; ++j2)
          g.mul[idx(i1, j1)][idx(i2, j2)] = idx(a.mul[i1][i2], b.mul[j1][j2]);
  for (int x : a.generators) g.generators.push_back(idx(x, 0));
  for (int y : b.generators) g.generators.push_back(idx(0, y));
  g.elem_name.resize(g.n);
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < b.n; ++j) g.elem_name[idx(i, j)] = "(" + a.elem_name[i] + "," + b.elem_name[j] + ")";
  g.finalize();
  return g;
}

FiniteGroup group_from_table(std::vector<std::vector<int>> mul, std::string name) {
  FiniteGroup g;
  g.n = (int)mul.size();
  g.name = std::move(name);
  g.mul = std::move(mul);
  for (int i = 1; i < g.n; ++i) g.generators.push_back(i);
  g.finalize();
  return g;
}

FiniteGroup build_group(const std::string& spec) {
  auto pos = spec.find('x');
  if (spec == "Z2xZ2") return z2k_group(2);
  if (pos != std::string::npos && spec != "Z2xZ2") {
    return product_group(build_group(spec.substr(0, pos)), build_group(spec.substr(pos + 1)));
  }
  if (spec == "S3") return s3_group();
  if (spec == "D8") return d8_group();
  if (spec.rfind("Z2^", 0) == 0) return z2k_group(std::stoi(spec.substr(3)));
  if (spec.size() > 1 && spec[0] == 'Z') return cyclic_group(std::stoi(spec.substr(1)));
  throw std::runtime_error("unknown group spec: " + spec);
}

std::vector<int> closure(const FiniteGroup& parent, std::vector<int> gens) {
  std::set<int> s{0};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(s.begin(), s.end());
    for (int x : cur)
      for (int h : gens) {
        int y = parent.mul[x][h];
        if (s.insert(y).second) grew = true;
      }
  }
  return {s.begin(), s.end()};
}

Subgroup make_subgroup(const FiniteGroup& parent, std::vector<int> elems, std::string name) {
  std::sort(elems.begin(), elems.end());
  if (elems.empty() || elems[0] != 0) throw std::runtime_error("subgroup must contain the identity");
  Subgroup s;
  s.to_parent = elems;
  for (size_t i = 0; i < elems.size(); ++i) s.from_parent[elems[i]] = (int)i;
  FiniteGroup g;
  g.n = (int)elems.size();
  g.name = std::move(name);
  g.mul.assign(g.n, std::vector<int>(g.n));
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) {
      int p = parent.mul[elems[i]][elems[j]];
      auto it = s.from_parent.find(p);
      if (it == s.from_parent.end()) throw std::runtime_error("element set not closed under multiplication");
      g.mul[i][j] = it->second;
    }
  g.elem_name.resize(g.n);
  for (int i = 0; i < g.n; ++i) g.elem_name[i] = parent.elem_name[elems[i]];
  for (int i = 1; i < g.n; ++i) g.generators.push_back(i);
  g.finalize();
  s.grp = std::move(g);
  return s;
}

// ---------------------------------------------------------------------------
// character tables

namespace {

std::vector<Irrep> burnside_table(const FiniteGroup& g) {
  const int k = (int)g.classes.size();
  // class-algebra structure constants a[i][j][l]
  std::vector<std::vector<std::vector<long long>>> a(
      k, std::vector<std::vector<long long>>(k, std::vector<long long>(k, 0)));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      std::vector<long long> cnt(g.n, 0);
      for (int x : g.classes[i])
        for (int y : g.classes[j]) cnt[g.mul[x][y]]++;
      for (int l = 0; l < k; ++l) a[i][j][l] = cnt[g.classes[l][0]];
    }
  // M_i with rows j, cols l; v_l = omega(l) is a joint eigenvector.
  std::vector<Eigen::MatrixXcd> M(k, Eigen::MatrixXcd::Zero(k, k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int l = 0; l < k; ++l) M[i](j, l) = (double)a[i][j][l];

  Eigen::MatrixXcd v(k, k);  // columns = central character vectors
  bool ok = false;
  for (int attempt = 0; attempt < 8 && !ok; ++attempt) {
    Eigen::MatrixXcd mix = Eigen::MatrixXcd::Zero(k, k);
    for (int i = 0; i < k; ++i) mix += std::sqrt(2.0 + i + 3 * attempt) * M[i];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(mix);
    v = es.eigenvectors();
    ok = true;
    for (int c = 0; c < k && ok; ++c)
      for (int c2 = c + 1; c2 < k && ok; ++c2)
        if (std::abs(es.eigenvalues()(c) - es.eigenvalues()(c2)) < 1e-7) ok = false;
  }
  if (!ok) throw std::runtime_error("character table: degenerate class-sum spectrum");

  std::vector<Irrep> out;
  for (int c = 0; c < k; ++c) {
    Eigen::VectorXcd col = v.col(c);
    if (std::abs(col(0)) < 1e-12) throw std::runtime_error("character table: vanishing identity component");
    col /= col(0);
    std::vector<cplx> omega(k);
    for (int i = 0; i < k; ++i) {
      // row 0 of M_i picks out the eigenvalue since K_0 is the identity class
      cplx num = 0;
      for (int l = 0; l < k; ++l) num += M[i](0, l) * col(l);
      omega[i] = num;
    }
    double s = 0;
    for (int i = 0; i < k; ++i) s += std::norm(omega[i]) / double(g.classes[i].size());
    double d = std::sqrt(double(g.n) / s);
    Irrep r;
    r.dim = (int)std::llround(d);
    if (!approx(d, (double)r.dim, 1e-6)) throw std::runtime_error("character table: non-integer dimension");
    r.chars.resize(k);
    for (int i = 0; i < k; ++i) {
      cplx chi = double(r.dim) * omega[i] / double(g.classes[i].size());
      long long mo = g.elem_order[g.classes[i][0]];
      auto snapped = snap_cyc(chi, r.dim, mo, 1e-6);
      if (!snapped) throw std::runtime_error("character table: failed to snap character value");
      r.chars[i] = *snapped;
    }
    out.push_back(std::move(r));
  }
  return out;
}

void sort_and_label(const FiniteGroup& g, std::vector<Irrep>& irreps) {
  auto key = [&](const Irrep& r) {
    std::vector<double> k;
    k.push_back(r.dim);
    for (const auto& c : r.chars) {
      cplx z = c.value();
      k.push_back(std::round(z.real() * 1e6) / 1e6);
      k.push_back(std::round(z.imag() * 1e6) / 1e6);
    }
    return k;
  };
  std::sort(irreps.begin(), irreps.end(), [&](const Irrep& a, const Irrep& b) {
    auto ka = key(a), kb = key(b);
    for (size_t i = 0; i < ka.size(); ++i) {
      // trivial rep first; otherwise descending real part for stable, readable order
      if (!approx(ka[i], kb[i], 1e-6)) return i == 0 ? ka[i] < kb[i] : ka[i] > kb[i];
    }
    return false;
  });
  for (size_t i = 0; i < irreps.size(); ++i) irreps[i].label = "r" + std::to_string(i);
  irreps[0].label = "1";
  if (g.name == "S3") {
    for (auto& r : irreps) {
      if (r.dim == 2) r.label = "E";
      if (r.dim == 1 && !approx(r.chars[g.class_of[3]].value(), cplx(1))) r.label = "P";
    }
  } else if (g.name == "D8") {
    for (auto& r : irreps) {
      if (r.dim == 2) {
        r.label = "E";
        continue;
      }
      auto val = [&](int e) { return r.chars[g.class_of[e]].value().real(); };
      // elements: a=2, c=4, ca=6
      if (val(2) > 0 && val(4) > 0 && val(6) > 0) r.label = "1";
      if (val(2) > 0 && val(4) < 0) r.label = "1a";
      if (val(2) < 0 && val(4) > 0) r.label = "1c";
      if (val(2) < 0 && val(4) < 0) r.label = "1ca";
    }
  } else if (g.is_abelian()) {
    // label by character on generators, e.g. u(+-), for readability in Z2^k
    for (auto& r : irreps) {
      if (&r == &irreps[0]) continue;
      std::string s = "u";
      for (int gen : g.generators) {
        cplx z = r.chars[g.class_of[gen]].value();
        s += approx(z, cplx(1)) ? '+' : (approx(z, cplx(-1)) ? '-' : '*');
      }
      r.label = s;
    }
  }
}

}  // namespace

std::vector<Irrep> character_table(const FiniteGroup& g) {
  auto irreps = burnside_table(g);
  sort_and_label(g, irreps);
  long long dimsum = 0;
  for (const auto& r : irreps) dimsum += (long long)r.dim * r.dim;
  if (dimsum != g.n) throw std::runtime_error("character table: dimension sum mismatch");
  return irreps;
}

int tensor_multiplicity(const FiniteGroup& g, const std::vector<Irrep>& irreps, int a, int b, int c) {
  cplx s = 0;
  for (int e = 0; e < g.n; ++e) {
    int cl = g.class_of[e];
    s += irreps[a].chars[cl].value() * irreps[b].chars[cl].value() * std::conj(irreps[c].chars[cl].value());
  }
  s /= double(g.n);
  long long m = std::llround(s.real());
  if (!approx(s, cplx((double)m), 1e-6)) throw std::runtime_error("tensor multiplicity not an integer");
  return (int)m;
}

int conjugate_irrep(const FiniteGroup& g, const std::vector<Irrep>& irreps, int a) {
  for (int b = 0; b < (int)irreps.size(); ++b) {
    bool match = true;
    for (size_t c = 0; c < g.classes.size() && match; ++c)
      if (!approx(irreps[b].chars[c].value(), std::conj(irreps[a].chars[c].value()))) match = false;
    if (match) return b;
  }
  throw std::runtime_error("conjugate irrep not found");
}

int restriction_multiplicity(const FiniteGroup& g, const std::vector<Irrep>& irreps, int a,
                             const Subgroup& sub, const std::vector<Root>& chi_sub) {
  cplx s = 0;
  for (int i = 0; i < sub.grp.n; ++i) {
    s += irreps[a].chars[g.class_of[sub.to_parent[i]]].value() * std::conj(chi_sub[i].value());
  }
  s /= double(sub.grp.n);
  long long m = std::llround(s.real());
  if (!approx(s, cplx((double)m), 1e-6)) throw std::runtime_error("restriction multiplicity not an integer");
  return (int)m;
}

// ---------------------------------------------------------------------------
// representation matrices

namespace {

bool catalog_matrices(const FiniteGroup& g, Irrep& r) {
  const int k = (int)g.classes.size();
  auto chi = [&](int e) { return r.chars[g.class_of[e]].value(); };
  if (r.dim == 1) {
    r.mats.resize(g.n);
    for (int e = 0; e < g.n; ++e) {
      r.mats[e] = Eigen::MatrixXcd::Constant(1, 1, chi(e));
    }
    return true;
  }
  (void)k;
  if (g.name == "S3" && r.dim == 2) {
    // D(a) = diag(w, conj w), D(b) = [[0,1],[1,0]]
    cplx w = Root(3, 1).value();
    Eigen::MatrixXcd Da(2, 2), Db(2, 2);
    Da << w, 0, 0, std::conj(w);
    Db << 0, 1, 1, 0;
    r.mats.assign(g.n, Eigen::MatrixXcd::Identity(2, 2));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 2; ++j) {
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(2, 2);
        for (int t = 0; t < i; ++t) m = Da * m;
        if (j) m = m * Db;
        r.mats[i + 3 * j] = m;
      }
    return true;
  }
  if (g.name == "D8" && r.dim == 2) {
    // a -> diag(-1,1), b -> diag(1,-1), c -> swap
    Eigen::MatrixXcd Da(2, 2), Db(2, 2), Dc(2, 2);
    Da << -1, 0, 0, 1;
    Db << 1, 0, 0, -1;
    Dc << 0, 1, 1, 0;
    r.mats.resize(g.n);
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y)
        for (int z = 0; z < 2; ++z) {
          Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(2, 2);
          if (x) m = m * Dc;
          if (y) m = m * Da;
          if (z) m = m * Db;
          r.mats[4 * x + 2 * y + z] = m;
        }
    return true;
  }
  return false;
}

void numeric_matrices(const FiniteGroup& g, Irrep& r) {
  const int n = g.n, d = r.dim;
  // left regular representation
  std::vector<Eigen::MatrixXcd> L(n, Eigen::MatrixXcd::Zero(n, n));
  for (int a = 0; a < n; ++a)
    for (int h = 0; h < n; ++h) L[a](g.mul[a][h], h) = 1.0;
  Eigen::MatrixXcd P = Eigen::MatrixXcd::Zero(n, n);
  for (int a = 0; a < n; ++a) P += std::conj(r.chars[g.class_of[a]].value()) * L[a];
  P *= double(d) / double(n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(P);
  Eigen::MatrixXcd B(n, d * d);
  int col = 0;
  for (int i = 0; i < n; ++i)
    if (es.eigenvalues()(i) > 0.5) {
      if (col >= d * d) throw std::runtime_error("isotypic projector rank too large");
      B.col(col++) = es.eigenvectors().col(i);
    }
  if (col != d * d) throw std::runtime_error("isotypic projector rank mismatch");
  // generic hermitian element of the commutant (right multiplications)
  for (int attempt = 0; attempt < 5; ++attempt) {
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(n, n);
    for (int h = 0; h < n; ++h) {
      double c = std::cos(1.7 * (h + 1) * (attempt + 1)) + 1.3;
      for (int x = 0; x < n; ++x) A(g.mul[x][h], x) += c;
    }
    Eigen::MatrixXcd H = B.adjoint() * (A + A.adjoint()) * B * 0.5;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eh(H);
    // find a cluster of exactly d eigenvalues
    std::vector<double> ev(eh.eigenvalues().data(), eh.eigenvalues().data() + d * d);
    int lo = 0;
    while (lo < d * d) {
      int hi = lo;
      while (hi + 1 < d * d && ev[hi + 1] - ev[hi] < 1e-7) ++hi;
      if (hi - lo + 1 == d) {
        Eigen::MatrixXcd B1 = B * eh.eigenvectors().block(0, lo, d * d, d);
        r.mats.resize(n);
        bool good = true;
        for (int e = 0; e < n && good; ++e) {
          r.mats[e] = B1.adjoint() * L[e] * B1;
          if (!approx((r.mats[e] * r.mats[e].adjoint() - Eigen::MatrixXcd::Identity(d, d)).norm(), 0.0, 1e-7))
            good = false;
          if (!approx(r.mats[e].trace(), r.chars[g.class_of[e]].value(), 1e-7)) good = false;
        }
        if (good) return;
      }
      lo = hi + 1;
    }
  }
  throw std::runtime_error("failed to extract representation matrices");
}

}  // namespace

void ensure_irrep_matrices(const FiniteGroup& g, std::vector<Irrep>& irreps) {
  for (auto& r : irreps) {
    if (!r.mats.empty()) continue;
    if (!catalog_matrices(g, r)) numeric_matrices(g, r);
    for (int a = 0; a < g.n; ++a)
      for (int b = 0; b < g.n; ++b)
        if (!approx((r.mats[g.mul[a][b]] - r.mats[a] * r.mats[b]).norm(), 0.0, 1e-7))
          throw std::runtime_error("representation matrices violate group law");
  }
}

}  // namespace symtft
