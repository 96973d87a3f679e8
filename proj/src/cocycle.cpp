#include "symtft/cocycle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace symtft {

namespace {

// Gaussian elimination over GF(p): returns a basis of the kernel of A (rows=eqs).
std::vector<std::vector<int>> kernel_gfp(std::vector<std::vector<int>> A, int nvars, int p) {
  auto inv_mod = [&](int a) {
    int r = 1, b = ((a % p) + p) % p;
    for (int e = p - 2; e > 0; e >>= 1) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
    }
    return r;
  };
  int rank = 0;
  std::vector<int> pivot_col;
  for (int c = 0; c < nvars && rank < (int)A.size(); ++c) {
    int sel = -1;
    for (int r = rank; r < (int)A.size(); ++r)
      if (A[r][c] % p != 0) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    std::swap(A[rank], A[sel]);
    int iv = inv_mod(A[rank][c]);
    for (int j = 0; j < nvars; ++j) A[rank][j] = A[rank][j] * iv % p;
    for (int r = 0; r < (int)A.size(); ++r) {
      if (r == rank || A[r][c] % p == 0) continue;
      int f = A[r][c] % p;
      for (int j = 0; j < nvars; ++j) A[r][j] = ((A[r][j] - f * A[rank][j]) % p + p) % p;
    }
    pivot_col.push_back(c);
    ++rank;
  }
  std::vector<bool> is_pivot(nvars, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<int>> basis;
  for (int c = 0; c < nvars; ++c) {
    if (is_pivot[c]) continue;
    std::vector<int> v(nvars, 0);
    v[c] = 1;
    for (int r = 0; r < rank; ++r) v[pivot_col[r]] = ((-A[r][c]) % p + p) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

// Does `target` lie in the GF(p)-span of `gens`?
bool in_span_gfp(const std::vector<std::vector<int>>& gens, std::vector<int> target, int p) {
  int nvars = (int)target.size();
  std::vector<std::vector<int>> A;
  for (auto& g : gens) A.push_back(g);
  // row-reduce gens and target together
  std::vector<std::vector<int>> rows = A;
  auto inv_mod = [&](int a) {
    int r = 1, b = ((a % p) + p) % p;
    for (int e = p - 2; e > 0; e >>= 1) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
    }
    return r;
  };
  int rank = 0;
  for (int c = 0; c < nvars && rank < (int)rows.size(); ++c) {
    int sel = -1;
    for (int r = rank; r < (int)rows.size(); ++r)
      if (rows[r][c] % p != 0) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    std::swap(rows[rank], rows[sel]);
    int iv = inv_mod(rows[rank][c]);
    for (int j = 0; j < nvars; ++j) rows[rank][j] = rows[rank][j] * iv % p;
    for (int r = 0; r < (int)rows.size(); ++r) {
      if (r == rank || rows[r][c] % p == 0) continue;
      int f = rows[r][c] % p;
      for (int j = 0; j < nvars; ++j) rows[r][j] = ((rows[r][j] - f * rows[rank][j]) % p + p) % p;
    }
    if (target[c] % p != 0) {
      int f = target[c] % p;
      for (int j = 0; j < nvars; ++j) target[j] = ((target[j] - f * rows[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  for (int j = 0; j < nvars; ++j)
    if (target[j] % p != 0) return false;
  return true;
}

// All classes of exponent-p cocycles, as GF(p)-exponent vectors over (g,h) pairs.
std::vector<std::vector<int>> h2_classes_gfp(const FiniteGroup& g, int p) {
  const int n = g.n;
  const int nv = n * n;
  auto vid = [&](int a, int b) { return a * n + b; };
  std::vector<std::vector<int>> eqs;
  // cocycle identity
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        std::vector<int> e(nv, 0);
        e[vid(a, b)] += 1;
        e[vid(g.mul[a][b], c)] += 1;
        e[vid(b, c)] -= 1;
        e[vid(a, g.mul[b][c])] -= 1;
        for (auto& x : e) x = ((x % p) + p) % p;
        eqs.push_back(std::move(e));
      }
  // normalization beta(e,.) = beta(.,e) = 1
  for (int a = 0; a < n; ++a) {
    std::vector<int> e1(nv, 0), e2(nv, 0);
    e1[vid(0, a)] = 1;
    e2[vid(a, 0)] = 1;
    eqs.push_back(e1);
    eqs.push_back(e2);
  }
  auto cocycles = kernel_gfp(eqs, nv, p);

  // coboundary space inside the cocycles: delta of Z_p-valued lambdas plus
  // Bocksteins of Z_p-valued homomorphisms (classes killed in U(1)).
  std::vector<std::vector<int>> cob;
  for (int g0 = 1; g0 < n; ++g0) {
    std::vector<int> v(nv, 0);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int x = (a == g0 ? 1 : 0) + (b == g0 ? 1 : 0) - (g.mul[a][b] == g0 ? 1 : 0);
        v[vid(a, b)] = ((x % p) + p) % p;
      }
    cob.push_back(std::move(v));
  }
  {
    // connecting-map images: carries of p-th roots of U(1) characters.
    // Characters are homomorphisms G -> Z_M with M = exp(G), enumerated by
    // brute force over generator images.
    const int M = g.exponent();
    const auto& gens = g.generators;
    std::vector<long long> choice(gens.size(), 0);
    long long total = 1;
    for (size_t i = 0; i < gens.size(); ++i) total *= M;
    for (long long it = 0; it < total; ++it) {
      long long t = it;
      for (size_t i = 0; i < gens.size(); ++i) {
        choice[i] = t % M;
        t /= M;
      }
      std::vector<int> h(n, -1);
      h[0] = 0;
      std::vector<int> bfs{0};
      for (size_t q = 0; q < bfs.size(); ++q)
        for (size_t gi = 0; gi < gens.size(); ++gi) {
          int y = g.mul[bfs[q]][gens[gi]];
          if (h[y] < 0) {
            h[y] = (int)((h[bfs[q]] + choice[gi]) % M);
            bfs.push_back(y);
          }
        }
      bool ok = true;
      for (int a = 0; a < n && ok; ++a)
        for (int b = 0; b < n && ok; ++b)
          if ((h[a] + h[b]) % M != h[g.mul[a][b]]) ok = false;
      if (!ok) continue;
      std::vector<int> v(nv, 0);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          int carry = (h[a] + h[b] - h[g.mul[a][b]]) / M;
          v[vid(a, b)] = ((carry % p) + p) % p;
        }
      cob.push_back(std::move(v));
    }
  }

  // enumerate the quotient: BFS over cocycle basis vectors modulo the span
  std::vector<std::vector<int>> reps;
  reps.push_back(std::vector<int>(nv, 0));
  auto known = [&](const std::vector<int>& x) {
    for (auto& r : reps) {
      std::vector<int> d(nv);
      for (int i = 0; i < nv; ++i) d[i] = ((x[i] - r[i]) % p + p) % p;
      if (in_span_gfp(cob, d, p)) return true;
    }
    return false;
  };
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> cur = reps;
    for (auto& r : cur)
      for (auto& b : cocycles) {
        std::vector<int> x(nv);
        for (int i = 0; i < nv; ++i) x[i] = (r[i] + b[i]) % p;
        if (!known(x)) {
          reps.push_back(x);
          grew = true;
          if (reps.size() > 4096) throw std::runtime_error("cohomology quotient too large");
        }
      }
  }
  return reps;
}

std::vector<int> abelian_invariants(const FiniteGroup& g) {
  // cyclic decomposition for the abelian groups produced by the builders,
  // recovered from element orders (greedy peeling).
  std::vector<int> inv;
  std::vector<int> sub{0};
  std::set<int> in(sub.begin(), sub.end());
  while ((int)in.size() < g.n) {
    int best = -1, best_ord = 0;
    for (int x = 0; x < g.n; ++x) {
      if (in.count(x)) continue;
      if (g.elem_order[x] > best_ord) {
        best = x;
        best_ord = g.elem_order[x];
      }
    }
    inv.push_back(best_ord);
    std::vector<int> gens(in.begin(), in.end());
    gens.push_back(best);
    auto cl = closure(g, gens);
    in = std::set<int>(cl.begin(), cl.end());
  }
  return inv;
}

}  // namespace

bool Cocycle2::is_trivial_valued() const {
  for (const auto& row : val)
    for (const auto& r : row)
      if (!r.is_one()) return false;
  return true;
}

Cocycle2 trivial_cocycle(std::shared_ptr<const FiniteGroup> g) {
  Cocycle2 b;
  b.group = std::move(g);
  b.val.assign(b.group->n, std::vector<Root>(b.group->n, Root::one()));
  b.class_id = "b0";
  return b;
}

Cocycle2 bilinear_cocycle_z2k(std::shared_ptr<const FiniteGroup> g, const std::vector<std::vector<int>>& B) {
  const int n = g->n;
  int k = 0;
  while ((1 << k) < n) ++k;
  if ((1 << k) != n) throw std::runtime_error("bilinear cocycle needs a Z2^k group");
  Cocycle2 b;
  b.group = g;
  b.val.assign(n, std::vector<Root>(n, Root::one()));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int s = 0;
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          if ((x >> i & 1) && (y >> j & 1)) s += B[i][j];
      b.val[x][y] = (s % 2) ? Root::minus_one() : Root::one();
    }
  b.class_id = "b?";
  return b;
}

bool check_cocycle(const Cocycle2& b) {
  const auto& g = *b.group;
  for (int x = 0; x < g.n; ++x) {
    if (!b.val[0][x].is_one() || !b.val[x][0].is_one()) return false;
    for (int y = 0; y < g.n; ++y)
      for (int z = 0; z < g.n; ++z) {
        Root lhs = b.val[x][y] * b.val[g.mul[x][y]][z];
        Root rhs = b.val[y][z] * b.val[x][g.mul[y][z]];
        if (lhs != rhs) return false;
      }
  }
  return true;
}

bool cohomologous(const Cocycle2& a, const Cocycle2& b) {
  // The ratio r = a/b is a cocycle; it is a coboundary iff the r-twisted
  // group algebra has a one-dimensional representation rho with
  // rho(g)rho(h) = r(g,h) rho(gh).
  const auto& g = *a.group;
  const int n = g.n;
  std::vector<std::vector<Root>> r(n, std::vector<Root>(n));
  long long max_ord = 1;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      r[x][y] = a.val[x][y] / b.val[x][y];
      max_ord = lcm_ll(max_ord, r[x][y].ord);
    }
  if (g.is_abelian()) {
    // coboundaries are symmetric, and the commutator pairing classifies
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (r[x][y] != r[y][x]) return false;
    // symmetric cocycles on an abelian group can still be nontrivial only
    // through p^2-torsion, which the representative guard excludes
    return true;
  }
  const long long L = lcm_ll(max_ord, g.exponent()) * g.exponent();
  const auto& gens = g.generators;
  if (gens.size() > 3 || L > 128) throw std::runtime_error("cohomologous: search space too large");
  // word expression for every element in terms of generators
  std::vector<std::pair<int, int>> from(n, {-1, -1});  // element = mul[prev][gen]
  std::vector<int> bfs{0};
  for (size_t q = 0; q < bfs.size(); ++q)
    for (int gi = 0; gi < (int)gens.size(); ++gi) {
      int y = g.mul[bfs[q]][gens[gi]];
      if (y != 0 && from[y].first < 0) {
        from[y] = {bfs[q], gi};
        bfs.push_back(y);
      }
    }
  std::vector<long long> choice(gens.size(), 0);
  auto attempt = [&]() {
    std::vector<Root> rho(n, Root::one());
    for (int x : bfs) {
      if (x == 0) continue;
      auto [prev, gi] = from[x];
      // rho(prev*gen) = rho(prev)rho(gen)/r(prev,gen)
      rho[x] = rho[prev] * Root(L, choice[gi]) / r[prev][gens[gi]];
    }
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (rho[x] * rho[y] != r[x][y] * rho[g.mul[x][y]]) return false;
    return true;
  };
  long long total = 1;
  for (size_t i = 0; i < gens.size(); ++i) total *= L;
  for (long long it = 0; it < total; ++it) {
    long long t = it;
    for (size_t i = 0; i < gens.size(); ++i) {
      choice[i] = t % L;
      t /= L;
    }
    if (attempt()) return true;
  }
  return false;
}

std::vector<Cocycle2> cocycle_representatives(std::shared_ptr<const FiniteGroup> gp) {
  const FiniteGroup& g = *gp;
  if (g.n > 16) throw std::runtime_error("group too large for exhaustive cohomology");
  if (!g.is_abelian() && g.n > 8) throw std::runtime_error("unsupported group for exhaustive cohomology");
  if (g.is_abelian()) {
    // guard: the exponent-p method is complete only when the Schur multiplier
    // is elementary abelian, which holds iff no two invariant factors share a
    // gcd divisible by p^2.
    auto inv = abelian_invariants(g);
    for (size_t i = 0; i < inv.size(); ++i)
      for (size_t j = i + 1; j < inv.size(); ++j) {
        long long d = gcd_ll(inv[i], inv[j]);
        for (int p : {2, 3, 5, 7, 11, 13})
          if (d % (p * p) == 0) throw std::runtime_error("group too large for exhaustive cohomology");
      }
  }
  std::vector<int> primes;
  for (int p : {2, 3, 5, 7, 11, 13})
    if (g.n % p == 0) primes.push_back(p);

  std::vector<std::vector<std::vector<Root>>> classes;  // one value table per class
  classes.push_back(std::vector<std::vector<Root>>(g.n, std::vector<Root>(g.n, Root::one())));
  for (int p : primes) {
    auto reps = h2_classes_gfp(g, p);
    std::vector<std::vector<std::vector<Root>>> next;
    for (const auto& base : classes)
      for (const auto& rep : reps) {
        auto tab = base;
        for (int a = 0; a < g.n; ++a)
          for (int b = 0; b < g.n; ++b)
            if (rep[a * g.n + b]) tab[a][b] = tab[a][b] * Root(p, rep[a * g.n + b]);
        next.push_back(std::move(tab));
      }
    classes = std::move(next);
  }
  // canonical order: trivial first, then lexicographic on value tables
  auto keyfn = [&](const std::vector<std::vector<Root>>& t) {
    std::vector<std::pair<long long, long long>> k;
    for (const auto& row : t)
      for (const auto& r : row) k.emplace_back(r.ord, r.exp);
    return k;
  };
  std::sort(classes.begin(), classes.end(),
            [&](const auto& a, const auto& b) { return keyfn(a) < keyfn(b); });
  std::vector<Cocycle2> out;
  for (size_t i = 0; i < classes.size(); ++i) {
    Cocycle2 c;
    c.group = gp;
    c.val = classes[i];
    c.class_id = "b" + std::to_string(i);
    if (!check_cocycle(c)) throw std::runtime_error("internal: invalid cocycle representative");
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Root> slant_product(const Cocycle2& beta, int f) {
  const auto& g = *beta.group;
  if (f < 0 || f >= g.n) throw std::runtime_error("slant product: element outside group");
  std::vector<Root> out(g.n);
  for (int x = 0; x < g.n; ++x) {
    int cf = g.mul[g.mul[g.inv[x]][f]][x];  // x^-1 f x
    out[x] = beta.val[f][x] / beta.val[x][cf];
  }
  return out;
}

}  // namespace symtft
