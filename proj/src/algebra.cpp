#include "symtft/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace symtft {

std::string AlgebraObject::str(const ModularData& m) const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < m.rank(); ++i) {
    if (!mult[i]) continue;
    if (!first) os << " + ";
    if (mult[i] > 1) os << mult[i] << " ";
    os << m.anyons[i].label;
    first = false;
  }
  return os.str();
}

AlgebraObject algebra_from_labels(const ModularData& m, const std::vector<std::pair<std::string, int>>& terms) {
  AlgebraObject a;
  a.mult.assign(m.rank(), 0);
  a.mult[0] = 1;
  for (auto& [lbl, k] : terms) a.mult[m.find_label(lbl)] = k;
  a.dim = QDim(0);
  for (int i = 0; i < m.rank(); ++i) a.dim = a.dim + m.anyons[i].dim * a.mult[i];
  a.is_lagrangian = (a.dim == m.total_dim);
  return a;
}

namespace {

struct Enum {
  const ModularData& m;
  QDim max_dim;
  long long nodes = 0;
  long long node_limit;
  std::vector<int> cand;                 // candidate anyon indices (orbit representatives)
  std::vector<int> orbit_partner;       // dual partner (== self if self-dual)
  std::vector<int> mult;                // current multiplicities (full rank)
  std::vector<AlgebraObject> out;

  bool mutual_ok(int a, int b) const {
    // monodromy must be +1 whenever either anyon is abelian
    if (m.is_abelian_anyon(a) || m.is_abelian_anyon(b)) {
      if (!approx(m.monodromy(a, b), cplx(1.0), 1e-7)) return false;
    }
    return true;
  }

  bool closure_ok() const {
    const int r = m.rank();
    for (int a = 0; a < r; ++a) {
      if (!mult[a]) continue;
      for (int b = a; b < r; ++b) {
        if (!mult[b]) continue;
        long long lhs = (long long)mult[a] * mult[b];
        long long rhs = 0;
        for (auto& [c, k] : m.fuse(a, b)) rhs += (long long)k * mult[c];
        if (lhs > rhs) return false;
      }
    }
    return true;
  }

  void rec(size_t pos, QDim dim) {
    if (++nodes > node_limit) throw std::runtime_error("enumeration node limit exceeded");
    if (pos == cand.size()) {
      if (closure_ok()) {
        AlgebraObject alg;
        alg.mult = mult;
        alg.dim = dim;
        alg.is_lagrangian = (dim == m.total_dim);
        out.push_back(std::move(alg));
      }
      return;
    }
    int a = cand[pos];
    int ab = orbit_partner[a];
    int dmax = (int)std::floor(m.anyons[a].dim.value() + 1e-9);
    for (int n = 0; n <= dmax; ++n) {
      if (n > 0) {
        bool ok = true;
        for (size_t q = 0; q <= pos && ok; ++q) {
          int b = cand[q];
          if (mult[b] || (q == pos && n)) {
            if (q == pos) {
              if (!mutual_ok(a, a)) ok = false;
              if (ab != a && !mutual_ok(a, ab)) ok = false;
            } else if (mult[b]) {
              if (!mutual_ok(a, b) || (orbit_partner[b] != b && !mutual_ok(a, orbit_partner[b]))) ok = false;
            }
          }
        }
        if (!ok) break;
      }
      QDim add = m.anyons[a].dim * n;
      if (ab != a) add = add + m.anyons[ab].dim * n;
      QDim nd = dim + add;
      if (max_dim < nd) break;
      mult[a] = n;
      mult[ab] = n;
      rec(pos + 1, nd);
    }
    mult[a] = 0;
    mult[ab] = 0;
  }
};

}  // namespace

std::vector<AlgebraObject> enumerate_condensables(const ModularData& m, QDim max_dim, EnumerationBudget budget) {
  Enum e{m, max_dim, 0, budget.node_limit, {}, {}, {}, {}};
  e.orbit_partner.assign(m.rank(), 0);
  for (int a = 0; a < m.rank(); ++a) e.orbit_partner[a] = m.dual[a];
  for (int a = 1; a < m.rank(); ++a) {
    if (!(m.anyons[a].theta == Root::one())) continue;
    if (m.dual[a] < a) continue;  // orbit handled at its representative
    if (!(m.anyons[m.dual[a]].theta == Root::one()))
      throw std::runtime_error("dual of a boson is not a boson");
    e.cand.push_back(a);
  }
  e.mult.assign(m.rank(), 0);
  e.mult[0] = 1;
  e.rec(0, QDim(1));
  std::sort(e.out.begin(), e.out.end());
  return e.out;
}

MixedStateFlags mixed_state_filter(const ModularData& m, const AlgebraObject& alg) {
  auto sw = swap_star(m);
  const auto& info = *m.deligne_info;
  const int r2 = info.f2->rank();
  MixedStateFlags f;
  f.t_invariant = true;
  for (int p = 0; p < m.rank(); ++p)
    if (alg.mult[p] != alg.mult[sw.perm[p]]) f.t_invariant = false;
  f.positive = true;
  for (int p = 0; p < m.rank() && f.positive; ++p) {
    if (!alg.mult[p]) continue;
    int x = p / r2, y = p % r2;
    int dx = x * r2 + sw.sigma_lr[x];          // (x, bar x)
    int dy = sw.sigma_lr[y] * r2 + y;          // (bar y, y)
    if (alg.mult[p] > alg.mult[dx] * alg.mult[dy]) {
      f.positive = false;
      f.witness = std::make_pair(x, y);
    }
  }
  f.factorizes = true;
  for (int p = 0; p < m.rank(); ++p) {
    int x = p / r2, y = p % r2;
    if (alg.mult[p] != alg.mult[x * r2] * alg.mult[y]) f.factorizes = false;
  }
  return f;
}

AlgebraObject strong_symmetry_boundary(const ModularData& doubled, const AlgebraObject& per_factor) {
  const auto& info = *doubled.deligne_info;
  const int r1 = info.f1->rank(), r2 = info.f2->rank();
  if (r1 != r2 || (int)per_factor.mult.size() != r1)
    throw std::runtime_error("strong boundary: factor size mismatch");
  AlgebraObject a;
  a.mult.assign(r1 * r2, 0);
  for (int i = 0; i < r1; ++i)
    for (int j = 0; j < r2; ++j) a.mult[i * r2 + j] = per_factor.mult[i] * per_factor.mult[j];
  a.dim = per_factor.dim * per_factor.dim;
  a.is_lagrangian = (a.dim == doubled.total_dim);
  return a;
}

AlgebraObject charge_boundary(const ModularData& gd) {
  if (!gd.group_info) throw std::runtime_error("charge_boundary: not a group double");
  const auto& gi = *gd.group_info;
  AlgebraObject a;
  a.mult.assign(gd.rank(), 0);
  a.dim = QDim(0);
  for (int i = 0; i < gd.rank(); ++i) {
    auto [c, k] = gi.labels[i];
    if (c == gi.grp->class_of[0]) {
      a.mult[i] = gi.cent_irreps[c][k].dim;
      a.dim = a.dim + gd.anyons[i].dim * a.mult[i];
    }
  }
  a.is_lagrangian = (a.dim == gd.total_dim);
  return a;
}

AlgebraObject flux_boundary(const ModularData& gd) {
  if (!gd.group_info) throw std::runtime_error("flux_boundary: not a group double");
  const auto& gi = *gd.group_info;
  AlgebraObject a;
  a.mult.assign(gd.rank(), 0);
  a.dim = QDim(0);
  for (int i = 0; i < gd.rank(); ++i) {
    auto [c, k] = gi.labels[i];
    bool trivial_charge = true;
    const auto& irr = gi.cent_irreps[c][k];
    for (size_t cl = 0; cl < gi.cents[c].grp.classes.size(); ++cl)
      if (!approx(irr.chars[cl].value(), cplx((double)irr.dim))) trivial_charge = false;
    if (trivial_charge) {
      a.mult[i] = 1;
      a.dim = a.dim + gd.anyons[i].dim;
    }
  }
  a.is_lagrangian = (a.dim == gd.total_dim);
  return a;
}

AlgebraObject group_boundary_algebra(const ModularData& doubled, const std::vector<int>& ftilde_elems,
                                     const Cocycle2& beta) {
  const auto& info = *doubled.deligne_info;
  const auto& gd1 = *info.f1;
  const auto& gd2 = *info.f2;
  if (!gd1.group_info || !gd2.group_info)
    throw std::runtime_error("group_boundary_algebra: factors are not group doubles");
  const FiniteGroup& G = *gd1.group_info->grp;
  FiniteGroup Gt = product_group(G, G);
  Subgroup F = make_subgroup(Gt, ftilde_elems, "Ftilde");
  if (beta.group->n != F.grp.n) throw std::runtime_error("group_boundary_algebra: cocycle not on Ftilde");

  // per F-class data: parent rep, slant character, centralizer in F
  struct ClsData {
    int pf;               // parent rep element of Gt
    Subgroup cent;        // centralizer within F (as subgroup of F.grp)
    std::vector<Root> slant;  // on F.grp elements
  };
  std::vector<ClsData> fcls;
  for (auto& cl : F.grp.classes) {
    ClsData d{F.to_parent[cl[0]], make_subgroup(F.grp, F.grp.centralizer(cl[0]), "CF"), slant_product(beta, cl[0])};
    fcls.push_back(std::move(d));
  }

  const auto& gi1 = *gd1.group_info;
  const auto& gi2 = *gd2.group_info;
  const int r1 = gd1.rank(), r2 = gd2.rank();
  AlgebraObject out;
  out.mult.assign(r1 * r2, 0);
  out.dim = QDim(0);
  for (int i = 0; i < r1; ++i)
    for (int j = 0; j < r2; ++j) {
      auto [c1, mu] = gi1.labels[i];
      auto [c2, nu] = gi2.labels[j];
      long long total = 0;
      for (auto& d : fcls) {
        int pa = d.pf / G.n, pb = d.pf % G.n;
        if (G.class_of[pa] != c1 || G.class_of[pb] != c2) continue;
        // transports into the canonical-class representatives
        int rep1 = G.classes[c1][0], rep2 = G.classes[c2][0];
        int x1 = -1, x2 = -1;
        for (int x = 0; x < G.n; ++x) {
          if (x1 < 0 && G.conj(rep1, x) == pa) x1 = x;
          if (x2 < 0 && G.conj(rep2, x) == pb) x2 = x;
        }
        cplx acc = 0;
        for (int s = 0; s < d.cent.grp.n; ++s) {
          int felem = d.cent.to_parent[s];          // element of F.grp
          int pel = F.to_parent[felem];             // element of Gt
          int u = pel / G.n, v = pel % G.n;
          int u1 = G.conj(u, G.inv[x1]);            // x1^-1 u x1 in C_G(rep1)
          int v1 = G.conj(v, G.inv[x2]);
          const auto& subA = gi1.cents[c1];
          const auto& subB = gi2.cents[c2];
          cplx chi1 = gi1.cent_irreps[c1][mu].chars[subA.grp.class_of[subA.from_parent.at(u1)]].value();
          cplx chi2 = gi2.cent_irreps[c2][nu].chars[subB.grp.class_of[subB.from_parent.at(v1)]].value();
          acc += chi1 * chi2 * std::conj(d.slant[felem].value());
        }
        acc /= double(d.cent.grp.n);
        long long k = std::llround(acc.real());
        if (!approx(acc, cplx((double)k), 1e-6))
          throw std::runtime_error("group_boundary_algebra: non-integer multiplicity");
        total += k;
      }
      out.mult[i * r2 + j] = (int)total;
      out.dim = out.dim + doubled.anyons[i * r2 + j].dim * (int)total;
    }
  out.is_lagrangian = (out.dim == doubled.total_dim);
  if (!out.is_lagrangian) throw std::runtime_error("group_boundary_algebra: dimension check failed");
  return out;
}

}  // namespace symtft
