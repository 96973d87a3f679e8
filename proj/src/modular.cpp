#include "symtft/modular.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace symtft {

int ModularData::N(int a, int b, int c) const {
  for (auto& [cc, m] : fus[a * rank() + b])
    if (cc == c) return m;
  return 0;
}

int ModularData::find_label(const std::string& s) const {
  for (int i = 0; i < rank(); ++i)
    if (anyons[i].label == s) return i;
  throw std::runtime_error("no anyon labeled '" + s + "' in " + name);
}

cplx ModularData::monodromy(int a, int b) const { return S(a, b) * S(0, 0) / (S(0, a) * S(0, b)); }

int ModularData::pair_index(int x, int y) const {
  if (!deligne_info) throw std::runtime_error("not a product theory");
  return x * deligne_info->f2->rank() + y;
}

std::pair<int, int> ModularData::pair_split(int i) const {
  if (!deligne_info) throw std::runtime_error("not a product theory");
  int r2 = deligne_info->f2->rank();
  return {i / r2, i % r2};
}

void ModularData::validate() const {
  const int r = rank();
  if (!anyons[0].theta.is_one() || anyons[0].dim != QDim(1))
    throw std::runtime_error(name + ": bad vacuum");
  if ((S - S.transpose()).norm() > 1e-8 * r) throw std::runtime_error(name + ": S not symmetric");
  if ((S * S.adjoint() - Eigen::MatrixXcd::Identity(r, r)).norm() > 1e-8 * r)
    throw std::runtime_error(name + ": S not unitary");
  Eigen::MatrixXcd S2 = S * S;
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) {
      double want = (b == dual[a]) ? 1.0 : 0.0;
      if (std::abs(S2(a, b) - want) > 1e-8) throw std::runtime_error(name + ": S^2 != C");
    }
  for (int a = 0; a < r; ++a) {
    if (dual[dual[a]] != a) throw std::runtime_error(name + ": dual not involutive");
    if (!approx(S(0, a).real(), anyons[a].dim.value() * S(0, 0).real(), 1e-8) || !approx(S(0, a).imag(), 0.0, 1e-8))
      throw std::runtime_error(name + ": quantum dimension mismatch in S");
    if (N(a, dual[a], 0) != 1) throw std::runtime_error(name + ": N_{a abar}^1 != 1");
    if (N(a, 0, a) != 1) throw std::runtime_error(name + ": vacuum fusion broken");
  }
  QDim d2{0, 0};
  for (auto& a : anyons) d2 = d2 + a.dim * a.dim;
  if (d2 != total_dim * total_dim) throw std::runtime_error(name + ": total dimension mismatch");
  if (!bar.empty()) {
    for (int a = 0; a < r; ++a) {
      if (bar[bar[a]] != a) throw std::runtime_error(name + ": bar not involutive");
      if (anyons[bar[a]].theta != anyons[a].theta.conj())
        throw std::runtime_error(name + ": bar does not conjugate spins");
    }
  }
}

std::vector<std::vector<std::pair<int, int>>> fusion_from_S(const Eigen::MatrixXcd& S) {
  const int r = (int)S.rows();
  std::vector<std::vector<std::pair<int, int>>> fus(r * r);
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c) {
        cplx n = 0;
        for (int x = 0; x < r; ++x) n += S(a, x) * S(b, x) * std::conj(S(c, x)) / S(0, x);
        long long m = std::llround(n.real());
        if (std::abs(n - cplx((double)m)) > 1e-6) throw std::runtime_error("Verlinde: non-integral fusion");
        if (m < 0) throw std::runtime_error("Verlinde: negative fusion coefficient");
        if (m > 0) fus[a * r + b].push_back({c, (int)m});
      }
  return fus;
}

namespace {

std::vector<int> duals_from_fusion(const std::vector<std::vector<std::pair<int, int>>>& fus, int r) {
  std::vector<int> dual(r, -1);
  for (int a = 0; a < r; ++a) {
    for (int b = 0; b < r; ++b) {
      int m = 0;
      for (auto& [c, k] : fus[a * r + b])
        if (c == 0) m = k;
      if (m == 1) {
        dual[a] = b;
        break;
      }
    }
    if (dual[a] < 0) throw std::runtime_error("no dual found");
  }
  return dual;
}

std::string group_double_label(const FiniteGroup& g, int cls, const std::vector<Irrep>& cirr, int irr,
                               const FiniteGroup& cent) {
  int rep = g.classes[cls][0];
  bool vac_flux = cls == g.class_of[0];
  bool vac_charge = true;
  for (size_t c = 0; c < cent.classes.size(); ++c)
    if (!approx(cirr[irr].chars[c].value(), cplx((double)cirr[irr].dim))) vac_charge = false;
  if (vac_flux && vac_charge) return "1";
  if (g.name == "Z2") {
    if (vac_flux) return "e";
    return vac_charge ? "m" : "em";
  }
  if (g.name.rfind("Z2", 0) == 0 && g.is_abelian() && g.exponent() <= 2) {
    // Z2^k: label charges/fluxes by the generator letters they involve
    int k = 0;
    while ((1 << k) < g.n) ++k;
    const char* L = "ABCD";
    std::string s;
    for (int b = 0; b < k; ++b) {
      cplx v = cirr[irr].chars[cent.class_of[1 << b]].value();
      if (approx(v, cplx(-1))) s += std::string("e") + L[b];
    }
    for (int b = 0; b < k; ++b)
      if (rep & (1 << b)) s += std::string("m") + L[b];
    return s.empty() ? "1" : s;
  }
  if (g.name == "S3") {
    std::string flux = vac_flux ? "" : g.elem_name[rep];
    if (vac_flux) {
      return cirr[irr].label;  // P or E
    }
    if (vac_charge) return flux;
    if (rep == 1) {  // class [a], centralizer Z3
      cplx v = cirr[irr].chars[cent.class_of[cent.mul[0][0] == 0 ? 1 : 1]].value();
      // centralizer {1,a,a2}: element index 1 is a
      v = cirr[irr].chars[cent.class_of[1]].value();
      return approx(v, Root(3, 1).value()) ? "aw" : "awb";
    }
    return flux + "-";
  }
  std::ostringstream os;
  os << "(" << g.class_name[cls] << ":" << cirr[irr].label << ")";
  return os.str();
}

}  // namespace

ModularData group_double_center(std::shared_ptr<const FiniteGroup> gp) {
  const FiniteGroup& g = *gp;
  auto info = std::make_shared<GroupDoubleInfo>();
  info->grp = gp;
  ModularData m;
  m.name = "Z(" + g.name + ")";
  const int ncls = (int)g.classes.size();
  std::vector<std::vector<int>> transport(ncls);  // x with a = x rep x^-1, indexed like class list
  for (int c = 0; c < ncls; ++c) {
    int rep = g.classes[c][0];
    auto cent_elems = g.centralizer(rep);
    std::string cname = (int)cent_elems.size() == g.n ? g.name : "C(" + g.elem_name[rep] + ")";
    auto sub = make_subgroup(g, cent_elems, cname);
    auto irr = character_table(sub.grp);
    transport[c].resize(g.classes[c].size());
    for (size_t i = 0; i < g.classes[c].size(); ++i) {
      int a = g.classes[c][i];
      for (int x = 0; x < g.n; ++x)
        if (g.conj(rep, x) == a) {
          transport[c][i] = x;
          break;
        }
    }
    for (int k = 0; k < (int)irr.size(); ++k) {
      Anyon an;
      an.dim = QDim((long long)g.classes[c].size() * irr[k].dim);
      // theta = chi(rep)/dim, an exact root of unity
      cplx th = irr[k].chars[sub.grp.class_of[sub.from_parent.at(rep)]].value() / double(irr[k].dim);
      auto r = snap_root(th, g.elem_order[rep]);
      if (!r) throw std::runtime_error("group double: spin not a root of unity");
      an.theta = *r;
      an.label = group_double_label(g, c, irr, k, sub.grp);
      m.anyons.push_back(an);
      info->labels.push_back({c, k});
    }
    info->cents.push_back(std::move(sub));
    info->cent_irreps.push_back(std::move(irr));
  }
  const int r = m.rank();
  m.S = Eigen::MatrixXcd::Zero(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      auto [ca, mu] = info->labels[i];
      auto [cb, nu] = info->labels[j];
      const auto& subA = info->cents[ca];
      const auto& subB = info->cents[cb];
      cplx s = 0;
      for (size_t ia = 0; ia < g.classes[ca].size(); ++ia) {
        int a = g.classes[ca][ia];
        int xa = transport[ca][ia];
        for (size_t ib = 0; ib < g.classes[cb].size(); ++ib) {
          int b = g.classes[cb][ib];
          if (g.mul[a][b] != g.mul[b][a]) continue;
          int xb = transport[cb][ib];
          int u = g.conj(b, g.inv[xa]);  // xa^-1 b xa
          int v = g.conj(a, g.inv[xb]);
          const auto& chiA = info->cent_irreps[ca][mu];
          const auto& chiB = info->cent_irreps[cb][nu];
          s += std::conj(chiA.chars[subA.grp.class_of[subA.from_parent.at(u)]].value()) *
               std::conj(chiB.chars[subB.grp.class_of[subB.from_parent.at(v)]].value());
        }
      }
      m.S(i, j) = s / double(g.n);
    }
  m.total_dim = QDim(g.n);
  m.fus = fusion_from_S(m.S);
  m.dual = duals_from_fusion(m.fus, r);
  m.bar.resize(r);
  for (int i = 0; i < r; ++i) {
    auto [c, k] = info->labels[i];
    int kb = conjugate_irrep(info->cents[c].grp, info->cent_irreps[c], k);
    for (int j = 0; j < r; ++j)
      if (info->labels[j] == std::make_pair(c, kb)) m.bar[i] = j;
  }
  m.group_info = info;
  m.validate();
  return m;
}

ModularData ising_mtc() {
  ModularData m;
  m.name = "Ising";
  m.anyons.resize(3);
  m.anyons[0] = {"1", QDim(1), Root::one()};
  m.anyons[1] = {"psi", QDim(1), Root::minus_one()};
  m.anyons[2] = {"sigma", QDim(0, 1), Root(16, 1)};
  double s2 = std::sqrt(2.0);
  m.S.resize(3, 3);
  m.S << 0.5, 0.5, 0.5 * s2, 0.5, 0.5, -0.5 * s2, 0.5 * s2, -0.5 * s2, 0.0;
  m.total_dim = QDim(2);
  m.fus = fusion_from_S(m.S);
  m.dual = duals_from_fusion(m.fus, 3);
  m.validate();
  return m;
}

ModularData ty_center(std::shared_ptr<const FiniteGroup> ap, std::vector<std::vector<Root>> chi, int tau_sign) {
  const FiniteGroup& A = *ap;
  const int n = A.n;
  if (!A.is_abelian()) throw std::runtime_error("ty_center: group must be abelian");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (chi[a][b] != chi[b][a]) throw std::runtime_error("ty_center: bicharacter not symmetric");
  for (int a = 1; a < n; ++a) {
    bool trivial_row = true;
    for (int b = 0; b < n; ++b)
      if (!chi[a][b].is_one()) trivial_row = false;
    if (trivial_row) throw std::runtime_error("ty_center: degenerate bicharacter");
  }
  if (tau_sign != 1 && tau_sign != -1) throw std::runtime_error("ty_center: tau must be +-1/sqrt|A|");

  auto info = std::make_shared<TYInfo>();
  info->grp = ap;
  info->chi = chi;
  info->tau_sign = tau_sign;

  // projective characters rho(a)rho(b) = chi(a,b) rho(ab)
  {
    long long L = 4 * A.exponent();
    const auto& gens = A.generators;
    std::vector<long long> choice(gens.size());
    std::set<std::vector<std::pair<long long, long long>>> seen;
    long long total = 1;
    for (size_t i = 0; i < gens.size(); ++i) total *= L;
    for (long long it = 0; it < total; ++it) {
      long long t = it;
      for (size_t i = 0; i < gens.size(); ++i) {
        choice[i] = t % L;
        t /= L;
      }
      std::vector<Root> rho(n, Root::one());
      std::vector<bool> have(n, false);
      have[0] = true;
      std::vector<int> bfs{0};
      for (size_t q = 0; q < bfs.size(); ++q)
        for (size_t gi = 0; gi < gens.size(); ++gi) {
          int y = A.mul[bfs[q]][gens[gi]];
          if (!have[y]) {
            rho[y] = rho[bfs[q]] * Root(L, choice[gi]) / chi[bfs[q]][gens[gi]];
            have[y] = true;
            bfs.push_back(y);
          }
        }
      bool ok = true;
      for (int a = 0; a < n && ok; ++a)
        for (int b = 0; b < n && ok; ++b)
          if (rho[a] * rho[b] != chi[a][b] * rho[A.mul[a][b]]) ok = false;
      if (!ok) continue;
      std::vector<std::pair<long long, long long>> key;
      for (auto& r : rho) key.emplace_back(r.ord, r.exp);
      if (seen.insert(key).second) info->rhos.push_back(rho);
    }
    std::sort(info->rhos.begin(), info->rhos.end(), [](const auto& x, const auto& y) {
      for (size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] == y[i])) return x[i] < y[i];
      }
      return false;
    });
    if ((int)info->rhos.size() != n) throw std::runtime_error("ty_center: projective character count mismatch");
  }

  QDim dz;
  if (n == 2)
    dz = QDim(0, 1);
  else if (n == 4)
    dz = QDim(2);
  else if (n == 8)
    dz = QDim(0, 2);
  else
    throw std::runtime_error("ty_center: |A| not supported");

  ModularData m;
  m.name = "Z(TY(" + A.name + (tau_sign > 0 ? ",+" : ",-") + "))";
  // X anyons
  for (int a = 0; a < n; ++a) {
    Root e0 = (chi[a][a].conj()).sqrt();
    for (Root eps : {e0, e0 * Root::minus_one()}) {
      TYInfo::Tag t;
      t.kind = 0;
      t.a = a;
      t.eps = eps;
      info->tags.push_back(t);
      Anyon an;
      an.dim = QDim(1);
      an.theta = chi[a][a].conj();
      an.label = "X(" + A.elem_name[a] + "," + eps.str() + ")";
      m.anyons.push_back(an);
    }
  }
  // put the vacuum X(1,+1) first
  {
    int vac = -1;
    for (int i = 0; i < (int)m.anyons.size(); ++i)
      if (info->tags[i].a == 0 && info->tags[i].eps.is_one()) vac = i;
    std::swap(m.anyons[0], m.anyons[vac]);
    std::swap(info->tags[0], info->tags[vac]);
  }
  // Y anyons
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      TYInfo::Tag t;
      t.kind = 1;
      t.a = a;
      t.b = b;
      info->tags.push_back(t);
      Anyon an;
      an.dim = QDim(2);
      an.theta = chi[a][b].conj();
      an.label = "Y(" + A.elem_name[a] + "," + A.elem_name[b] + ")";
      m.anyons.push_back(an);
    }
  // Z anyons
  for (int r0 = 0; r0 < n; ++r0) {
    cplx sum = 0;
    for (int a = 0; a < n; ++a) sum += info->rhos[r0][a].conj().value();
    cplx d2 = sum * double(tau_sign) / std::sqrt(double(n));
    auto d2r = snap_root(d2, 8 * A.exponent());
    if (!d2r) throw std::runtime_error("ty_center: Delta^2 not a root of unity");
    Root delta0 = d2r->sqrt();
    for (Root delta : {delta0, delta0 * Root::minus_one()}) {
      TYInfo::Tag t;
      t.kind = 2;
      t.rho = r0;
      t.delta = delta;
      info->tags.push_back(t);
      Anyon an;
      an.dim = dz;
      an.theta = delta;
      an.label = "Z(r" + std::to_string(r0 + 1) + "," + delta.str() + ")";
      m.anyons.push_back(an);
    }
  }
  const int r = m.rank();
  if (r != n * (n + 7) / 2) throw std::runtime_error("ty_center: rank mismatch");

  double sn = std::sqrt(double(n));
  auto entry = [&](int i, int j) -> cplx {
    const auto& ti = info->tags[i];
    const auto& tj = info->tags[j];
    auto X = [&](const TYInfo::Tag& t) { return t.kind == 0; };
    auto Y = [&](const TYInfo::Tag& t) { return t.kind == 1; };
    if (X(ti) && X(tj)) return chi[ti.a][tj.a].pow(2).value();
    if (X(ti) && Y(tj)) return 2.0 * chi[ti.a][A.mul[tj.a][tj.b]].value();
    if (Y(ti) && X(tj)) return 2.0 * chi[tj.a][A.mul[ti.a][ti.b]].value();
    if (X(ti) && !X(tj) && !Y(tj)) return ti.eps.value() * sn * info->rhos[tj.rho][ti.a].value();
    if (tj.kind == 0 && ti.kind == 2) return tj.eps.value() * sn * info->rhos[ti.rho][tj.a].value();
    if (Y(ti) && Y(tj))
      return 2.0 * (chi[ti.a][tj.b].value() * chi[ti.b][tj.a].value() +
                    chi[ti.a][tj.a].value() * chi[ti.b][tj.b].value());
    if (Y(ti) || Y(tj)) return 0.0;  // Y-Z
    cplx s = 0;
    for (int a = 0; a < n; ++a)
      s += chi[a][a].pow(2).value() * info->rhos[ti.rho][a].value() * info->rhos[tj.rho][a].value();
    return s / (ti.delta.value() * tj.delta.value());
  };
  m.S.resize(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) m.S(i, j) = entry(i, j) / double(2 * n);
  m.total_dim = QDim(2 * n);
  m.fus = fusion_from_S(m.S);
  m.dual = duals_from_fusion(m.fus, r);
  // time reversal within the same label set (real bicharacters only)
  bool chi_real = true;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (chi[a][b].ord > 2) chi_real = false;
  if (chi_real) {
    m.bar.assign(r, -1);
    for (int i = 0; i < r; ++i) {
      const auto& t = info->tags[i];
      for (int j = 0; j < r; ++j) {
        const auto& u = info->tags[j];
        if (t.kind != u.kind) continue;
        if (t.kind == 0 && t.a == u.a && u.eps == t.eps.conj()) m.bar[i] = j;
        if (t.kind == 1 && t.a == u.a && t.b == u.b) m.bar[i] = j;
        if (t.kind == 2 && u.delta == t.delta.conj()) {
          bool same = true;
          for (int a = 0; a < n; ++a)
            if (!(info->rhos[u.rho][a] == info->rhos[t.rho][a].conj())) same = false;
          if (same) m.bar[i] = j;
        }
      }
      if (m.bar[i] < 0) throw std::runtime_error("ty_center: no time-reversal partner");
    }
  }
  m.ty_info = info;
  m.validate();
  return m;
}

ModularData deligne_product(const ModularData& m1, const ModularData& m2) {
  ModularData m;
  m.name = m1.name + "#" + m2.name;
  const int r1 = m1.rank(), r2 = m2.rank();
  auto info = std::make_shared<DeligneInfo>();
  info->f1 = std::make_shared<ModularData>(m1);
  info->f2 = std::make_shared<ModularData>(m2);
  m.deligne_info = info;
  m.anyons.resize(r1 * r2);
  for (int i = 0; i < r1; ++i)
    for (int j = 0; j < r2; ++j) {
      Anyon a;
      a.dim = m1.anyons[i].dim * m2.anyons[j].dim;
      a.theta = m1.anyons[i].theta * m2.anyons[j].theta;
      if (i == 0 && j == 0)
        a.label = "1";
      else if (j == 0)
        a.label = m1.anyons[i].label;
      else if (i == 0)
        a.label = m2.anyons[j].label;
      else
        a.label = m1.anyons[i].label + "." + m2.anyons[j].label;
      m.anyons[i * r2 + j] = a;
    }
  m.S.resize(r1 * r2, r1 * r2);
  for (int i = 0; i < r1; ++i)
    for (int j = 0; j < r2; ++j)
      for (int k = 0; k < r1; ++k)
        for (int l = 0; l < r2; ++l) m.S(i * r2 + j, k * r2 + l) = m1.S(i, k) * m2.S(j, l);
  m.total_dim = m1.total_dim * m2.total_dim;
  m.fus.assign((size_t)r1 * r2 * r1 * r2, {});
  for (int a1 = 0; a1 < r1; ++a1)
    for (int a2 = 0; a2 < r2; ++a2)
      for (int b1 = 0; b1 < r1; ++b1)
        for (int b2 = 0; b2 < r2; ++b2) {
          auto& out = m.fus[(size_t)(a1 * r2 + a2) * r1 * r2 + (b1 * r2 + b2)];
          for (auto& [c1, k1] : m1.fuse(a1, b1))
            for (auto& [c2, k2] : m2.fuse(a2, b2)) out.push_back({c1 * r2 + c2, k1 * k2});
        }
  m.dual.resize(r1 * r2);
  for (int i = 0; i < r1; ++i)
    for (int j = 0; j < r2; ++j) m.dual[i * r2 + j] = m1.dual[i] * r2 + m2.dual[j];
  if (!m1.bar.empty() && !m2.bar.empty()) {
    m.bar.resize(r1 * r2);
    for (int i = 0; i < r1; ++i)
      for (int j = 0; j < r2; ++j) m.bar[i * r2 + j] = m1.bar[i] * r2 + m2.bar[j];
  }
  m.validate();
  return m;
}

ModularData conjugate_mtc(const ModularData& m) {
  ModularData c = m;
  c.name = m.name + "~";
  c.S = m.S.conjugate();
  for (auto& a : c.anyons) a.theta = a.theta.conj();
  c.group_info.reset();
  c.ty_info.reset();
  c.deligne_info.reset();
  c.swap.reset();
  c.validate();
  return c;
}

ModularData doubled_theory(const ModularData& m) {
  if (m.bar.empty()) throw std::runtime_error("doubled_theory: factor lacks a time-reversal map");
  ModularData d = deligne_product(m, m);
  d.name = "Choi(" + m.name + ")";
  const int r = m.rank();
  // relabel with L/R suffixes
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      std::string s;
      if (i != 0) s += m.anyons[i].label + "_L";
      if (j != 0) s += (s.empty() ? "" : " ") + m.anyons[j].label + "_R";
      d.anyons[i * r + j].label = s.empty() ? "1" : s;
    }
  auto sw = std::make_shared<SwapStarAction>();
  sw->perm.resize(r * r);
  sw->sigma_lr = m.bar;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) sw->perm[i * r + j] = m.bar[j] * r + m.bar[i];
  d.swap = sw;
  // consistency of the swap* action
  for (int x = 0; x < r * r; ++x) {
    if (sw->perm[sw->perm[x]] != x) throw std::runtime_error("swap*: not an involution");
    if (d.anyons[sw->perm[x]].theta != d.anyons[x].theta.conj())
      throw std::runtime_error("swap*: spins not conjugated");
  }
  return d;
}

SwapStarAction swap_star(const ModularData& doubled) {
  if (!doubled.swap) throw std::runtime_error("swap_star: theory is not of doubled form");
  const auto& sw = *doubled.swap;
  const int r = doubled.rank();
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (auto& [c, k] : doubled.fuse(a, b))
        if (doubled.N(sw.perm[a], sw.perm[b], sw.perm[c]) != k)
          throw std::runtime_error("swap*: fusion not preserved");
  return sw;
}

}  // namespace symtft
