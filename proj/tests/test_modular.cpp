#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "symtft/modular.hpp"

using namespace symtft;

namespace {
std::shared_ptr<const FiniteGroup> G(const std::string& s) {
  return std::make_shared<FiniteGroup>(build_group(s));
}
std::vector<std::vector<Root>> bichar_z2k(int k, const std::vector<std::vector<int>>& B) {
  int n = 1 << k;
  std::vector<std::vector<Root>> chi(n, std::vector<Root>(n, Root::one()));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int s = 0;
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          if ((x >> i & 1) && (y >> j & 1)) s += B[i][j];
      if (s % 2) chi[x][y] = Root::minus_one();
    }
  return chi;
}
}  // namespace

TEST_CASE("toric code: Z(Z2)") {
  auto m = group_double_center(G("Z2"));
  REQUIRE(m.rank() == 4);
  std::map<std::string, Root> th;
  for (auto& a : m.anyons) {
    CHECK(a.dim == QDim(1));
    th[a.label] = a.theta;
  }
  CHECK(th["1"].is_one());
  CHECK(th["e"].is_one());
  CHECK(th["m"].is_one());
  CHECK(th["em"] == Root::minus_one());
  // e x m = em
  int e = m.find_label("e"), mm = m.find_label("m"), em = m.find_label("em");
  CHECK(m.N(e, mm, em) == 1);
  CHECK(approx(m.monodromy(e, mm), cplx(-1)));
}

TEST_CASE("Z(S3): anyons, spins, fusion") {
  auto m = group_double_center(G("S3"));
  REQUIRE(m.rank() == 8);
  std::multiset<long long> dims;
  for (auto& a : m.anyons) dims.insert(a.dim.a);
  CHECK(dims == std::multiset<long long>{1, 1, 2, 2, 2, 2, 3, 3});
  int E = m.find_label("E"), P = m.find_label("P");
  CHECK(m.N(E, E, 0) == 1);
  CHECK(m.N(E, E, P) == 1);
  CHECK(m.N(E, E, E) == 1);  // E x E = 1 + P + E
  CHECK(m.anyons[m.find_label("aw")].theta == Root(3, 1));
  CHECK(m.anyons[m.find_label("awb")].theta == Root(3, 2));
  CHECK(m.anyons[m.find_label("b-")].theta == Root::minus_one());
  // bar map pairs aw <-> awb
  CHECK(m.bar[m.find_label("aw")] == m.find_label("awb"));
  // trivial group: single anyon
  auto t = group_double_center(G("Z1"));
  CHECK(t.rank() == 1);
}

TEST_CASE("Ising MTC and Z(Ising)") {
  auto is = ising_mtc();
  is.validate();
  auto zis = deligne_product(is, conjugate_mtc(is));
  CHECK(zis.rank() == 9);
  QDim d2{0, 0};
  for (auto& a : zis.anyons) d2 = d2 + a.dim * a.dim;
  CHECK(d2 == QDim(16));
  // conjugation is an involution at the data level
  auto c2 = conjugate_mtc(conjugate_mtc(is));
  CHECK((c2.S - is.S).norm() < 1e-12);
  for (int i = 0; i < 3; ++i) CHECK(c2.anyons[i].theta == is.anyons[i].theta);
}

TEST_CASE("TY center of Z2 matches the doubled Ising data") {
  std::vector<std::vector<Root>> chi{{Root::one(), Root::one()}, {Root::one(), Root::minus_one()}};
  auto ty = ty_center(G("Z2"), chi, +1);
  REQUIRE(ty.rank() == 9);
  std::multiset<std::string> dims;
  for (auto& a : ty.anyons) dims.insert(a.dim.str());
  CHECK(dims == std::multiset<std::string>{"1", "1", "1", "1", "2", "sqrt2", "sqrt2", "sqrt2", "sqrt2"});
  CHECK(ty.total_dim == QDim(4));
  // spin multiset matches Ising x conj(Ising)
  auto is = ising_mtc();
  auto zis = deligne_product(is, conjugate_mtc(is));
  std::multiset<std::string> t1, t2;
  for (auto& a : ty.anyons) t1.insert(a.theta.str());
  for (auto& a : zis.anyons) t2.insert(a.theta.str());
  CHECK(t1 == t2);
}

TEST_CASE("Z(TY(Z2xZ2)) with diagonal bicharacter: 22 anyons, golden spins") {
  auto ty = ty_center(G("Z2xZ2"), bichar_z2k(2, {{1, 0}, {0, 1}}), +1);
  REQUIRE(ty.rank() == 22);
  int d1 = 0, d2 = 0;
  std::multiset<std::string> spins1, spins2;
  for (auto& a : ty.anyons) {
    if (a.dim == QDim(1)) {
      ++d1;
      spins1.insert(a.theta.str());
    } else {
      CHECK(a.dim == QDim(2));
      ++d2;
      spins2.insert(a.theta.str());
    }
  }
  CHECK(d1 == 8);
  CHECK(d2 == 14);
  CHECK(spins1 == std::multiset<std::string>{"1", "1", "1", "1", "-1", "-1", "-1", "-1"});
  // six Y with spins {1,1,1,1,-1,-1} plus eight Z with spins z8^{1,5,7,3}, +-1, +-1
  std::multiset<std::string> want2{"1", "1", "1", "1", "-1", "-1",
                                   "z8", "z8^5", "z8^7", "z8^3", "1", "-1", "1", "-1"};
  CHECK(spins2 == want2);

  // off-diagonal bicharacter differs exactly in the Z-anyon spins
  auto ty2 = ty_center(G("Z2xZ2"), bichar_z2k(2, {{0, 1}, {1, 0}}), +1);
  REQUIRE(ty2.rank() == 22);
  std::multiset<std::string> zspins, zspins2;
  for (int i = 0; i < 22; ++i) {
    if (ty.ty_info->tags[i].kind == 2) zspins.insert(ty.anyons[i].theta.str());
    if (ty2.ty_info->tags[i].kind == 2) zspins2.insert(ty2.anyons[i].theta.str());
  }
  CHECK(zspins != zspins2);
}

TEST_CASE("deligne products") {
  auto z2d = group_double_center(G("Z2"));
  auto d = deligne_product(z2d, z2d);
  CHECK(d.rank() == 16);
  CHECK(d.total_dim == QDim(4));
  auto is = ising_mtc();
  auto zis = deligne_product(is, conjugate_mtc(is));
  auto big = deligne_product(zis, zis);
  CHECK(big.rank() == 81);
  CHECK(big.total_dim == QDim(16));
}

TEST_CASE("doubled theories carry a valid swap* action") {
  auto z2d = group_double_center(G("Z2"));
  auto dbl = doubled_theory(z2d);
  auto sw = swap_star(dbl);
  // T(e_L) = e_R, T(e_L m_R) = m_L e_R
  int eL = dbl.find_label("e_L");
  int eR = dbl.find_label("e_R");
  CHECK(sw.perm[eL] == eR);
  int eLmR = dbl.find_label("e_L m_R");
  int mLeR = dbl.find_label("m_L e_R");
  CHECK(sw.perm[eLmR] == mLeR);

  auto s3d = doubled_theory(group_double_center(G("S3")));
  auto sw3 = swap_star(s3d);
  // the fixed pair through aw_L is its time-reversal partner awb_R
  int x = s3d.find_label("aw_L awb_R");
  CHECK(sw3.perm[x] == x);
  int y = s3d.find_label("aw_L aw_R");
  CHECK(sw3.perm[y] == s3d.find_label("awb_L awb_R"));
  for (int i = 0; i < s3d.rank(); ++i) {
    CHECK(sw3.perm[sw3.perm[i]] == i);
    CHECK(s3d.anyons[sw3.perm[i]].theta == s3d.anyons[i].theta.conj());
  }

  // Ising double: T fixes the layer-diagonal sigma.sigmab pair
  auto is = ising_mtc();
  auto isb = conjugate_mtc(is);
  isb.anyons[0].label = "1b";
  isb.anyons[1].label = "psib";
  isb.anyons[2].label = "sigmab";
  ModularData zis = deligne_product(is, isb);
  // time-reversal within Z(Ising) swaps the two layers
  zis.bar.resize(9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) zis.bar[i * 3 + j] = j * 3 + i;
  auto dbl2 = doubled_theory(zis);
  auto sw2 = swap_star(dbl2);
  int ss = dbl2.find_label("sigma.sigmab_L sigma.sigmab_R");
  CHECK(sw2.perm[ss] == ss);
}

TEST_CASE("S-matrix invariants") {
  for (auto md : {group_double_center(G("Z2xZ2")), group_double_center(G("S3"))}) {
    int r = md.rank();
    Eigen::MatrixXcd S4 = md.S * md.S * md.S * md.S;
    CHECK((S4 - Eigen::MatrixXcd::Identity(r, r)).norm() < 1e-8);
  }
}
