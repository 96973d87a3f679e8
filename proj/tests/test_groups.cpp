#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symtft/cocycle.hpp"
#include "symtft/group.hpp"

using namespace symtft;

TEST_CASE("root of unity arithmetic") {
  Root w(3, 1);
  CHECK(w * w == Root(3, 2));
  CHECK(w * w * w == Root::one());
  CHECK(w.conj() == Root(3, 2));
  CHECK((Root(16, 1) * Root(16, 15)).is_one());
  CHECK(Root(2, 1).sqrt() == Root(4, 1));
  CHECK(approx(Root(8, 3).value(), cplx(-std::sqrt(0.5), std::sqrt(0.5))));
  auto s = snap_root(cplx(0, -1), 8);
  REQUIRE(s.has_value());
  CHECK(*s == Root(4, 3));
}

TEST_CASE("quadratic dimension arithmetic") {
  QDim s2(0, 1);
  CHECK(s2 * s2 == QDim(2));
  CHECK(QDim(1) + s2 * 2 == QDim(1, 2));
  CHECK(QDim(1) < s2);
  CHECK(s2 < QDim(2));
  CHECK(!(QDim(4) < QDim(1, 2)));  // 1 + 2.83 < 4
  CHECK(QDim(1, 2) < QDim(4));
}

TEST_CASE("group builders and class structure") {
  auto s3 = s3_group();
  CHECK(s3.n == 6);
  CHECK(s3.classes.size() == 3);
  std::vector<size_t> sizes;
  for (auto& c : s3.classes) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<size_t>{1, 2, 3});
  // |class| * |centralizer| = |G|
  for (auto& c : s3.classes) CHECK(c.size() * s3.centralizer(c[0]).size() == 6);

  auto d8 = d8_group();
  CHECK(d8.classes.size() == 5);

  auto z2 = build_group("Z2");
  CHECK(z2.n == 2);
  CHECK(z2.classes.size() == 2);

  auto prod = product_group(s3, s3);
  CHECK(prod.n == 36);
  CHECK(prod.classes.size() == 9);
}

TEST_CASE("character tables") {
  auto s3 = s3_group();
  auto irr = character_table(s3);
  REQUIRE(irr.size() == 3);
  int isum = 0;
  for (auto& r : irr) isum += r.dim * r.dim;
  CHECK(isum == 6);
  // chi_E([a]) = -1, chi_E([b]) = 0, chi_P([b]) = -1
  auto& E = irr[2];
  CHECK(E.dim == 2);
  CHECK(approx(E.char_of_elem(s3, 1).value(), cplx(-1)));
  CHECK(approx(E.char_of_elem(s3, 3).value(), cplx(0)));
  auto& P = irr[1];
  CHECK(P.label == "P");
  CHECK(approx(P.char_of_elem(s3, 3).value(), cplx(-1)));

  auto d8 = d8_group();
  auto di = character_table(d8);
  REQUIRE(di.size() == 5);
  int n2 = 0;
  for (auto& r : di)
    if (r.dim == 2) {
      ++n2;
      CHECK(approx(r.char_of_elem(d8, 3).value(), cplx(-2)));  // chi_E([ab]) = -2
    }
  CHECK(n2 == 1);

  // orthogonality of rows
  for (size_t a = 0; a < di.size(); ++a)
    for (size_t b = 0; b < di.size(); ++b) {
      cplx s = 0;
      for (int e = 0; e < d8.n; ++e)
        s += di[a].char_of_elem(d8, e).value() * std::conj(di[b].char_of_elem(d8, e).value());
      s /= double(d8.n);
      CHECK(approx(s, a == b ? cplx(1) : cplx(0)));
    }

  // trivial group
  auto z1 = cyclic_group(1);
  auto ti = character_table(z1);
  CHECK(ti.size() == 1);
  CHECK(ti[0].dim == 1);

  // matrices satisfy the group law and characters (catalog + numeric paths)
  auto f4elems = closure(product_group(s3, s3), {});
  auto s18 = make_subgroup(product_group(s3, s3),
                           closure(product_group(s3, s3), {product_group(s3, s3).element_by_name("(a,1)"),
                                                           product_group(s3, s3).element_by_name("(1,a)"),
                                                           product_group(s3, s3).element_by_name("(b,b)")}),
                           "F4");
  CHECK(s18.grp.n == 18);
  auto i18 = character_table(s18.grp);
  ensure_irrep_matrices(s18.grp, i18);
  for (auto& r : i18) CHECK((int)r.mats.size() == 18);
}

TEST_CASE("cocycle representatives and slant products") {
  auto z2 = std::make_shared<FiniteGroup>(build_group("Z2"));
  CHECK(cocycle_representatives(z2).size() == 1);

  auto z4 = std::make_shared<FiniteGroup>(build_group("Z4"));
  CHECK(cocycle_representatives(z4).size() == 1);

  auto s3 = std::make_shared<FiniteGroup>(s3_group());
  CHECK(cocycle_representatives(s3).size() == 1);

  auto z22 = std::make_shared<FiniteGroup>(z2k_group(2));
  auto reps = cocycle_representatives(z22);
  REQUIRE(reps.size() == 2);
  CHECK(reps[0].is_trivial_valued());
  CHECK(check_cocycle(reps[1]));
  // the nontrivial class matches beta((p1,q1),(p2,q2)) = (-1)^{p1 q2}
  auto beta = bilinear_cocycle_z2k(z22, {{0, 1}, {0, 0}});
  CHECK(check_cocycle(beta));
  CHECK(cohomologous(reps[1], beta));
  CHECK(!cohomologous(reps[0], beta));

  auto d8 = std::make_shared<FiniteGroup>(d8_group());
  CHECK(cocycle_representatives(d8).size() == 2);

  auto z23 = std::make_shared<FiniteGroup>(z2k_group(3));
  CHECK(cocycle_representatives(z23).size() == 8);

  // slant products: trivial cocycle -> identically 1
  auto triv = trivial_cocycle(s3);
  for (int f = 0; f < 6; ++f)
    for (auto& v : slant_product(triv, f)) CHECK(v.is_one());
  // nontrivial Z2xZ2: f = a -> (-1)^q, i.e. -1 exactly on b-containing elements
  {
    auto sl = slant_product(beta, z22->element_by_name("a"));
    CHECK(sl[z22->element_by_name("1")].is_one());
    CHECK(sl[z22->element_by_name("a")].is_one());
    CHECK(sl[z22->element_by_name("b")] == Root::minus_one());
    CHECK(sl[z22->element_by_name("ab")] == Root::minus_one());
    // normalization at f = identity
    auto sl0 = slant_product(beta, 0);
    for (auto& v : sl0) CHECK(v.is_one());
  }
}
