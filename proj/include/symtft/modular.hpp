#pragma once

#include <Eigen/Dense>
#include <memory>
#include <string>
#include <vector>

#include "symtft/cocycle.hpp"
#include "symtft/group.hpp"
#include "symtft/num.hpp"

namespace symtft {

struct Anyon {
  std::string label;
  QDim dim{1, 0};
  Root theta;  // topological spin
};

struct ModularData;

// extra structure for quantum doubles of finite groups
struct GroupDoubleInfo {
  std::shared_ptr<const FiniteGroup> grp;
  std::vector<std::pair<int, int>> labels;      // anyon -> (class, irrep of centralizer)
  std::vector<Subgroup> cents;                  // per class
  std::vector<std::vector<Irrep>> cent_irreps;  // per class
};

// extra structure for centers of Tambara-Yamagami categories
struct TYInfo {
  std::shared_ptr<const FiniteGroup> grp;  // the abelian group A
  std::vector<std::vector<Root>> chi;      // symmetric bicharacter
  int tau_sign = 1;                        // tau = tau_sign / sqrt(|A|)
  // anyon tags: kind 0 = X_{a,eps}, 1 = Y_{a,b}, 2 = Z_{rho,delta}
  struct Tag {
    int kind = 0;
    int a = 0, b = 0;
    Root eps;
    int rho = -1;
    Root delta;
  };
  std::vector<Tag> tags;
  std::vector<std::vector<Root>> rhos;  // projective characters, rhos[r][a]
};

struct DeligneInfo {
  std::shared_ptr<const ModularData> f1, f2;
};

struct SwapStarAction {
  std::vector<int> perm;  // involution on anyon indices
  bool conjugates_scalars = true;
  // diagonal partner: (x_L, sigma_lr[x]_R) is the T-fixed pair through x
  std::vector<int> sigma_lr;
};

struct ModularData {
  std::string name;
  std::vector<Anyon> anyons;
  Eigen::MatrixXcd S;  // normalized, S(0,0) = 1/D
  QDim total_dim;      // D
  std::vector<int> dual;
  std::vector<int> bar;  // time-reversal partner (theta -> conj theta); may be empty
  // sparse fusion: fus[a*rank+b] = {(c, N_ab^c)}
  std::vector<std::vector<std::pair<int, int>>> fus;

  std::shared_ptr<const GroupDoubleInfo> group_info;
  std::shared_ptr<const TYInfo> ty_info;
  std::shared_ptr<const DeligneInfo> deligne_info;
  std::shared_ptr<const SwapStarAction> swap;  // set on doubled theories

  int rank() const { return (int)anyons.size(); }
  int N(int a, int b, int c) const;
  const std::vector<std::pair<int, int>>& fuse(int a, int b) const { return fus[a * rank() + b]; }
  int find_label(const std::string& s) const;
  // monodromy scalar S_ab S_00 / (S_0a S_0b)
  cplx monodromy(int a, int b) const;
  bool is_abelian_anyon(int a) const { return anyons[a].dim == QDim(1); }
  // doubled-theory access: anyon index <-> factor pair
  int pair_index(int x, int y) const;
  std::pair<int, int> pair_split(int i) const;

  void validate() const;  // S unitary/symmetric, S^2 = C, S^4 = 1, Verlinde integral
};

ModularData group_double_center(std::shared_ptr<const FiniteGroup> g);
ModularData ising_mtc();
// Z(TY(A, chi, tau)); chi[a][b] roots of unity, tau = tau_sign/sqrt(|A|).
ModularData ty_center(std::shared_ptr<const FiniteGroup> a, std::vector<std::vector<Root>> chi, int tau_sign);
ModularData deligne_product(const ModularData& m1, const ModularData& m2);
ModularData conjugate_mtc(const ModularData& m);
// Choi-doubled theory: deligne(M, M) with swap* action T(x,y) = (bar y, bar x).
ModularData doubled_theory(const ModularData& m);

// Verlinde fusion coefficients from S (throws on non-integral result).
std::vector<std::vector<std::pair<int, int>>> fusion_from_S(const Eigen::MatrixXcd& S);

// swap* action of a doubled theory, with validation.
SwapStarAction swap_star(const ModularData& doubled);

}  // namespace symtft
