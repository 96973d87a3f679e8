#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symtft/algebra.hpp"
#include "symtft/modular.hpp"

namespace symtft {

// action of a symmetry-generator anyon on a charge anyon, from the S-matrix:
// d_g S_{cg} S_00 / (S_0c S_0g); equals the character value for group doubles.
cplx symmetry_action(const ModularData& m, int generator, int charge);

struct OrderParam {
  int anyon = 0;
  int n_sym = 0, n_phys = 0;
  bool t_symmetric = false;
  std::string label;
};

// a named symmetry generator of the doubled (or reduced) theory
struct GenSpec {
  std::string name;
  int strong_anyon = -1;  // bulk line generating the L-copy symmetry (-1 if weak-only)
  int strong_anyon_R = -1;
  int diag_anyon = -1;  // bulk line generating the weak (diagonal) symmetry
  bool weak_only = false;
  int group_elem = -1;  // for group-theoretical classification
};

struct GenVerdict {
  std::string name;
  bool strong_broken = false;
  bool weak_broken = false;
  std::string verdict;  // "SSB" | "SWSSB" | "preserved"
};

struct SandwichReport {
  std::vector<OrderParam> order_params;  // tunneling anyons, vacuum included
  long long n_total = 0;                 // N_L
  long long n_t = 0;                     // N_L^T
  std::vector<int> string_orders;       // support of l_phys outside l_sym
  std::vector<GenVerdict> verdicts;
  bool spt_nontrivial = false;
  std::string phase_label;
};

// group-theoretical data needed for non-abelian classification
struct GroupSandwichContext {
  std::shared_ptr<const FiniteGroup> grp;  // G
  std::vector<int> ftilde;                 // subgroup of GxG (parent indices)
  std::vector<Root> slant_char;            // 1-dim character on ftilde (from the cocycle); empty = trivial
};

SandwichReport analyze_sandwich(const ModularData& m, const AlgebraObject& l_sym, const AlgebraObject& l_phys,
                                const std::vector<GenSpec>& gens,
                                const std::optional<GroupSandwichContext>& ctx = std::nullopt);

std::string classify_phase(const SandwichReport& r);

// Vacuum basis of a group-theoretical sandwich: class sums of Ftilde, their
// fusion table, and the orthogonal idempotents (one per irrep of Ftilde).
struct VacuumBasis {
  std::vector<std::string> op_labels;                    // class-sum operators O_[f]
  std::vector<std::vector<std::vector<long long>>> fusion;  // O_i O_j = sum_k c_ijk O_k
  std::vector<std::vector<cplx>> combos;                 // v_l = sum_c conj(chi_l(c)) O_c
  std::vector<std::vector<cplx>> idempotents;            // e_l = (d_l/|F|) v_l
};
VacuumBasis vacua_basis(const FiniteGroup& gtilde, const std::vector<int>& ftilde_elems);

}  // namespace symtft
