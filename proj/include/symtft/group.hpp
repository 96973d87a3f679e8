#pragma once

#include <Eigen/Dense>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "symtft/num.hpp"

namespace symtft {

// A finite group given by its multiplication table on element indices.
// Index 0 is always the identity; elements are ordered identity-first,
// then by shortlex generator words.
struct FiniteGroup {
  int n = 1;
  std::string name;
  std::vector<std::vector<int>> mul;  // mul[g][h] = g*h
  std::vector<int> inv;
  std::vector<int> generators;
  std::vector<std::string> elem_name;

  // conjugacy data (filled by finalize())
  std::vector<std::vector<int>> classes;  // class 0 = {identity}
  std::vector<int> class_of;
  std::vector<int> elem_order;
  std::vector<std::string> class_name;

  int op(int g, int h) const { return mul[g][h]; }
  int conj(int g, int x) const { return mul[mul[x][g]][inv[x]]; }  // x g x^-1
  int exponent() const;
  std::vector<int> centralizer(int g) const;
  bool is_abelian() const;
  int element_by_name(const std::string& s) const;

  void finalize();  // validates table, computes classes/orders/names
};

FiniteGroup cyclic_group(int n);
FiniteGroup z2k_group(int k);
FiniteGroup s3_group();
FiniteGroup d8_group();  // (Z2^a x Z2^b) : Z2^c, c swaps a,b
FiniteGroup product_group(const FiniteGroup& a, const FiniteGroup& b);
FiniteGroup group_from_table(std::vector<std::vector<int>> mul, std::string name);
// Built-ins: "Z2","Z3","Z4","Z2xZ2","Z2^k","S3","D8" and products via "x".
FiniteGroup build_group(const std::string& spec);

// Subgroup of `parent` spanned by `elems` (must be closed); carries the
// embedding back into the parent.
struct Subgroup {
  FiniteGroup grp;
  std::vector<int> to_parent;    // subgroup index -> parent index
  std::map<int, int> from_parent;
  bool contains(int parent_elem) const { return from_parent.count(parent_elem) > 0; }
};
Subgroup make_subgroup(const FiniteGroup& parent, std::vector<int> elems, std::string name);
std::vector<int> closure(const FiniteGroup& parent, std::vector<int> gens);

struct Irrep {
  std::string label;
  int dim = 1;
  std::vector<CycSum> chars;           // indexed by class
  std::vector<Eigen::MatrixXcd> mats;  // indexed by element; may be empty
  CycSum char_of_elem(const FiniteGroup& g, int e) const { return chars[g.class_of[e]]; }
};

// Complete character table (Burnside class-sum algorithm, values snapped to
// exact cyclotomics). Deterministic order: by dimension, then characters.
std::vector<Irrep> character_table(const FiniteGroup& g);

// Fill in unitary representation matrices for every irrep (exact catalog for
// cyclic and S3/D8 factors, numeric isotypic extraction otherwise).
void ensure_irrep_matrices(const FiniteGroup& g, std::vector<Irrep>& irreps);

// <chi_a * chi_b, chi_c> multiplicity of c in a x b.
int tensor_multiplicity(const FiniteGroup& g, const std::vector<Irrep>& irreps, int a, int b, int c);
// index of the conjugate irrep
int conjugate_irrep(const FiniteGroup& g, const std::vector<Irrep>& irreps, int a);
// multiplicity of the trivial rep of `sub` (twisted by the 1-dim character
// `chi_sub`, indexed by subgroup element) in the restriction of irrep `a`.
int restriction_multiplicity(const FiniteGroup& g, const std::vector<Irrep>& irreps, int a,
                             const Subgroup& sub, const std::vector<Root>& chi_sub);

}  // namespace symtft
