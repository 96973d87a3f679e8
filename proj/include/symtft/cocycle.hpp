#pragma once

#include <memory>
#include <string>
#include <vector>

#include "symtft/group.hpp"
#include "symtft/num.hpp"

namespace symtft {

// Normalized U(1)-valued 2-cocycle on a finite group.
struct Cocycle2 {
  std::shared_ptr<const FiniteGroup> group;
  std::vector<std::vector<Root>> val;  // val[g][h]
  std::string class_id;

  Root operator()(int g, int h) const { return val[g][h]; }
  bool is_trivial_valued() const;
};

Cocycle2 trivial_cocycle(std::shared_ptr<const FiniteGroup> g);
// Explicit cocycle from a bilinear form on Z2^k:  beta(g,h) = (-1)^{sum_ij g_i B_ij h_j}.
Cocycle2 bilinear_cocycle_z2k(std::shared_ptr<const FiniteGroup> g, const std::vector<std::vector<int>>& B);

bool check_cocycle(const Cocycle2& b);
bool cohomologous(const Cocycle2& a, const Cocycle2& b);

// One representative per class of H^2(G,U(1)), trivial class first.
// Exhaustive linear solve; throws for groups outside the supported range.
std::vector<Cocycle2> cocycle_representatives(std::shared_ptr<const FiniteGroup> g);

// slant product  (i_f beta)(x) = beta(f,x) / beta(x, x^-1 f x), a function on G.
std::vector<Root> slant_product(const Cocycle2& beta, int f);

}  // namespace symtft
