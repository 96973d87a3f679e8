#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symtft/cocycle.hpp"
#include "symtft/modular.hpp"

namespace symtft {

struct AlgebraObject {
  std::vector<int> mult;  // multiplicity per anyon
  QDim dim{0, 0};
  bool is_lagrangian = false;

  bool operator==(const AlgebraObject& o) const { return mult == o.mult; }
  bool operator<(const AlgebraObject& o) const { return mult < o.mult; }
  std::string str(const ModularData& m) const;  // e.g. "1 + eL eR + 2 X(..)"
};

AlgebraObject algebra_from_labels(const ModularData& m, const std::vector<std::pair<std::string, int>>& terms);

struct MixedStateFlags {
  bool t_invariant = false;
  bool positive = false;
  bool factorizes = false;
  std::optional<std::pair<int, int>> witness;  // factor-pair indices violating positivity
};

struct EnumerationBudget {
  long long node_limit = 200'000'000;
};

// All condensable-algebra candidates: n_0 = 1, n_a <= d_a, bosonic support,
// dual-symmetric, trivial mutual monodromy whenever an abelian anyon is
// involved, fusion closure n_a n_b <= sum_c N_ab^c n_c, dim <= max_dim.
// Sorted lexicographically by multiplicity vector.
std::vector<AlgebraObject> enumerate_condensables(const ModularData& m, QDim max_dim,
                                                  EnumerationBudget budget = {});

MixedStateFlags mixed_state_filter(const ModularData& m, const AlgebraObject& alg);

// The gapped-boundary Lagrangian algebra of a doubled group center labeled by
// a subgroup Ftilde of GxG (parent element indices) and a 2-cocycle on it.
AlgebraObject group_boundary_algebra(const ModularData& doubled, const std::vector<int>& ftilde_elems,
                                     const Cocycle2& beta);

// Convenience: the product of the canonical per-factor boundaries (strong form).
AlgebraObject strong_symmetry_boundary(const ModularData& doubled, const AlgebraObject& per_factor);
// Canonical Dirichlet (charge) boundary of a group double: sum_G dim(G) ([1],G).
AlgebraObject charge_boundary(const ModularData& group_double);
// Canonical Neumann (flux) boundary: sum over classes ([g],1).
AlgebraObject flux_boundary(const ModularData& group_double);

}  // namespace symtft
