#pragma once

#include <string>
#include <vector>

#include "sfill/fill.hpp"

namespace sfill {

enum class HamiltonianOutcome { Cycle, Nonexistent, Near };

const char* outcome_name(HamiltonianOutcome o);

struct HamiltonianResult {
  int n = 0;
  int d = 0;
  Field field = Field::F2;
  HamiltonianOutcome outcome = HamiltonianOutcome::Cycle;
  Simplex sigma;
  Chain cycle;               // the cycle, or the near-cycle
  std::int64_t deficit = 0;  // deficit of the filling of the boundary of sigma
  std::string reason;
  std::string note;
  FillCertificate certificate;  // filling of the boundary of sigma
};

// Z = F - sigma for a filling F of the boundary of sigma.
Chain simple_cycle_from_filling(const Chain& filling, Simplex sigma);

// Simple 2-cycle of size C(n-1,2)+1 in K_n^2, built from a 0-deficit filling
// of a triangle boundary. Over F2 this needs n = 0,3 mod 4; otherwise the
// outcome is Nonexistent and `cycle` holds a near-cycle of size C(n-1,2).
// Over Q the cycle exists for n = 4 and n >= 6; at n = 5 the exact search
// shows it does not.
HamiltonianResult hamiltonian_2cycle(int n, Field field);

// Simple 3-cycle of size C(n-1,3)+1 over F2 when C(n-2,2) is odd, else a
// near-cycle of size C(n-1,3) (outcome Near, deficit 1). Requires n >= 7.
HamiltonianResult hamiltonian_3cycle(int n);

struct CollapseStep {
  Simplex face;     // (d-1)-face of degree 1 at removal time
  Simplex removed;  // its unique d-simplex
};

struct CollapseReport {
  bool collapsed_fully = false;
  std::vector<CollapseStep> sequence;
  std::vector<Simplex> residue;
};

// Greedy elementary collapses of a pure d-complex, always taking the first
// exposed face in colex order. For this d-to-(d-1) notion the order does not
// change the outcome.
CollapseReport collapse_check(const std::vector<Simplex>& facets);

struct NonCollapsibleTree {
  Chain tree;
  Chain cycle;
  Simplex removed;
};

// Removes from a Hamiltonian F2 d-cycle a simplex whose faces all have degree
// >= 4; the rest is a d-hypertree with no free face.
NonCollapsibleTree non_collapsible_tree(int n, int d);

}  // namespace sfill
