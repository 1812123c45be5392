#ifndef GAUDINLAB_QT_HPP
#define GAUDINLAB_QT_HPP

#include <vector>

#include "gaudinlab/partition.hpp"

namespace gaudinlab {

// Basis transition data between monomial and power-sum symmetric functions
// at one weight. Entries are plain rationals: the transition is independent
// of q, t and of the number of variables once that number reaches the
// weight. Rows follow `parts`, the fixed partition order (descending
// lexicographic, as produced by partitions_of_weight).
struct BasisTransition {
  int weight = 0;
  std::vector<Partition> parts;
  // p_in_m[mu][lambda]: coefficient of m_lambda in p_mu.
  std::vector<std::vector<Rational>> p_in_m;
  // m_in_p[lambda][mu]: coefficient of p_mu in m_lambda.
  std::vector<std::vector<Rational>> m_in_p;
};

// Computed once per weight by expanding each power-sum product in `weight`
// many scratch variables and collecting monomial orbits, then inverting over
// the rationals. Weight capped at 6: the tables grow like the partition
// count squared and nothing downstream needs more.
const BasisTransition& basis_transition(int weight);

int basis_transition_bound();

}  // namespace gaudinlab

#endif
