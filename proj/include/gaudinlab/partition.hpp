#ifndef GAUDINLAB_PARTITION_HPP
#define GAUDINLAB_PARTITION_HPP

#include <vector>

#include "gaudinlab/rational.hpp"

namespace gaudinlab {

// Compositions are plain integer vectors; partitions are weakly decreasing
// compositions with nonnegative parts (trailing zeros allowed and ignored
// for identity).
using Composition = std::vector<int>;
using Partition = std::vector<int>;

int weight(const Composition& v);
bool is_partition(const Composition& v);
Partition trimmed(const Partition& p);                 // drop trailing zeros
Partition padded(const Partition& p, int len);         // extend with zeros
Partition sorted_decreasing(const Composition& v);

// All partitions of weight k with at most max_len parts (max_len < 0 means
// unbounded), in descending lexicographic order.
std::vector<Partition> partitions_of_weight(int k, int max_len = -1);

// a <= b in dominance order (same weight required: WeightMismatch).
bool dominance_leq(const Partition& a, const Partition& b);

// Strict total order refining dominance: compare weights first, then
// descending lexicographic within a weight class (lexicographic order is a
// linear extension of dominance, so incomparable pairs are broken by it).
bool partition_total_less(const Partition& a, const Partition& b);

// z_lambda = prod_i i^{m_i} m_i!, the centraliser size in the power-sum
// scalar product.
Rational z_lambda(const Partition& p);

// Multiplicity vector m[i] = #parts equal to i, with m[0] counting the
// padding zeros up to length n.
std::vector<int> part_multiplicities(const Partition& p, int n);

// Diagram containment for weakly increasing flag vectors of equal length.
bool flag_contains(const Composition& outer, const Composition& inner);

// All distinct permutations of the padded partition (exponent patterns of
// the monomial symmetric function in n variables).
std::vector<std::vector<int>> distinct_permutations(const Partition& p, int n);

}  // namespace gaudinlab

#endif
