#pragma once

#include "calogero/rational.hpp"

#include <string>
#include <vector>

namespace calogero {

// Weakly decreasing vector of nonnegative integers, fixed length n.
using Partition = std::vector<int>;

bool is_partition(const Partition& lam);
int weight(const Partition& lam);

// Partial sums comparison: lam <= mu iff sum_{j<=k} lam_j <= sum_{j<=k} mu_j
// for every k; weights need not match.  Throws on length mismatch.
bool dominance_leq(const Partition& lam, const Partition& mu);
bool dominance_lt(const Partition& lam, const Partition& mu);

// All partitions of length n with |lam| = w (resp. |lam| <= maxw),
// in a fixed deterministic order.
std::vector<Partition> partitions_of_weight(int n, int w);
std::vector<Partition> partitions_leq_weight(int n, int maxw);

// { mu : mu < lam } in dominance order, including lower weights.
std::vector<Partition> dominated_by(const Partition& lam);

// e_r(lam_1..lam_n), elementary symmetric polynomial of the parts.
Integer elementary_symmetric_parts(int r, const Partition& lam);

std::string partition_str(const Partition& lam);
Partition parse_partition(const std::string& s);  // "2,1,0"

}  // namespace calogero
