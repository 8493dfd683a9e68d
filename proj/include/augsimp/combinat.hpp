#pragma once

#include <vector>

#include "augsimp/numeric.hpp"

namespace augsimp {

// C(p, q); zero whenever q > p, q < 0 or p < 0.
BigInt binomial(long p, long q);

BigInt factorial(long n);

// Stirling numbers of the second kind, memoized recurrence.
BigInt stirling2(long p, long q);

// (p+1)! S(n+1, p+1): chains of nonempty subsets ending at {0..n}.
BigInt breve_cad_plus_entry(Nat1 n, Nat1 p);

// sum_{k=p}^{n} C(n+1, k+1) breve_cad_plus_entry(k, p).
BigInt cad_plus_entry(Nat1 n, Nat1 p);

enum class Anchor { unanchored, anchored };

// Oracle: counts chains of nonempty subsets N_0 < N_1 < ... < N_p of {0..n}
// by walking the subset lattice. Cost grows like 3^(n+1).
BigInt enumerate_strict_chains(Nat1 n, Nat1 p, Anchor anchor);

// All of the above at once; element p+1 holds the count for length p+1.
std::vector<BigInt> strict_chain_counts(Nat1 n, Anchor anchor);

// Oracle: number of partitions of a p-set into q nonempty blocks,
// by enumerating restricted growth strings.
BigInt count_set_partitions(int p, int q);

}  // namespace augsimp
