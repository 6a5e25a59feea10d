#pragma once

#include <optional>
#include <utility>

#include "ooc/model.hpp"

namespace ooc {

// Existence predicates (the admission conditions for the solvers).
bool extended_skolem_exists(int v, int k);
bool near_skolem_exists(int v, int m);
bool langford_exists(int v, int d);
bool triple_partition_exists(int s, int d);
bool frame_starter_exists(int n, int g = 2);

// Pairs (a_i, b_i) with b_i - a_i = i partitioning [1, 2v+1] \ {k}.
SkolemSequence extended_skolem(int v, int k);

// Same, but the given pair must appear (at difference b - a).
SkolemSequence extended_skolem_pinned(int v, int k, std::pair<int, int> pin);

// Pairs partitioning [1, 2v-2] with differences [1, v] \ {m}.
SkolemSequence near_skolem(int v, int m);

// Pairs partitioning [1, 2v] with differences [d, d+v-1].
SkolemSequence langford(int v, int d);

// Triples {a,b,c}, a + b = c, partitioning [d, d+3s] \ {d+3s-1}.
SkolemSequence triple_partition(int s, int d);

// (n-g)/2 pairs partitioning Z_n minus the order-g subgroup whose +-
// differences also tile it. Only g = 2 is supported.
FrameStarter frame_starter(int n, int g = 2);

// Validators (run on every solver output before return).
bool valid_sequence(const SkolemSequence& s);
bool valid_starter(const FrameStarter& f);

}  // namespace ooc
