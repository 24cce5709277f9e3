#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oag/calculus.hpp"

namespace oag {

// A sigma-interval: a convex stretch of D whose interior chains all follow
// one cyclic difference pattern sigma, with endpoint chains eventually
// periodic of that pattern from the witnesses on.  Endpoints are elements
// of D; an absent endpoint marks the stretch as cofinal/coinitial in its
// chain run (the representation admits galaxy-cofinal blocks which a
// definably complete structure could not separate by a point of D).
struct SigmaInterval {
  std::optional<GroupElement> lo, hi;  // witnesses a, b in D when present
  std::vector<GroupElement> sigma;     // word of length mu
  int first_chain, last_chain;         // covered chain range
  // Per covered chain: the covered position range (nullopt = unbounded).
  struct ChainRange {
    int chain;
    std::optional<long long> pos_from, pos_to;
  };
  std::vector<ChainRange> ranges;
};

struct SigmaCover {
  std::vector<SigmaInterval> intervals;
  std::vector<GroupElement> leftover;  // finitely many uncovered points
  long long mu = 1;
};

struct UniformPiece {
  BlockSet piece;
  long long uniform_bound;  // N(D_i): windows of this many elements hit all of D_i'
};

// Finite convex partition into uniformized pieces (every sufficiently long
// convex run inside a piece realizes every difference of that piece).
std::vector<UniformPiece> uniformize(const BlockSet& d);

// The uniformization bound for d itself, when d is already uniformized.
std::optional<long long> uniform_bound(const BlockSet& d);

// Partition (not necessarily convex) into definable subsets whose
// difference sets each live in a single Archimedean class.  Requires d
// uniformized; re-uniformizes remainders internally.
std::vector<BlockSet> arch_partition(const BlockSet& d);

// The subset of d whose forward difference word starts with sigma.
BlockSet p_sigma(const BlockSet& d, const std::vector<GroupElement>& sigma);

// Pairwise disjoint sigma-intervals covering all but finitely many points.
// Requires d uniformized with a single-class difference set.
SigmaCover sigma_interval_cover(const BlockSet& d);

struct PseudoArithPiece {
  BlockSet set;
  GroupElement eta;  // the unique difference of the piece
};

struct Decomposition {
  std::vector<PseudoArithPiece> pieces;
  std::vector<GroupElement> points;
  std::vector<int> interval_piece_counts;  // pieces produced per sigma-interval
  std::vector<int> generator_lengths;      // |generator(sigma)| per interval
  SigmaCover cover_info;                   // of the last processed component
};

// Full pipeline: uniformize, split by Archimedean class, cover by
// sigma-intervals, and split each interval into generator-many
// pseudo-arithmetic pieces; the leftovers are isolated points.
Decomposition pseudo_arith_decomp(const BlockSet& d);

enum class SegmentOrder { E0_prefix_of_E1, E1_prefix_of_E0, Equal };

// Trichotomy for two pseudo-arithmetic sets with the same step and least
// element 0: one is an initial segment of the other.
SegmentOrder initial_segment_check(const BlockSet& e0, const BlockSet& e1);

// GroupElement-word wrappers over the integer-word routines.
std::vector<GroupElement> primitive_generator_word(const std::vector<GroupElement>& sigma);

}  // namespace oag
