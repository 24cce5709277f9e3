#pragma once

// Brute-force oracles and random instance generators used by the unit and
// acceptance suites.  Everything here recomputes results by naive
// enumeration, independent of the symbolic paths it checks.

#include <random>
#include <set>
#include <vector>

#include "oag/calculus.hpp"
#include "oag/semilinear.hpp"
#include "oag/setrep.hpp"
#include "oag/stdform.hpp"
#include "oag/words.hpp"

namespace oag::testing {

using Rng = std::mt19937_64;

// --- brute-force oracles ----------------------------------------------------

// Successive differences over the first `count` elements of d (from its
// minimum).  With count >= required_window(d) this is exactly diff_set(d).
std::set<GroupElement> brute_diffs(const BlockSet& d, int count);

// Number of elements that closes every block's threshold window plus two
// full periods, so brute_diffs sees every difference kind.
long long required_window(const BlockSet& d);

// Minimal eventual period of an ultimately periodic word given as prefix +
// repeating tail, by direct search.
int brute_min_period(const std::vector<int>& prefix, const std::vector<int>& tail);

// Offset from which the word is m-periodic, by direct scan.
long long brute_period_offset(const std::vector<int>& prefix, const std::vector<int>& tail, int m);

// Minimal root of a finite word by direct comparison over all lengths.
std::vector<int> brute_primitive_root(const std::vector<int>& w);

// Number of infinitely recurring k-factors: factors of the repeated tail.
int brute_factor_count(const std::vector<int>& tail, int k);

// --- random generators -------------------------------------------------------

// Rational with numerator in [-bound, bound] and denominator in [1, den].
Rational rand_rational(Rng& rng, int bound, int den);
Rational rand_positive_rational(Rng& rng, int bound, int den);

IndexSet rand_index_set(Rng& rng, bool bounded_below = false);

// Random separated BlockSet: rank 2, at most max_blocks blocks, pattern
// length <= max_pattern, rational denominators <= 8, every block bounded
// below, nonnegative.  Galaxies are stacked along coordinate 0 so the
// separation invariant holds by construction.  With closable=true only the
// last block may be infinite, so enumeration windows close every threshold;
// closable=false also produces infinite lower galaxies.
BlockSet rand_blockset(Rng& rng, int max_blocks = 5, int max_pattern = 4, bool closable = true);

// Random pseudo-arithmetic set {k*eta : 0 <= k < n} (n may be "infinite").
BlockSet pseudo_arith(const GroupElement& eta, long long n_or_negative_for_infinite);

// Random eventually periodic word: prefix length <= 20, period <= 12,
// alphabet <= max_alpha.
struct RandomWord {
  std::vector<int> prefix, tail;
  DifferenceWord word;  // alphabet filled with placeholder elements
};
RandomWord rand_word(Rng& rng, int max_prefix, int max_period, int max_alpha);

StdForm rand_stdform(Rng& rng, int max_families = 3);

// Convenience: single-block set from base/pattern/indices.
BlockSet make_set(int rank, const GroupElement& base, std::vector<GroupElement> pattern,
                  const IndexSet& k, bool nonneg = false);

GroupElement elem2(const Rational& a, const Rational& b);

}  // namespace oag::testing
