#pragma once

#include <stdexcept>
#include <string>

namespace oag {

// Base class for all errors raised by the library. Each named error below
// corresponds to a distinct failure mode of one of the set operations so
// callers (and the CLI) can report them precisely.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct RankMismatch : Error {
  explicit RankMismatch(const std::string& w = "rank mismatch") : Error(w) {}
};

struct NotRationallyDependent : Error {
  explicit NotRationallyDependent(const std::string& w = "elements are not rationally dependent")
      : Error(w) {}
};

struct NonPositive : Error {
  explicit NonPositive(const std::string& w = "argument must be positive") : Error(w) {}
};

struct EmptySet : Error {
  explicit EmptySet(const std::string& w = "set is empty") : Error(w) {}
};

struct UnboundedBelow : Error {
  explicit UnboundedBelow(const std::string& w = "set is unbounded below") : Error(w) {}
};

struct UnboundedAbove : Error {
  explicit UnboundedAbove(const std::string& w = "set is unbounded above") : Error(w) {}
};

struct NoSuccessor : Error {
  explicit NoSuccessor(const std::string& w = "no element above") : Error(w) {}
};

struct TooSmall : Error {
  explicit TooSmall(const std::string& w = "set has fewer than two elements") : Error(w) {}
};

struct OverlapError : Error {
  explicit OverlapError(const std::string& w) : Error(w) {}
};

struct EmptyPattern : Error {
  explicit EmptyPattern(const std::string& w = "block pattern must be nonempty") : Error(w) {}
};

struct NotRepresentable : Error {
  explicit NotRepresentable(const std::string& w) : Error(w) {}
};

struct NotMember : Error {
  explicit NotMember(const std::string& w = "point is not a member of the set") : Error(w) {}
};

struct IsMaximal : Error {
  explicit IsMaximal(const std::string& w = "element is maximal") : Error(w) {}
};

// Raised where a point has elements above it but no least one.  The group
// model admits such configurations at galaxy boundaries; a definably
// complete structure would not.
struct NoLeastAbove : Error {
  explicit NoLeastAbove(const std::string& w = "no least element above") : Error(w) {}
};

struct NotWellOrderedAbove : Error {
  explicit NotWellOrderedAbove(const std::string& w = "window has no least element") : Error(w) {}
};

struct Exhausted : Error {
  explicit Exhausted(const std::string& w = "difference iteration exhausted") : Error(w) {}
};

struct FiniteChain : Error {
  explicit FiniteChain(const std::string& w = "chain is finite on the right") : Error(w) {}
};

struct FiniteWord : Error {
  explicit FiniteWord(const std::string& w = "word has no infinite right side") : Error(w) {}
};

struct BoundViolated : Error {
  int k;
  explicit BoundViolated(int k_)
      : Error("factor count bound violated at length " + std::to_string(k_)), k(k_) {}
};

struct AlphabetMismatch : Error {
  explicit AlphabetMismatch(const std::string& w = "word letter outside difference alphabet")
      : Error(w) {}
};

struct NotUniformized : Error {
  explicit NotUniformized(const std::string& w = "set is not uniformized") : Error(w) {}
};

struct NotPseudoArithmetic : Error {
  explicit NotPseudoArithmetic(const std::string& w = "set is not pseudo-arithmetic") : Error(w) {}
};

struct DifferentEta : Error {
  explicit DifferentEta(const std::string& w = "steps differ") : Error(w) {}
};

struct DifferentMin : Error {
  explicit DifferentMin(const std::string& w = "least elements differ") : Error(w) {}
};

struct IncompatibleEtas : Error {
  explicit IncompatibleEtas(const std::string& w = "steps lie in distinct Archimedean classes")
      : Error(w) {}
};

struct NotNormalized : Error {
  explicit NotNormalized(const std::string& w = "piece is not normalized to least element 0")
      : Error(w) {}
};

struct NotAxisAligned : Error {
  explicit NotAxisAligned(const std::string& w = "step is not aligned with a single coordinate")
      : Error(w) {}
};

struct NotDiscrete : Error {
  explicit NotDiscrete(const std::string& w = "set has interval components") : Error(w) {}
};

struct NotLatticeAligned : Error {
  explicit NotLatticeAligned(const std::string& w = "set does not fit a rational lattice")
      : Error(w) {}
};

struct NotDecomposable : Error {
  explicit NotDecomposable(const std::string& w) : Error(w) {}
};

struct HypothesisFailed : Error {
  int level;
  explicit HypothesisFailed(int level_)
      : Error("interlacing hypothesis failed at level " + std::to_string(level_)), level(level_) {}
};

struct TooFewElements : Error {
  explicit TooFewElements(const std::string& w = "not enough elements to build the pattern")
      : Error(w) {}
};

struct SyntaxError : Error {
  int line, col;
  SyntaxError(int line_, int col_, const std::string& w)
      : Error("syntax error at " + std::to_string(line_) + ":" + std::to_string(col_) + ": " + w),
        line(line_), col(col_) {}
};

}  // namespace oag
