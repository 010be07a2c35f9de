#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "trunclab/errors.hpp"

namespace trunclab {

/// Subsets of a label universe of at most 64 elements, one bit per label.
using Mask = std::uint64_t;

inline bool mask_subset(Mask a, Mask b) { return (a & ~b) == 0; }
inline int mask_count(Mask m) { return __builtin_popcountll(m); }

/// A finite partial order on opaque labels. `below(i)` is the principal
/// downset of element i, including i itself.
class Poset {
 public:
  Poset() = default;

  /// Builds from an explicit <= relation given as index pairs (lo, hi).
  /// Throws PosetError naming the violated law (reflexivity, antisymmetry,
  /// transitivity) when the pairs are not a partial order.
  static Poset from_relation(std::vector<std::string> labels,
                             const std::vector<std::pair<int, int>>& leq_pairs);

  /// Builds from covering pairs; the reflexive-transitive closure is taken.
  /// Throws PosetError (antisymmetry) if the covers contain a cycle.
  static Poset from_covers(std::vector<std::string> labels,
                           const std::vector<std::pair<int, int>>& covers);

  static Poset antichain(int n, const std::string& label_prefix = "x");
  static Poset chain(int n, const std::string& label_prefix = "c");

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool leq(int i, int j) const { return (below_[j] >> i) & 1; }
  Mask below(int i) const { return below_[i]; }
  /// Principal upset of i as a mask.
  Mask above(int i) const;

  /// Induced subposet on the labels selected by `keep`; element order is
  /// preserved and labels are carried over.
  Poset induced(Mask keep) const;

  /// Adds a fresh element incomparable to everything else.
  Poset with_isolated(const std::string& label) const;

  /// Parses the structured text format: `labels a b c` then `cover a b`
  /// lines. Throws ParseError with line context.
  static Poset parse(std::istream& in);
  std::string serialize() const;

 private:
  std::vector<std::string> labels_;
  std::vector<Mask> below_;
};

}  // namespace trunclab
