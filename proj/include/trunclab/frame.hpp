#pragma once

#include <memory>
#include <string>
#include <vector>

#include "trunclab/poset.hpp"

namespace trunclab {

class FiniteFrame;
using FramePtr = std::shared_ptr<const FiniteFrame>;

/// A finite frame presented concretely: a family of subsets of a label
/// universe, closed under union and intersection. Joins are unions and
/// meets are intersections, so the frame laws hold structurally.
///
/// The canonical constructor is `downsets`, the Birkhoff lattice of a
/// poset of join-irreducibles; sublattices (filter subframes, quotients)
/// reuse the same representation.
class FiniteFrame {
 public:
  /// Downset lattice of `base`; at most 2^|base| elements.
  static FramePtr downsets(const Poset& base);

  /// Wraps an explicit element family; verifies closure under union and
  /// intersection. `atom_labels` names the universe bits.
  static FramePtr from_elements(std::vector<std::string> atom_labels,
                                std::vector<Mask> elements);

  int universe() const { return static_cast<int>(atom_labels_.size()); }
  const std::string& atom_label(int bit) const { return atom_labels_[bit]; }

  int size() const { return static_cast<int>(elems_.size()); }
  const std::vector<Mask>& elements() const { return elems_; }
  bool contains(Mask a) const;
  /// Index in `elements()`; throws MembershipError if absent.
  int index(Mask a) const;

  Mask bottom() const { return bottom_; }
  Mask top() const { return top_; }
  Mask join(Mask a, Mask b) const;
  Mask meet(Mask a, Mask b) const;
  bool leq(Mask a, Mask b) const;

  /// Heyting arrow: the largest c with c /\ a <= b.
  Mask heyting_arrow(Mask a, Mask b) const;
  /// a* = arrow(a, bottom).
  Mask pseudocomplement(Mask a) const;
  /// b is rather below a: b* \/ a = top.
  bool rather_below(Mask b, Mask a) const;
  /// Every element is the join of the elements rather below it.
  bool is_regular() const;
  /// Every element has a complement.
  bool is_boolean() const;
  bool is_complemented(Mask a) const;

  /// Minimal elements strictly above bottom.
  std::vector<Mask> atoms() const;
  /// Elements that are not the join of their strict predecessors.
  std::vector<Mask> join_irreducibles() const;
  /// True when the frame is Boolean and every element is a join of atoms
  /// that are pairwise disjoint modulo bottom (i.e. a finite powerset).
  bool is_atomic_boolean() const;

  /// Lower covers of a within the frame order.
  std::vector<Mask> lower_covers(Mask a) const;

  std::string element_name(Mask a) const;

  /// Hasse diagram of the element lattice in DOT format. Elements in
  /// `highlight` get a filled style; elements in `decorate` a doubled
  /// border (used for point kernels and filter members).
  std::string to_dot(const std::vector<Mask>& highlight = {},
                     const std::vector<Mask>& decorate = {}) const;

  /// Structured listing: one element per line as a sorted label set.
  std::string listing() const;

 private:
  FiniteFrame() = default;
  std::vector<std::string> atom_labels_;
  std::vector<Mask> elems_;  // sorted ascending as integers
  Mask bottom_ = 0;
  Mask top_ = 0;
};

}  // namespace trunclab
