#include "trunclab/frame.hpp"

#include <algorithm>
#include <sstream>

namespace trunclab {

FramePtr FiniteFrame::downsets(const Poset& base) {
  const int n = base.size();
  if (n > 20) throw SizeError("downset lattice would have up to 2^" +
                              std::to_string(n) + " elements");
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(base.label(i));
  std::vector<Mask> elems;
  for (Mask m = 0; m < (Mask(1) << n); ++m) {
    bool down = true;
    for (int i = 0; i < n && down; ++i)
      if ((m >> i) & 1) down = mask_subset(base.below(i), m);
    if (down) elems.push_back(m);
  }
  return from_elements(std::move(labels), std::move(elems));
}

FramePtr FiniteFrame::from_elements(std::vector<std::string> atom_labels,
                                    std::vector<Mask> elements) {
  if (atom_labels.size() > 64) throw SizeError("universe exceeds 64 bits");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()),
                 elements.end());
  if (elements.empty()) throw DomainError("a frame needs at least one element");
  auto f = std::shared_ptr<FiniteFrame>(new FiniteFrame());
  f->atom_labels_ = std::move(atom_labels);
  f->elems_ = std::move(elements);
  f->bottom_ = f->elems_.front();
  f->top_ = f->elems_.back();
  for (Mask a : f->elems_) {
    if (!mask_subset(f->bottom_, a) || !mask_subset(a, f->top_))
      throw DomainError("element family has no least or greatest member");
    for (Mask b : f->elems_) {
      if (!f->contains(a | b))
        throw DomainError("element family not closed under union");
      if (!f->contains(a & b))
        throw DomainError("element family not closed under intersection");
    }
  }
  return f;
}

bool FiniteFrame::contains(Mask a) const {
  return std::binary_search(elems_.begin(), elems_.end(), a);
}

int FiniteFrame::index(Mask a) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), a);
  if (it == elems_.end() || *it != a)
    throw MembershipError("element " + std::to_string(a) +
                          " is not in the frame");
  return static_cast<int>(it - elems_.begin());
}

Mask FiniteFrame::join(Mask a, Mask b) const {
  index(a);
  index(b);
  return a | b;
}

Mask FiniteFrame::meet(Mask a, Mask b) const {
  index(a);
  index(b);
  return a & b;
}

bool FiniteFrame::leq(Mask a, Mask b) const {
  index(a);
  index(b);
  return mask_subset(a, b);
}

Mask FiniteFrame::heyting_arrow(Mask a, Mask b) const {
  index(a);
  index(b);
  Mask r = bottom_;
  for (Mask c : elems_)
    if (mask_subset(c & a, b)) r |= c;
  return r;
}

Mask FiniteFrame::pseudocomplement(Mask a) const {
  return heyting_arrow(a, bottom_);
}

bool FiniteFrame::rather_below(Mask b, Mask a) const {
  return (pseudocomplement(b) | a) == top_;
}

bool FiniteFrame::is_regular() const {
  for (Mask a : elems_) {
    Mask j = bottom_;
    for (Mask b : elems_)
      if (rather_below(b, a) && mask_subset(b, a)) j |= b;
    if (j != a) return false;
  }
  return true;
}

bool FiniteFrame::is_complemented(Mask a) const {
  for (Mask b : elems_)
    if ((a & b) == bottom_ && (a | b) == top_) return true;
  return false;
}

bool FiniteFrame::is_boolean() const {
  for (Mask a : elems_)
    if (!is_complemented(a)) return false;
  return true;
}

std::vector<Mask> FiniteFrame::atoms() const {
  std::vector<Mask> out;
  for (Mask a : elems_) {
    if (a == bottom_) continue;
    bool atom = true;
    for (Mask b : elems_)
      if (b != bottom_ && b != a && mask_subset(b, a)) {
        atom = false;
        break;
      }
    if (atom) out.push_back(a);
  }
  return out;
}

std::vector<Mask> FiniteFrame::join_irreducibles() const {
  std::vector<Mask> out;
  for (Mask a : elems_) {
    if (a == bottom_) continue;
    Mask below_join = bottom_;
    for (Mask b : elems_)
      if (b != a && mask_subset(b, a)) below_join |= b;
    if (below_join != a) out.push_back(a);
  }
  return out;
}

bool FiniteFrame::is_atomic_boolean() const {
  if (!is_boolean()) return false;
  auto at = atoms();
  for (Mask a : elems_) {
    Mask j = bottom_;
    for (Mask t : at)
      if (mask_subset(t, a)) j |= t;
    if (j != a) return false;
  }
  return true;
}

std::vector<Mask> FiniteFrame::lower_covers(Mask a) const {
  index(a);
  std::vector<Mask> out;
  for (Mask b : elems_) {
    if (b == a || !mask_subset(b, a)) continue;
    bool cover = true;
    for (Mask c : elems_)
      if (c != a && c != b && mask_subset(b, c) && mask_subset(c, a)) {
        cover = false;
        break;
      }
    if (cover) out.push_back(b);
  }
  return out;
}

std::string FiniteFrame::element_name(Mask a) const {
  if (a == bottom_) return "bot";
  if (a == top_) return "top";
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < universe(); ++i)
    if ((a >> i) & 1) {
      if (!first) out += ",";
      out += atom_labels_[i];
      first = false;
    }
  return out + "}";
}

std::string FiniteFrame::to_dot(const std::vector<Mask>& highlight,
                                const std::vector<Mask>& decorate) const {
  std::ostringstream out;
  out << "digraph frame {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int i = 0; i < size(); ++i) {
    Mask a = elems_[i];
    out << "  n" << i << " [label=\"" << element_name(a) << "\"";
    if (std::find(highlight.begin(), highlight.end(), a) != highlight.end())
      out << ", style=filled, fillcolor=gray";
    if (std::find(decorate.begin(), decorate.end(), a) != decorate.end())
      out << ", peripheries=2";
    out << "];\n";
  }
  for (int i = 0; i < size(); ++i)
    for (Mask b : lower_covers(elems_[i]))
      out << "  n" << index(b) << " -> n" << i << ";\n";
  out << "}\n";
  return out.str();
}

std::string FiniteFrame::listing() const {
  std::string out;
  for (Mask a : elems_) out += element_name(a) + "\n";
  return out;
}

}  // namespace trunclab
