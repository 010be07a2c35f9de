#include "trunclab/frame_map.hpp"

#include <algorithm>

namespace trunclab {

FrameMapTable FrameMapTable::identity(FramePtr frame) {
  FrameMapTable t;
  t.source = frame;
  t.target = frame;
  t.image = frame->elements();
  return t;
}

FrameMapTable FrameMapTable::compose(const FrameMapTable& f,
                                     const FrameMapTable& g) {
  if (f.target->elements() != g.source->elements())
    throw DomainError("composition: inner frames disagree");
  FrameMapTable t;
  t.source = f.source;
  t.target = g.target;
  t.image.reserve(f.image.size());
  for (Mask v : f.image) t.image.push_back(g(v));
  return t;
}

bool FrameMapTable::same_table(const FrameMapTable& other) const {
  return source->elements() == other.source->elements() &&
         target->elements() == other.target->elements() &&
         image == other.image;
}

MapCheck check_frame_map(const FrameMapTable& f) {
  const auto& src = *f.source;
  const auto& dst = *f.target;
  MapCheck r;
  if (f.image.size() != static_cast<std::size_t>(src.size())) {
    r.valid = false;
    r.violation = "assignment not total";
    return r;
  }
  for (Mask v : f.image)
    if (!dst.contains(v)) {
      r.valid = false;
      r.violation = "image value outside the target frame";
      return r;
    }
  if (f(src.bottom()) != dst.bottom()) {
    r.valid = false;
    r.violation = "bottom not preserved";
    return r;
  }
  if (f(src.top()) != dst.top()) {
    r.valid = false;
    r.violation = "top not preserved";
    return r;
  }
  for (Mask a : src.elements())
    for (Mask b : src.elements()) {
      if (f(a | b) != (f(a) | f(b))) {
        r.valid = false;
        r.violation = "join not preserved at " + src.element_name(a) + ", " +
                      src.element_name(b);
        return r;
      }
      if (f(a & b) != (f(a) & f(b))) {
        r.valid = false;
        r.violation = "meet not preserved at " + src.element_name(a) + ", " +
                      src.element_name(b);
        return r;
      }
    }
  return r;
}

FramePtr frame_two() {
  static FramePtr two = FiniteFrame::downsets(Poset::chain(1, "pt"));
  return two;
}

namespace {

/// Extends an assignment on the join-irreducibles to all elements: every
/// element is the join of the irreducibles below it.
FrameMapTable extend_from_irreducibles(FramePtr source, FramePtr target,
                                       const std::vector<Mask>& irr,
                                       const std::vector<Mask>& where) {
  FrameMapTable t;
  t.source = source;
  t.target = target;
  for (Mask a : source->elements()) {
    Mask v = target->bottom();
    for (std::size_t k = 0; k < irr.size(); ++k)
      if (mask_subset(irr[k], a)) v |= where[k];
    t.image.push_back(v);
  }
  return t;
}

}  // namespace

std::vector<FramePoint> points(FramePtr frame) {
  std::vector<FramePoint> out;
  FramePtr two = frame_two();
  for (const auto& t : enumerate_frame_maps(frame, two)) {
    FramePoint p;
    p.map = t;
    p.kernel = frame->bottom();
    for (Mask a : frame->elements())
      if (t(a) == two->bottom()) p.kernel |= a;
    out.push_back(p);
  }
  return out;
}

bool is_prime(const FiniteFrame& frame, Mask p) {
  if (p == frame.top()) return false;
  for (Mask a : frame.elements())
    for (Mask b : frame.elements())
      if (mask_subset(a & b, p) && !mask_subset(a, p) && !mask_subset(b, p))
        return false;
  return true;
}

PointQuotients point_quotients(FramePtr frame, Mask p) {
  if (!is_prime(*frame, p))
    throw DomainError("quotient kernel " + frame->element_name(p) +
                      " is not prime");
  std::vector<Mask> up, down;
  for (Mask a : frame->elements()) {
    if (mask_subset(p, a)) up.push_back(a);
    if (mask_subset(a, p)) down.push_back(a);
  }
  std::vector<std::string> labels;
  for (int i = 0; i < frame->universe(); ++i)
    labels.push_back(frame->atom_label(i));
  FramePtr up_frame = FiniteFrame::from_elements(labels, up);
  FramePtr down_frame = FiniteFrame::from_elements(labels, down);
  PointQuotients q;
  q.closed.source = frame;
  q.closed.target = up_frame;
  q.open.source = frame;
  q.open.target = down_frame;
  for (Mask a : frame->elements()) {
    q.closed.image.push_back(a | p);
    q.open.image.push_back(a & p);
  }
  return q;
}

std::vector<FrameMapTable> enumerate_frame_maps(FramePtr source,
                                                FramePtr target) {
  auto irr = source->join_irreducibles();
  std::vector<FrameMapTable> out;
  std::vector<Mask> where(irr.size(), target->bottom());
  const auto& cand = target->elements();
  // backtracking over the irreducibles; monotonicity pruning keeps the
  // search shallow on the frame sizes used here
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == irr.size()) {
      FrameMapTable t = extend_from_irreducibles(source, target, irr, where);
      if (check_frame_map(t).valid) out.push_back(std::move(t));
      return;
    }
    for (Mask v : cand) {
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        if (mask_subset(irr[j], irr[k]) && !mask_subset(where[j], v)) ok = false;
        if (mask_subset(irr[k], irr[j]) && !mask_subset(v, where[j])) ok = false;
      }
      if (!ok) continue;
      where[k] = v;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace trunclab
