#include "trunclab/pointed.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>

namespace trunclab {

Mask PointedFrame::kernel() const {
  Mask k = frame->bottom();
  for (Mask a : frame->elements())
    if (point(a) == point.target->bottom()) k |= a;
  return k;
}

bool PointedFrame::valid() const { return check_frame_map(point).valid; }

bool FilteredFrame::in_filter(Mask a) const {
  return std::binary_search(filter.begin(), filter.end(), a);
}

bool FilteredFrame::proper() const { return !in_filter(frame->bottom()); }

bool FilteredFrame::regular_filter() const {
  Mask j = frame->bottom();
  for (Mask b : filter) j |= frame->pseudocomplement(b);
  return j == frame->top();
}

void check_filter(const FiniteFrame& frame, const std::vector<Mask>& filter) {
  if (filter.empty()) throw FilterLawError("filter law broken: empty");
  auto member = [&](Mask a) {
    return std::find(filter.begin(), filter.end(), a) != filter.end();
  };
  for (Mask a : filter) {
    frame.index(a);
    for (Mask b : frame.elements())
      if (mask_subset(a, b) && !member(b))
        throw FilterLawError("filter law broken: not upward closed at " +
                             frame.element_name(a) + " <= " +
                             frame.element_name(b));
    for (Mask b : filter)
      if (!member(a & b))
        throw FilterLawError("filter law broken: meet of " +
                             frame.element_name(a) + " and " +
                             frame.element_name(b) + " missing");
  }
}

std::vector<Mask> saturate_filter(const FiniteFrame& frame,
                                  std::vector<Mask> generators) {
  // finite frame: the filter generated by G is the upset of /\ G
  Mask m = frame.top();
  for (Mask g : generators) m &= g;
  frame.index(m);
  std::vector<Mask> out;
  for (Mask a : frame.elements())
    if (mask_subset(m, a)) out.push_back(a);
  return out;
}

std::vector<std::vector<Mask>> all_filters(const FiniteFrame& frame) {
  // every filter on a finite lattice is a principal upset
  std::vector<std::vector<Mask>> out;
  for (Mask m : frame.elements()) {
    std::vector<Mask> f;
    for (Mask a : frame.elements())
      if (mask_subset(m, a)) f.push_back(a);
    out.push_back(std::move(f));
  }
  return out;
}

Mask Product2::pair(bool eps, Mask a) const {
  Mask m = a;
  if (eps) m |= Mask(1) << eps_bit;
  if (!pointed.frame->contains(m))
    throw MembershipError("pair not in the pointed frame");
  return m;
}

namespace {

Product2 build_product2(FramePtr frame, const std::vector<Mask>& top_slot) {
  const int eps = frame->universe();
  if (eps >= 64) throw SizeError("no universe bit left for the 2 component");
  std::vector<std::string> labels;
  for (int i = 0; i < eps; ++i) labels.push_back(frame->atom_label(i));
  labels.push_back("eps");
  std::vector<Mask> elems;
  for (Mask a : frame->elements()) elems.push_back(a);
  for (Mask a : top_slot) elems.push_back(a | (Mask(1) << eps));
  FramePtr big = FiniteFrame::from_elements(std::move(labels), elems);
  Product2 p;
  p.eps_bit = eps;
  p.pointed.frame = big;
  p.pointed.point.source = big;
  p.pointed.point.target = frame_two();
  for (Mask m : big->elements())
    p.pointed.point.image.push_back(((m >> eps) & 1) ? frame_two()->top()
                                                     : frame_two()->bottom());
  return p;
}

}  // namespace

Product2 product2(FramePtr frame) {
  return build_product2(frame, frame->elements());
}

Product2 two_sub_f(FramePtr frame, const std::vector<Mask>& filter) {
  check_filter(*frame, filter);
  return build_product2(frame, filter);
}

Product2 functor_d(const FilteredFrame& lf) {
  return two_sub_f(lf.frame, lf.filter);
}

PointedDecomposition functor_e(const PointedFrame& m) {
  Mask p = m.kernel();
  auto q = point_quotients(m.frame, p);
  PointedDecomposition d;
  d.open_map = q.open;
  d.part.frame = q.open.target;
  for (Mask a : m.frame->elements())
    if (m.point_of(a)) d.part.filter.push_back(a & p);
  std::sort(d.part.filter.begin(), d.part.filter.end());
  d.part.filter.erase(
      std::unique(d.part.filter.begin(), d.part.filter.end()),
      d.part.filter.end());
  check_filter(*d.part.frame, d.part.filter);
  return d;
}

FrameMapTable equivalence_unit(const PointedFrame& m, const Product2& defm) {
  Mask p = m.kernel();
  FrameMapTable t;
  t.source = m.frame;
  t.target = defm.pointed.frame;
  for (Mask a : m.frame->elements())
    t.image.push_back(defm.pair(m.point_of(a), a & p));
  return t;
}

bool is_frame_isomorphism(const FrameMapTable& f) {
  if (!check_frame_map(f).valid) return false;
  std::vector<Mask> img = f.image;
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  // bijective: no collisions and the image exhausts the target
  return img.size() == f.image.size() && img == f.target->elements();
}

FilteredCheck check_filtered_morphism(const FilteredMorphism& m) {
  FilteredCheck r;
  auto mc = check_frame_map(m.f);
  if (!mc.valid) {
    r.valid = false;
    r.violation = "underlying map invalid: " + mc.violation;
    return r;
  }
  if (m.f(m.src.frame->top()) != m.c) {
    r.valid = false;
    r.violation = "top does not land on the tip element";
    return r;
  }
  for (Mask a : m.src.filter) {
    Mask arr = m.dst.frame->heyting_arrow(m.c, m.f(a));
    if (!m.dst.in_filter(arr)) {
      r.valid = false;
      r.violation = "arrow image of filter element " +
                    m.src.frame->element_name(a) +
                    " escapes the target filter";
      return r;
    }
  }
  return r;
}

FilteredMorphism identity_filtered(const FilteredFrame& lf) {
  FilteredMorphism m;
  m.src = lf;
  m.dst = lf;
  m.c = lf.frame->top();
  m.f = FrameMapTable::identity(lf.frame);
  return m;
}

namespace {

FramePtr down_subframe(FramePtr frame, Mask c) {
  std::vector<std::string> labels;
  for (int i = 0; i < frame->universe(); ++i)
    labels.push_back(frame->atom_label(i));
  std::vector<Mask> elems;
  for (Mask a : frame->elements())
    if (mask_subset(a, c)) elems.push_back(a);
  return FiniteFrame::from_elements(std::move(labels), elems);
}

}  // namespace

FilteredMorphism compose_filtered(const FilteredMorphism& first,
                                  const FilteredMorphism& second) {
  if (first.dst.frame->elements() != second.src.frame->elements())
    throw DomainError("filtered composition: middle frames disagree");
  FilteredMorphism m;
  m.src = first.src;
  m.dst = second.dst;
  m.c = second.f(first.c);
  m.f.source = first.src.frame;
  m.f.target = down_subframe(second.dst.frame, m.c);
  for (Mask a : first.src.frame->elements())
    m.f.image.push_back(second.f(first.f(a)));
  return m;
}

FreeIsolated free_isolated(const PointedFrame& m) {
  Mask p = m.kernel();
  auto q = point_quotients(m.frame, p);
  FreeIsolated fi;
  fi.target = product2(q.open.target);
  fi.nu.source = m.frame;
  fi.nu.target = fi.target.pointed.frame;
  for (Mask a : m.frame->elements())
    fi.nu.image.push_back(fi.target.pair(m.point_of(a), a & p));
  return fi;
}

TwoSubFChecks frame_checks(const Product2& m, const FilteredFrame& lf) {
  TwoSubFChecks r;
  // the projection that drops the 2 component is dense exactly when no
  // nonzero element is sent to bottom, i.e. (top, bottom) is absent
  r.projection_dense = true;
  for (Mask a : m.pointed.frame->elements())
    if (a != m.pointed.frame->bottom() && m.drop(a) == lf.frame->bottom())
      r.projection_dense = false;
  r.regular = m.pointed.frame->is_regular();
  r.compact = true;
  return r;
}

bool is_isolated(const PointedFrame& m) {
  return m.frame->is_complemented(m.kernel());
}

std::vector<FrameMapTable> enumerate_pointed_maps(const PointedFrame& source,
                                                  const PointedFrame& target) {
  std::vector<FrameMapTable> out;
  for (auto& f : enumerate_frame_maps(source.frame, target.frame)) {
    bool pointed = true;
    for (Mask a : source.frame->elements())
      if (target.point(f(a)) != source.point(a)) {
        pointed = false;
        break;
      }
    if (pointed) out.push_back(std::move(f));
  }
  return out;
}

namespace {

struct BundleText {
  Poset base;
  FramePtr frame;
  std::vector<std::vector<std::string>> filter_lines;
  std::vector<std::string> point_line;
  bool has_point = false;
};

BundleText parse_bundle(std::istream& in) {
  std::vector<std::string> poset_text;
  std::vector<std::string> rest;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word) || word[0] == '#') continue;
    if (word == "labels" || word == "cover")
      poset_text.push_back(line);
    else
      rest.push_back(line);
  }
  std::string joined;
  for (const auto& l : poset_text) joined += l + "\n";
  std::istringstream ps(joined);
  BundleText b;
  b.base = Poset::parse(ps);
  b.frame = FiniteFrame::downsets(b.base);
  for (const auto& l : rest) {
    std::istringstream ls(l);
    std::string word, lab;
    ls >> word;
    std::vector<std::string> labs;
    while (ls >> lab) labs.push_back(lab);
    if (word == "filter") {
      b.filter_lines.push_back(labs);
    } else if (word == "point") {
      if (b.has_point) throw ParseError("duplicate point line");
      b.point_line = labs;
      b.has_point = true;
    } else {
      throw ParseError("unexpected directive `" + word + "`");
    }
  }
  return b;
}

Mask mask_of_labels(const Poset& base, const std::vector<std::string>& labs) {
  Mask m = 0;
  for (const auto& lab : labs) {
    int idx = -1;
    for (int i = 0; i < base.size(); ++i)
      if (base.label(i) == lab) idx = i;
    if (idx < 0) throw ParseError("unknown label `" + lab + "`");
    m |= Mask(1) << idx;
  }
  return m;
}

}  // namespace

FilteredFrame parse_filtered_bundle(std::istream& in) {
  BundleText b = parse_bundle(in);
  FilteredFrame lf;
  lf.frame = b.frame;
  for (const auto& labs : b.filter_lines)
    lf.filter.push_back(mask_of_labels(b.base, labs));
  std::sort(lf.filter.begin(), lf.filter.end());
  lf.filter.erase(std::unique(lf.filter.begin(), lf.filter.end()),
                  lf.filter.end());
  check_filter(*lf.frame, lf.filter);
  return lf;
}

PointedFrame parse_pointed_bundle(std::istream& in) {
  BundleText b = parse_bundle(in);
  if (!b.has_point) throw ParseError("missing point line");
  Mask p = mask_of_labels(b.base, b.point_line);
  PointedFrame m;
  m.frame = b.frame;
  m.point.source = b.frame;
  m.point.target = frame_two();
  for (Mask a : b.frame->elements())
    m.point.image.push_back(mask_subset(a, p) ? frame_two()->bottom()
                                              : frame_two()->top());
  if (!m.valid())
    throw ParseError("point line does not describe a prime kernel");
  return m;
}

std::string serialize_filtered_bundle(const FilteredFrame& lf,
                                      const Poset& base) {
  std::string out = base.serialize();
  for (Mask a : lf.filter) {
    out += "filter";
    for (int i = 0; i < base.size(); ++i)
      if ((a >> i) & 1) out += " " + base.label(i);
    out += "\n";
  }
  return out;
}

std::string pointed_dot(const PointedFrame& m) {
  return m.frame->to_dot({m.kernel()}, {});
}

std::string filtered_dot(const FilteredFrame& lf) {
  return lf.frame->to_dot({}, lf.filter);
}

}  // namespace trunclab
