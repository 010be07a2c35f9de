#include "trunclab/real_map.hpp"

#include <algorithm>
#include <set>

namespace trunclab {

Mask RealFrameMap::upper(const Rat& r) const {
  Mask v = target->top();
  for (const auto& [bp, val] : steps) {
    if (bp > r) break;
    v = val;
  }
  return v;
}

Mask RealFrameMap::lower(const Rat& r) const {
  // join of the pseudocomplements of the upper values left of r; the
  // largest term is the one just left of r
  Mask v = target->top();
  for (const auto& [bp, val] : steps) {
    if (bp >= r) break;
    v = val;
  }
  return target->pseudocomplement(v);
}

std::vector<Rat> RealFrameMap::breakpoints() const {
  std::vector<Rat> out;
  for (const auto& [bp, val] : steps) out.push_back(bp);
  return out;
}

bool RealFrameMap::normalized() const {
  if (!target) return false;
  if (steps.empty()) return false;
  Mask prev = target->top();
  Rat prev_bp;
  bool first = true;
  for (const auto& [bp, val] : steps) {
    if (!target->contains(val)) return false;
    if (!first && bp <= prev_bp) return false;
    if (val == prev || !mask_subset(val, prev)) return false;
    if (!target->rather_below(val, prev)) return false;
    prev = val;
    prev_bp = bp;
    first = false;
  }
  return prev == target->bottom();
}

std::string RealFrameMap::str() const {
  std::string out;
  for (const auto& [bp, val] : steps) {
    if (!out.empty()) out += " ";
    out += rat_str(bp) + ":" + target->element_name(val);
  }
  return out;
}

RealFrameMap normalize(RealFrameMap f) {
  if (!f.target) throw DomainError("step map needs a target frame");
  std::sort(f.steps.begin(), f.steps.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i + 1 < f.steps.size(); ++i)
    if (f.steps[i].first == f.steps[i + 1].first)
      throw DomainError("duplicate threshold in step map");
  std::vector<std::pair<Rat, Mask>> out;
  Mask prev = f.target->top();
  for (const auto& [bp, val] : f.steps) {
    f.target->index(val);
    if (val == prev) continue;
    if (!mask_subset(val, prev))
      throw DomainError("step values must decrease along the thresholds");
    if (!f.target->rather_below(val, prev))
      throw DomainError("step value not rather below its predecessor");
    out.push_back({bp, val});
    prev = val;
  }
  if (prev != f.target->bottom())
    throw DomainError("step map must end at bottom");
  f.steps = std::move(out);
  return f;
}

bool rfm_eq(const RealFrameMap& a, const RealFrameMap& b) {
  return a.target->elements() == b.target->elements() && a.steps == b.steps;
}

RealFrameMap rfm_constant(FramePtr target, const Rat& c) {
  RealFrameMap f;
  f.target = std::move(target);
  f.steps = {{c, f.target->bottom()}};
  return f;
}

namespace {

std::set<Rat> all_breakpoints(const RealFrameMap& f, const RealFrameMap& g) {
  std::set<Rat> bps;
  for (const auto& [bp, val] : f.steps) bps.insert(bp);
  for (const auto& [bp, val] : g.steps) bps.insert(bp);
  return bps;
}

void require_same_target(const RealFrameMap& f, const RealFrameMap& g) {
  if (f.target->elements() != g.target->elements())
    throw DomainError("step maps have different target frames");
}

}  // namespace

RealFrameMap rfm_add(const RealFrameMap& f, const RealFrameMap& g) {
  require_same_target(f, g);
  // value of the sum at r: the join over splittings r = s + (r - s); for
  // step maps the finitely many breakpoint offsets exhaust the pieces
  auto value_at = [&](const Rat& r) {
    std::set<Rat> probes;
    for (const auto& [bp, val] : f.steps) probes.insert(bp);
    for (const auto& [bp, val] : g.steps) probes.insert(r - bp);
    // midpoints between consecutive probes catch the open pieces
    std::vector<Rat> ps(probes.begin(), probes.end());
    for (std::size_t i = 0; i + 1 < ps.size(); ++i)
      probes.insert((ps[i] + ps[i + 1]) / Rat(2));
    Mask v = f.target->bottom();
    for (const Rat& s : probes) v |= f.upper(s) & g.upper(r - s);
    return v;
  };
  std::set<Rat> sums;
  for (const auto& [p, pv] : f.steps)
    for (const auto& [q, qv] : g.steps) sums.insert(p + q);
  RealFrameMap h;
  h.target = f.target;
  for (const Rat& r : sums) h.steps.push_back({r, value_at(r)});
  return normalize(std::move(h));
}

RealFrameMap rfm_neg(const RealFrameMap& f) {
  RealFrameMap h;
  h.target = f.target;
  for (const auto& [bp, val] : f.steps) h.steps.push_back({-bp, f.lower(bp)});
  return normalize(std::move(h));
}

RealFrameMap rfm_sub(const RealFrameMap& f, const RealFrameMap& g) {
  return rfm_add(f, rfm_neg(g));
}

RealFrameMap rfm_vee(const RealFrameMap& f, const RealFrameMap& g) {
  require_same_target(f, g);
  RealFrameMap h;
  h.target = f.target;
  for (const Rat& r : all_breakpoints(f, g))
    h.steps.push_back({r, f.upper(r) | g.upper(r)});
  return normalize(std::move(h));
}

RealFrameMap rfm_wedge(const RealFrameMap& f, const RealFrameMap& g) {
  require_same_target(f, g);
  RealFrameMap h;
  h.target = f.target;
  for (const Rat& r : all_breakpoints(f, g))
    h.steps.push_back({r, f.upper(r) & g.upper(r)});
  return normalize(std::move(h));
}

RealFrameMap rfm_scale(const Rat& q, const RealFrameMap& f) {
  if (q == Rat(0)) return rfm_constant(f.target, Rat(0));
  if (q < Rat(0)) return rfm_neg(rfm_scale(-q, f));
  RealFrameMap h;
  h.target = f.target;
  for (const auto& [bp, val] : f.steps) h.steps.push_back({q * bp, val});
  return normalize(std::move(h));
}

RealFrameMap rfm_truncate(const RealFrameMap& f) {
  return rfm_wedge(f, rfm_constant(f.target, Rat(1)));
}

Mask rfm_coz(const RealFrameMap& f) {
  return f.upper(Rat(0)) | f.lower(Rat(0));
}

Mask rfm_con(const RealFrameMap& f) {
  return f.upper(Rat(1)) | f.lower(Rat(1));
}

Rat rfm_point_value(const FrameMapTable& point, const RealFrameMap& f) {
  if (point.source->elements() != f.target->elements())
    throw DomainError("point and step map disagree on the frame");
  Mask two_top = point.target->top();
  for (const auto& [bp, val] : f.steps)
    if (point(val) != two_top) return bp;
  throw DomainError("step map does not reach bottom through the point");
}

std::vector<Rat> rfm_to_atom_tuple(const RealFrameMap& f) {
  if (!f.target->is_atomic_boolean())
    throw DomainError("atom tuples need an atomic Boolean target");
  std::vector<Rat> out;
  for (Mask t : f.target->atoms()) {
    bool found = false;
    for (const auto& [bp, val] : f.steps)
      if (!mask_subset(t, val)) {
        out.push_back(bp);
        found = true;
        break;
      }
    if (!found)
      throw DomainError("step map does not reach bottom at an atom");
  }
  return out;
}

RealFrameMap rfm_from_atom_tuple(FramePtr target,
                                 const std::vector<Rat>& values) {
  if (!target->is_atomic_boolean())
    throw DomainError("atom tuples need an atomic Boolean target");
  auto atoms = target->atoms();
  if (atoms.size() != values.size())
    throw SizeError("tuple length does not match the atom count");
  std::set<Rat> bps(values.begin(), values.end());
  RealFrameMap f;
  f.target = target;
  for (const Rat& r : bps) {
    Mask v = target->bottom();
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (values[i] > r) v |= atoms[i];
    f.steps.push_back({r, v});
  }
  return normalize(std::move(f));
}

RealFrameMap rfm_push(const RealFrameMap& f, const FrameMapTable& h) {
  if (f.target->elements() != h.source->elements())
    throw DomainError("push: step map target is not the map source");
  RealFrameMap g;
  g.target = h.target;
  for (const auto& [bp, val] : f.steps) g.steps.push_back({bp, h(val)});
  return normalize(std::move(g));
}

}  // namespace trunclab
