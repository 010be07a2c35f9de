#include "trunclab/poset.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>

namespace trunclab {

namespace {

void check_label_count(std::size_t n) {
  if (n > 64) throw SizeError("poset exceeds the 64 label limit");
}

}  // namespace

Poset Poset::from_relation(std::vector<std::string> labels,
                           const std::vector<std::pair<int, int>>& leq_pairs) {
  check_label_count(labels.size());
  const int n = static_cast<int>(labels.size());
  std::vector<Mask> below(n, 0);
  for (auto [lo, hi] : leq_pairs) {
    if (lo < 0 || lo >= n || hi < 0 || hi >= n)
      throw PosetError("relation pair out of range");
    below[hi] |= Mask(1) << lo;
  }
  for (int i = 0; i < n; ++i)
    if (!((below[i] >> i) & 1))
      throw PosetError("reflexivity fails at " + labels[i]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      bool ij = (below[j] >> i) & 1, ji = (below[i] >> j) & 1;
      if (ij && ji)
        throw PosetError("antisymmetry fails at " + labels[i] + ", " +
                         labels[j]);
      // transitivity: i <= j forces everything below i to sit below j
      if (ij && !mask_subset(below[i], below[j]))
        throw PosetError("transitivity fails at " + labels[i] + " <= " +
                         labels[j]);
    }
  Poset p;
  p.labels_ = std::move(labels);
  p.below_ = std::move(below);
  return p;
}

Poset Poset::from_covers(std::vector<std::string> labels,
                         const std::vector<std::pair<int, int>>& covers) {
  check_label_count(labels.size());
  const int n = static_cast<int>(labels.size());
  std::vector<Mask> below(n, 0);
  for (int i = 0; i < n; ++i) below[i] = Mask(1) << i;
  for (auto [lo, hi] : covers) {
    if (lo < 0 || lo >= n || hi < 0 || hi >= n)
      throw PosetError("cover pair out of range");
    below[hi] |= Mask(1) << lo;
  }
  // transitive closure; a strict cycle shows up as mutual reachability
  for (bool changed = true; changed;) {
    changed = false;
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        if (i != j && ((below[j] >> i) & 1) &&
            !mask_subset(below[i], below[j])) {
          below[j] |= below[i];
          changed = true;
        }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (((below[j] >> i) & 1) && ((below[i] >> j) & 1))
        throw PosetError("antisymmetry fails at " + labels[i] + ", " +
                         labels[j] + " (cover cycle)");
  Poset p;
  p.labels_ = std::move(labels);
  p.below_ = std::move(below);
  return p;
}

Poset Poset::antichain(int n, const std::string& label_prefix) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(label_prefix + std::to_string(i + 1));
  return from_covers(std::move(labels), {});
}

Poset Poset::chain(int n, const std::string& label_prefix) {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < n; ++i) {
    labels.push_back(label_prefix + std::to_string(i + 1));
    if (i > 0) covers.push_back({i - 1, i});
  }
  return from_covers(std::move(labels), covers);
}

Mask Poset::above(int i) const {
  Mask up = 0;
  for (int j = 0; j < size(); ++j)
    if (leq(i, j)) up |= Mask(1) << j;
  return up;
}

Poset Poset::induced(Mask keep) const {
  std::vector<std::string> labels;
  std::vector<int> old_index;
  for (int i = 0; i < size(); ++i)
    if ((keep >> i) & 1) {
      labels.push_back(labels_[i]);
      old_index.push_back(i);
    }
  const int m = static_cast<int>(old_index.size());
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (leq(old_index[a], old_index[b])) pairs.push_back({a, b});
  return from_relation(std::move(labels), pairs);
}

Poset Poset::with_isolated(const std::string& label) const {
  std::vector<std::string> labels = labels_;
  labels.push_back(label);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      if (leq(i, j)) pairs.push_back({i, j});
  pairs.push_back({size(), size()});
  return from_relation(std::move(labels), pairs);
}

Poset Poset::parse(std::istream& in) {
  std::vector<std::string> labels;
  std::map<std::string, int> index;
  std::vector<std::pair<int, int>> covers;
  std::string line;
  int lineno = 0;
  bool saw_labels = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word) || word[0] == '#') continue;
    if (word == "labels") {
      std::string lab;
      while (ls >> lab) {
        if (index.count(lab))
          throw ParseError("line " + std::to_string(lineno) +
                           ": duplicate label " + lab);
        index[lab] = static_cast<int>(labels.size());
        labels.push_back(lab);
      }
      saw_labels = true;
    } else if (word == "cover") {
      std::string lo, hi;
      if (!(ls >> lo >> hi))
        throw ParseError("line " + std::to_string(lineno) +
                         ": cover needs two labels");
      if (!index.count(lo) || !index.count(hi))
        throw ParseError("line " + std::to_string(lineno) +
                         ": unknown label in cover");
      covers.push_back({index[lo], index[hi]});
    } else {
      throw ParseError("line " + std::to_string(lineno) +
                       ": expected `labels` or `cover`, got `" + word + "`");
    }
  }
  if (!saw_labels) throw ParseError("missing `labels` line");
  return from_covers(std::move(labels), covers);
}

std::string Poset::serialize() const {
  std::string out = "labels";
  for (const auto& l : labels_) out += " " + l;
  out += "\n";
  // emit covers only: j covers i when i < j with nothing in between
  for (int j = 0; j < size(); ++j)
    for (int i = 0; i < size(); ++i) {
      if (i == j || !leq(i, j)) continue;
      bool covered = true;
      for (int k = 0; k < size() && covered; ++k)
        if (k != i && k != j && leq(i, k) && leq(k, j)) covered = false;
      if (covered) out += "cover " + labels_[i] + " " + labels_[j] + "\n";
    }
  return out;
}

}  // namespace trunclab
