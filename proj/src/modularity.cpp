#include "trimlat/modularity.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace trimlat {

namespace {

std::string edge_text(const Lattice& lat, Elem y, Elem z) {
  return lat.name(y) + " < " + lat.name(z);
}

void require_cover(const Lattice& lat, Elem y, Elem z) {
  if (y >= lat.size() || z >= lat.size() || !lat.is_cover(y, z)) {
    throw LatticeError(Errc::NotACover, "not a cover edge: " + std::to_string(y) + ", " +
                                            std::to_string(z));
  }
}

int label_of(const Lattice& lat, const EdgeLabelling& lab, Elem y, Elem z) {
  return lab.labels[*lat.edge_index(y, z)];
}

// For a fixed top z, follows the unique increasing chain of every [u, z].
// next[u] is the second element of that chain and first[u] its first label.
struct IncreasingSweep {
  std::vector<Elem> next;
  std::vector<int> first;
  std::optional<Elem> failure;  // some u whose interval [u, z] fails EL
};

IncreasingSweep sweep_increasing(const Lattice& lat, const EdgeLabelling& lab, Elem z) {
  constexpr int kTopLabel = std::numeric_limits<int>::max();
  IncreasingSweep s;
  s.next.assign(lat.size(), z);
  s.first.assign(lat.size(), kTopLabel);
  const BitRow& below = lat.down_set(z);
  auto topo = lat.topological_order();
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    Elem u = *it;
    if (u == z || !below.test(u)) continue;
    int count = 0;
    int chosen_label = 0;
    Elem chosen = z;
    int min_other = kTopLabel;
    for (Elem v : lat.upper_covers(u)) {
      if (!below.test(v)) continue;
      int l = label_of(lat, lab, u, v);
      if (l < s.first[v]) {
        ++count;
        chosen = v;
        chosen_label = l;
      }
    }
    if (count == 1) {
      // Lexicographic minimality reduces to the first label being strictly
      // smallest among the covers of u inside [u, z].
      for (Elem v : lat.upper_covers(u)) {
        if (v == chosen || !below.test(v)) continue;
        min_other = std::min(min_other, label_of(lat, lab, u, v));
      }
    }
    if (count != 1 || chosen_label >= min_other) {
      s.failure = u;
      return s;
    }
    s.next[u] = chosen;
    s.first[u] = chosen_label;
  }
  return s;
}

}  // namespace

int EdgeLabelling::at(const Lattice& lat, Elem lower, Elem upper) const {
  auto e = lat.edge_index(lower, upper);
  if (!e) throw LatticeError(Errc::NotACover, "label of a non-edge");
  return labels[*e];
}

std::optional<std::pair<Elem, Elem>> left_modular_violation(const Lattice& lat, Elem x) {
  for (Elem y = 0; y < lat.size(); ++y) {
    const Elem yx = lat.join(y, x);
    const BitRow& above = lat.up_set(y);
    for (auto zi = above.find_first(); zi != BitRow::npos; zi = above.find_next(zi)) {
      Elem z = static_cast<Elem>(zi);
      if (z == y) continue;
      if (lat.meet(yx, z) != lat.join(y, lat.meet(x, z))) return std::pair{y, z};
    }
  }
  return std::nullopt;
}

bool is_left_modular(const Lattice& lat, Elem x) { return !left_modular_violation(lat, x); }

LeftModularChain make_left_modular_chain(const Lattice& lat, std::vector<Elem> elements) {
  if (elements.empty() || elements.front() != lat.bottom() || elements.back() != lat.top()) {
    throw LatticeError(Errc::InvalidInput, "chain must run from bottom to top");
  }
  for (std::size_t i = 0; i + 1 < elements.size(); ++i) {
    if (!lat.is_cover(elements[i], elements[i + 1])) {
      throw LatticeError(Errc::InvalidInput,
                         "chain step " + edge_text(lat, elements[i], elements[i + 1]) +
                             " is not a cover");
    }
  }
  for (Elem x : elements) {
    if (auto bad = left_modular_violation(lat, x)) {
      throw LatticeError(Errc::NotLeftModular, "element " + lat.name(x) +
                                                   " fails at the pair (" +
                                                   lat.name(bad->first) + ", " +
                                                   lat.name(bad->second) + ")");
    }
  }
  return {std::move(elements)};
}

std::optional<LeftModularChain> find_left_modular_maximal_chain(const Lattice& lat,
                                                                bool maximum_length) {
  const std::size_t n = lat.size();
  std::vector<std::size_t> depth;
  std::vector<std::size_t> height;
  if (maximum_length) {
    depth = depth_from_bottom(lat);
    height = height_to_top(lat);
  }
  // 0 unknown, 1 left modular, 2 not.
  std::vector<std::uint8_t> lm(n, 0);
  auto ok = [&](Elem v) {
    if (lm[v] == 0) lm[v] = is_left_modular(lat, v) ? 1 : 2;
    return lm[v] == 1;
  };
  if (!ok(lat.bottom()) || !ok(lat.top())) return std::nullopt;

  std::vector<bool> dead(n, false);
  std::vector<Elem> path{lat.bottom()};
  std::vector<std::size_t> cursor{0};
  while (!path.empty()) {
    Elem v = path.back();
    if (v == lat.top()) return LeftModularChain{path};
    auto ups = lat.upper_covers(v);
    std::size_t& k = cursor.back();
    bool advanced = false;
    while (k < ups.size()) {
      Elem w = ups[k++];
      if (dead[w]) continue;
      if (maximum_length && (depth[w] != depth[v] + 1 || height[v] != height[w] + 1)) continue;
      if (!ok(w)) {
        dead[w] = true;
        continue;
      }
      path.push_back(w);
      cursor.push_back(0);
      advanced = true;
      break;
    }
    if (!advanced) {
      dead[v] = true;
      path.pop_back();
      cursor.pop_back();
    }
  }
  return std::nullopt;
}

LeftModularChain induced_interval_chain(const Lattice& lat, const LeftModularChain& chain,
                                        Elem y, Elem z) {
  if (!lat.leq(y, z)) {
    throw LatticeError(Errc::NotComparable, "interval endpoints are not ordered");
  }
  std::vector<Elem> out;
  for (Elem x : chain.elements) {
    Elem a = lat.join(y, lat.meet(x, z));
    Elem b = lat.meet(lat.join(y, x), z);
    if (a != b) {
      throw LatticeError(Errc::NotLeftModular,
                         "chain element " + lat.name(x) + " is not left modular at (" +
                             lat.name(y) + ", " + lat.name(z) + ")");
    }
    if (out.empty() || out.back() != a) out.push_back(a);
  }
  return {std::move(out)};
}

int delta(const Lattice& lat, const LeftModularChain& chain, Elem v) {
  if (v >= lat.size() || lat.lower_covers(v).size() != 1) {
    throw LatticeError(Errc::NotJoinIrreducible, "element is not join-irreducible");
  }
  for (std::size_t i = 0; i < chain.elements.size(); ++i) {
    if (lat.leq(v, chain[i])) return static_cast<int>(i);
  }
  throw LatticeError(Errc::InvalidInput, "chain does not reach the top");
}

int epsilon(const Lattice& lat, const LeftModularChain& chain, Elem v) {
  if (v >= lat.size() || lat.upper_covers(v).size() != 1) {
    throw LatticeError(Errc::NotMeetIrreducible, "element is not meet-irreducible");
  }
  for (std::size_t i = chain.elements.size(); i-- > 0;) {
    if (lat.leq(chain[i], v)) return static_cast<int>(i) + 1;
  }
  throw LatticeError(Errc::InvalidInput, "chain does not start at the bottom");
}

int gamma_join(const Lattice& lat, const LeftModularChain& chain, Elem y, Elem z) {
  require_cover(lat, y, z);
  int best = std::numeric_limits<int>::max();
  for (Elem v : join_irreducibles(lat)) {
    if (lat.leq(v, z) && !lat.leq(v, y)) best = std::min(best, delta(lat, chain, v));
  }
  return best;
}

int gamma_meet(const Lattice& lat, const LeftModularChain& chain, Elem y, Elem z) {
  require_cover(lat, y, z);
  int best = std::numeric_limits<int>::min();
  for (Elem v : meet_irreducibles(lat)) {
    if (lat.leq(y, v) && !lat.leq(z, v)) best = std::max(best, epsilon(lat, chain, v));
  }
  return best;
}

int gamma_chain(const Lattice& lat, const LeftModularChain& chain, Elem y, Elem z) {
  require_cover(lat, y, z);
  for (std::size_t i = 0; i < chain.elements.size(); ++i) {
    if (lat.join(y, lat.meet(chain[i], z)) == z) return static_cast<int>(i);
  }
  throw LatticeError(Errc::InvalidInput, "chain does not reach the top");
}

EdgeLabelling full_labelling(const Lattice& lat, const LeftModularChain& chain) {
  auto ji = join_irreducibles(lat);
  auto mi = meet_irreducibles(lat);
  std::vector<int> d(ji.size());
  std::vector<int> e(mi.size());
  for (std::size_t k = 0; k < ji.size(); ++k) d[k] = delta(lat, chain, ji[k]);
  for (std::size_t k = 0; k < mi.size(); ++k) e[k] = epsilon(lat, chain, mi[k]);

  EdgeLabelling lab;
  lab.labels.reserve(lat.num_edges());
  for (const auto& c : lat.covers()) {
    int g1 = std::numeric_limits<int>::max();
    for (std::size_t k = 0; k < ji.size(); ++k) {
      if (lat.leq(ji[k], c.upper) && !lat.leq(ji[k], c.lower)) g1 = std::min(g1, d[k]);
    }
    int g2 = std::numeric_limits<int>::min();
    for (std::size_t k = 0; k < mi.size(); ++k) {
      if (lat.leq(c.lower, mi[k]) && !lat.leq(c.upper, mi[k])) g2 = std::max(g2, e[k]);
    }
    int g3 = gamma_chain(lat, chain, c.lower, c.upper);
    if (g1 != g2 || g2 != g3) {
      throw LatticeError(Errc::LabellingsDisagree,
                         "edge " + edge_text(lat, c.lower, c.upper) + ": " + std::to_string(g1) +
                             ", " + std::to_string(g2) + ", " + std::to_string(g3));
    }
    lab.labels.push_back(g1);
  }
  return lab;
}

bool is_el_labelling(const Lattice& lat, const EdgeLabelling& lab) {
  if (lab.labels.size() != lat.num_edges()) return false;
  for (Elem z = 0; z < lat.size(); ++z) {
    if (sweep_increasing(lat, lab, z).failure) return false;
  }
  return true;
}

bool is_interpolating(const Lattice& lat, const EdgeLabelling& lab) {
  if (lab.labels.size() != lat.num_edges()) {
    throw LatticeError(Errc::NotEL, "labelling does not cover every edge");
  }
  for (Elem w = 0; w < lat.size(); ++w) {
    auto s = sweep_increasing(lat, lab, w);
    if (s.failure) {
      throw LatticeError(Errc::NotEL, "interval [" + lat.name(*s.failure) + ", " + lat.name(w) +
                                          "] has no unique lexicographically first "
                                          "increasing chain");
    }
    for (Elem u : lat.lower_covers(w)) {
      const int top_label = label_of(lat, lab, u, w);
      for (Elem v : lat.lower_covers(u)) {
        const int bottom_label = label_of(lat, lab, v, u);
        if (bottom_label < top_label) continue;
        Elem prev = v;
        Elem cur = s.next[v];
        while (cur != w) {
          prev = cur;
          cur = s.next[cur];
        }
        if (bottom_label != label_of(lat, lab, prev, w) || top_label != s.first[v]) return false;
      }
    }
  }
  return true;
}

std::vector<Elem> increasing_chain(const Lattice& lat, const EdgeLabelling& lab, Elem y,
                                   Elem z) {
  if (!lat.leq(y, z)) throw LatticeError(Errc::NotComparable, "interval endpoints not ordered");
  auto s = sweep_increasing(lat, lab, z);
  if (s.failure && lat.leq(y, *s.failure)) {
    throw LatticeError(Errc::NotEL, "no unique increasing chain below " + lat.name(z));
  }
  std::vector<Elem> out{y};
  while (out.back() != z) out.push_back(s.next[out.back()]);
  return out;
}

std::vector<std::vector<Elem>> decreasing_chains(const Lattice& lat, const EdgeLabelling& lab,
                                                 Elem y, Elem z) {
  if (!lat.leq(y, z)) throw LatticeError(Errc::NotComparable, "interval endpoints not ordered");
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> path{y};
  const BitRow& below = lat.down_set(z);
  auto rec = [&](auto&& self, int bound) -> void {
    Elem u = path.back();
    if (u == z) {
      out.push_back(path);
      return;
    }
    for (Elem v : lat.upper_covers(u)) {
      if (!below.test(v)) continue;
      int l = label_of(lat, lab, u, v);
      if (l > bound) continue;
      path.push_back(v);
      self(self, l);
      path.pop_back();
    }
  };
  rec(rec, std::numeric_limits<int>::max());
  return out;
}

std::vector<long long> decreasing_chain_counts_to(const Lattice& lat, const EdgeLabelling& lab,
                                                  Elem z) {
  int max_label = 0;
  for (int l : lab.labels) max_label = std::max(max_label, l);
  const std::size_t width = static_cast<std::size_t>(max_label) + 2;
  const std::size_t inf = width - 1;
  // cnt[u * width + b]: decreasing chains from u to z with first label <= b.
  std::vector<long long> cnt(lat.size() * width, 0);
  for (std::size_t b = 0; b < width; ++b) cnt[z * width + b] = 1;
  const BitRow& below = lat.down_set(z);
  auto topo = lat.topological_order();
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    Elem u = *it;
    if (u == z || !below.test(u)) continue;
    std::vector<long long> by_label(width, 0);
    for (Elem v : lat.upper_covers(u)) {
      if (!below.test(v)) continue;
      int l = label_of(lat, lab, u, v);
      by_label[static_cast<std::size_t>(std::max(l, 0))] += cnt[v * width + static_cast<std::size_t>(std::max(l, 0))];
    }
    long long run = 0;
    for (std::size_t b = 0; b < width; ++b) {
      run += by_label[b];
      cnt[u * width + b] = run;
    }
  }
  std::vector<long long> row(lat.size(), 0);
  for (Elem u = 0; u < lat.size(); ++u) {
    if (below.test(u)) row[u] = cnt[u * width + inf];
  }
  return row;
}

bool restriction_agrees(const Lattice& lat, const LeftModularChain& chain,
                        const EdgeLabelling& lab, Elem y, Elem z) {
  SubLattice sub = interval(lat, y, z);
  LeftModularChain induced = induced_interval_chain(lat, chain, y, z);
  for (Elem& e : induced.elements) e = *sub.local(e);
  EdgeLabelling local = full_labelling(sub.lattice, induced);
  std::map<int, int> relabel;
  auto covers = sub.lattice.covers();
  for (std::size_t e = 0; e < covers.size(); ++e) {
    int outer = label_of(lat, lab, sub.parent(covers[e].lower), sub.parent(covers[e].upper));
    auto [it, fresh] = relabel.emplace(outer, local.labels[e]);
    if (!fresh && it->second != local.labels[e]) return false;
  }
  int prev = std::numeric_limits<int>::min();
  for (const auto& [outer, inner] : relabel) {
    if (inner <= prev) return false;
    prev = inner;
  }
  return true;
}

bool restriction_agrees(const Lattice& lat, const LeftModularChain& chain, Elem y, Elem z) {
  return restriction_agrees(lat, chain, full_labelling(lat, chain), y, z);
}

}  // namespace trimlat
