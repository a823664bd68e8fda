#include "trimlat/congruence.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace trimlat {

std::size_t Congruence::num_classes() const {
  if (class_of.empty()) return 0;
  return *std::max_element(class_of.begin(), class_of.end()) + 1;
}

Congruence Congruence::discrete(std::size_t size) {
  Congruence c;
  c.class_of.resize(size);
  std::iota(c.class_of.begin(), c.class_of.end(), Elem{0});
  return c;
}

namespace {

struct UnionFind {
  std::vector<Elem> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), Elem{0}); }
  Elem find(Elem x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(Elem a, Elem b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

Congruence normalize(UnionFind& uf) {
  Congruence c;
  const std::size_t n = uf.parent.size();
  c.class_of.resize(n);
  std::vector<Elem> id(n, static_cast<Elem>(-1));
  Elem next = 0;
  for (Elem x = 0; x < n; ++x) {
    Elem r = uf.find(x);
    if (id[r] == static_cast<Elem>(-1)) id[r] = next++;
    c.class_of[x] = id[r];
  }
  return c;
}

// bottoms and tops of each class; throws unless every class is an interval
std::pair<std::vector<Elem>, std::vector<Elem>> class_bounds(const Lattice& lat, const Congruence& theta) {
  const std::size_t k = theta.num_classes();
  std::vector<std::vector<Elem>> members(k);
  for (Elem x = 0; x < lat.size(); ++x) members[theta.class_of[x]].push_back(x);
  std::vector<Elem> bottoms(k);
  std::vector<Elem> tops(k);
  for (std::size_t c = 0; c < k; ++c) {
    Elem lo = lat.meet_all(members[c]);
    Elem hi = lat.join_all(members[c]);
    std::size_t span = (lat.up_set(lo) & lat.down_set(hi)).count();
    if (theta.class_of[lo] != c || theta.class_of[hi] != c || span != members[c].size()) {
      throw LatticeError(Errc::NotACongruence,
                         "class of " + lat.name(members[c][0]) + " is not an interval");
    }
    bottoms[c] = lo;
    tops[c] = hi;
  }
  return {bottoms, tops};
}

}  // namespace

Congruence smallest_congruence(const Lattice& lat, const Congruence& base,
                               std::span<const std::pair<Elem, Elem>> pairs) {
  const std::size_t n = lat.size();
  if (base.class_of.size() != n) throw LatticeError(Errc::InvalidInput, "base congruence has the wrong size");
  UnionFind uf(n);
  std::vector<Elem> first(base.num_classes(), static_cast<Elem>(-1));
  for (Elem x = 0; x < n; ++x) {
    Elem& f = first[base.class_of[x]];
    if (f == static_cast<Elem>(-1)) {
      f = x;
    } else {
      uf.unite(f, x);
    }
  }
  std::deque<std::pair<Elem, Elem>> work;
  auto merge = [&](Elem a, Elem b) {
    if (uf.unite(a, b)) work.emplace_back(a, b);
  };
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) throw LatticeError(Errc::InvalidInput, "pair element out of range");
    merge(a, b);
  }
  while (!work.empty()) {
    auto [a, b] = work.front();
    work.pop_front();
    for (Elem c = 0; c < n; ++c) {
      merge(lat.join(a, c), lat.join(b, c));
      merge(lat.meet(a, c), lat.meet(b, c));
    }
  }
  Congruence out = normalize(uf);
  class_bounds(lat, out);
  return out;
}

Congruence smallest_congruence(const Lattice& lat, std::span<const std::pair<Elem, Elem>> pairs) {
  return smallest_congruence(lat, Congruence::discrete(lat.size()), pairs);
}

Quotient quotient(const Lattice& lat, const Congruence& theta) {
  if (theta.class_of.size() != lat.size()) {
    throw LatticeError(Errc::NotACongruence, "partition has the wrong size");
  }
  auto [bottoms, tops] = class_bounds(lat, theta);
  const std::size_t k = bottoms.size();
  std::set<std::pair<Elem, Elem>> edges;
  for (const auto& e : lat.covers()) {
    Elem a = theta.class_of[e.lower];
    Elem b = theta.class_of[e.upper];
    if (a != b) edges.emplace(a, b);
  }
  std::vector<Cover> covers;
  for (auto [a, b] : edges) covers.push_back({a, b});
  std::vector<std::string> names;
  for (Elem b : bottoms) names.push_back(lat.name(b));
  Quotient q;
  try {
    q.lattice = Lattice::from_covers(k, std::move(covers), std::move(names));
  } catch (const LatticeError& e) {
    throw LatticeError(Errc::NotACongruence, std::string("classes do not form a lattice: ") + e.what());
  }
  // a cover image that is not a cover of the class order shows up as a
  // transitive edge, which from_covers reduces away; the check below catches
  // any resulting disagreement
  for (Elem a = 0; a < lat.size(); ++a) {
    for (Elem b = a; b < lat.size(); ++b) {
      Elem ca = theta.class_of[a];
      Elem cb = theta.class_of[b];
      if (theta.class_of[lat.join(a, b)] != q.lattice.join(ca, cb) ||
          theta.class_of[lat.meet(a, b)] != q.lattice.meet(ca, cb)) {
        throw LatticeError(Errc::NotACongruence, "class map does not preserve operations at (" +
                                                     lat.name(a) + ", " + lat.name(b) + ")");
      }
    }
  }
  q.class_of = theta.class_of;
  q.bottoms = std::move(bottoms);
  q.tops = std::move(tops);
  return q;
}

}  // namespace trimlat
