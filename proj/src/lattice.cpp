#include "trimlat/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace trimlat {

namespace {

constexpr Elem kNone = static_cast<Elem>(-1);

std::string pair_text(Elem a, Elem b) {
  std::ostringstream os;
  os << "(" << a << ", " << b << ")";
  return os.str();
}

// Positions of set bits, ascending.
std::vector<Elem> members(const BitRow& row) {
  std::vector<Elem> out;
  out.reserve(row.count());
  for (auto i = row.find_first(); i != BitRow::npos; i = row.find_next(i)) {
    out.push_back(static_cast<Elem>(i));
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- Poset

Poset Poset::from_covers(std::size_t size, std::vector<Cover> covers) {
  if (size == 0) throw LatticeError(Errc::InvalidInput, "a poset needs at least one element");
  for (std::size_t k = 0; k < covers.size(); ++k) {
    const auto& c = covers[k];
    if (c.lower >= size || c.upper >= size) {
      throw LatticeError(Errc::InvalidInput, "cover #" + std::to_string(k) + " " +
                                                 pair_text(c.lower, c.upper) +
                                                 " is out of range");
    }
    if (c.lower == c.upper) {
      throw LatticeError(Errc::CycleDetected, "self-loop at element " + std::to_string(c.lower));
    }
  }
  std::sort(covers.begin(), covers.end());
  if (auto dup = std::adjacent_find(covers.begin(), covers.end()); dup != covers.end()) {
    throw LatticeError(Errc::InvalidInput,
                       "duplicate cover " + pair_text(dup->lower, dup->upper));
  }

  std::vector<std::vector<Elem>> succ(size);
  std::vector<std::size_t> indeg(size, 0);
  for (const auto& c : covers) {
    succ[c.lower].push_back(c.upper);
    ++indeg[c.upper];
  }

  // Kahn, smallest index first for a deterministic linear extension.
  std::vector<Elem> topo;
  topo.reserve(size);
  std::priority_queue<Elem, std::vector<Elem>, std::greater<>> ready;
  for (Elem v = 0; v < size; ++v) {
    if (indeg[v] == 0) ready.push(v);
  }
  while (!ready.empty()) {
    Elem v = ready.top();
    ready.pop();
    topo.push_back(v);
    for (Elem w : succ[v]) {
      if (--indeg[w] == 0) ready.push(w);
    }
  }
  if (topo.size() != size) {
    throw LatticeError(Errc::CycleDetected, "the cover relation contains a cycle");
  }

  Poset p;
  p.topo_ = std::move(topo);
  p.up_.assign(size, BitRow(size));
  p.down_.assign(size, BitRow(size));
  for (auto it = p.topo_.rbegin(); it != p.topo_.rend(); ++it) {
    Elem v = *it;
    p.up_[v].set(v);
    for (Elem w : succ[v]) p.up_[v] |= p.up_[w];
  }
  for (Elem a = 0; a < size; ++a) {
    for (auto b = p.up_[a].find_first(); b != BitRow::npos; b = p.up_[a].find_next(b)) {
      p.down_[b].set(a);
    }
  }

  // Transitive reduction: (a, b) is redundant when another successor of a
  // lies below b.
  std::vector<Cover> reduced;
  reduced.reserve(covers.size());
  for (Elem a = 0; a < size; ++a) {
    for (Elem b : succ[a]) {
      bool redundant = false;
      for (Elem c : succ[a]) {
        if (c != b && p.up_[c].test(b)) {
          redundant = true;
          break;
        }
      }
      if (!redundant) reduced.push_back({a, b});
    }
  }
  std::sort(reduced.begin(), reduced.end());
  p.covers_ = std::move(reduced);

  p.up_offset_.assign(size + 1, 0);
  for (const auto& c : p.covers_) ++p.up_offset_[c.lower + 1];
  std::partial_sum(p.up_offset_.begin(), p.up_offset_.end(), p.up_offset_.begin());
  p.up_adj_.reserve(p.covers_.size());
  for (const auto& c : p.covers_) p.up_adj_.push_back(c.upper);

  std::vector<Cover> by_upper = p.covers_;
  std::sort(by_upper.begin(), by_upper.end(), [](const Cover& x, const Cover& y) {
    return std::tie(x.upper, x.lower) < std::tie(y.upper, y.lower);
  });
  p.down_offset_.assign(size + 1, 0);
  for (const auto& c : by_upper) ++p.down_offset_[c.upper + 1];
  std::partial_sum(p.down_offset_.begin(), p.down_offset_.end(), p.down_offset_.begin());
  p.down_adj_.reserve(by_upper.size());
  for (const auto& c : by_upper) p.down_adj_.push_back(c.lower);
  return p;
}

std::span<const Elem> Poset::upper_covers(Elem a) const {
  return {up_adj_.data() + up_offset_[a], up_offset_[a + 1] - up_offset_[a]};
}

std::span<const Elem> Poset::lower_covers(Elem a) const {
  return {down_adj_.data() + down_offset_[a], down_offset_[a + 1] - down_offset_[a]};
}

std::optional<std::size_t> Poset::edge_index(Elem lower, Elem upper) const {
  if (lower >= size() || upper >= size()) return std::nullopt;
  auto ups = upper_covers(lower);
  auto it = std::lower_bound(ups.begin(), ups.end(), upper);
  if (it == ups.end() || *it != upper) return std::nullopt;
  return up_offset_[lower] + static_cast<std::size_t>(it - ups.begin());
}

// -------------------------------------------------------------- Lattice

Lattice Lattice::from_covers(std::size_t size, std::vector<Cover> covers,
                             std::vector<std::string> names) {
  return from_poset(Poset::from_covers(size, std::move(covers)), std::move(names));
}

Lattice Lattice::from_poset(Poset poset, std::vector<std::string> names) {
  const std::size_t n = poset.size();
  if (!names.empty() && names.size() != n) {
    throw LatticeError(Errc::InvalidInput, "names list does not match the element count");
  }
  Elem bottom = kNone;
  Elem top = kNone;
  for (Elem v = 0; v < n; ++v) {
    if (poset.lower_covers(v).empty()) {
      if (bottom != kNone) {
        throw LatticeError(Errc::NoBoundedBottom, "minimal elements " + std::to_string(bottom) +
                                                      " and " + std::to_string(v));
      }
      bottom = v;
    }
  }
  for (Elem v = 0; v < n; ++v) {
    if (poset.upper_covers(v).empty()) {
      if (top != kNone) {
        throw LatticeError(Errc::NoBoundedTop, "maximal elements " + std::to_string(top) +
                                                   " and " + std::to_string(v));
      }
      top = v;
    }
  }

  Lattice lat;
  lat.poset_ = std::move(poset);
  lat.bottom_ = bottom;
  lat.top_ = top;
  lat.names_ = std::move(names);
  lat.meet_.assign(n * n, kNone);
  lat.join_.assign(n * n, kNone);
  const Poset& p = lat.poset_;

  // meet(a, b) for incomparable a, b is the largest of meet(c, b) over the
  // lower covers c of a; it must dominate every other candidate.
  auto fill = [&](std::vector<Elem>& table, std::span<const Elem> order, bool for_meet) {
    for (Elem a : order) {
      for (Elem b = 0; b < n; ++b) {
        Elem& out = table[std::size_t{a} * n + b];
        bool a_first = for_meet ? p.leq(a, b) : p.leq(b, a);
        bool b_first = for_meet ? p.leq(b, a) : p.leq(a, b);
        if (a_first) {
          out = a;
          continue;
        }
        if (b_first) {
          out = b;
          continue;
        }
        auto next = for_meet ? p.lower_covers(a) : p.upper_covers(a);
        auto below = [&](Elem x, Elem y) { return for_meet ? p.leq(x, y) : p.leq(y, x); };
        Elem best = kNone;
        for (Elem c : next) {
          Elem cand = table[std::size_t{c} * n + b];
          if (best == kNone || below(best, cand)) best = cand;
        }
        for (Elem c : next) {
          if (!below(table[std::size_t{c} * n + b], best)) {
            throw LatticeError(Errc::NotALattice,
                               std::string("elements ") + pair_text(a, b) + " have no unique " +
                                   (for_meet ? "meet" : "join"));
          }
        }
        out = best;
      }
    }
  };
  auto topo = p.topological_order();
  fill(lat.meet_, topo, true);
  std::vector<Elem> rev(topo.rbegin(), topo.rend());
  fill(lat.join_, rev, false);
  return lat;
}

Elem Lattice::join_all(std::span<const Elem> elems) const {
  Elem acc = bottom_;
  for (Elem e : elems) acc = join(acc, e);
  return acc;
}

Elem Lattice::meet_all(std::span<const Elem> elems) const {
  Elem acc = top_;
  for (Elem e : elems) acc = meet(acc, e);
  return acc;
}

std::string Lattice::name(Elem a) const {
  if (a < names_.size() && !names_[a].empty()) return names_[a];
  return std::to_string(a);
}

// Builds the lattice induced on a sorted subset closed under meet and join.
Lattice restrict_lattice(const Lattice& lat, std::span<const Elem> elems) {
  const std::size_t k = elems.size();
  std::vector<Elem> local(lat.size(), kNone);
  for (std::size_t i = 0; i < k; ++i) local[elems[i]] = static_cast<Elem>(i);

  // Covers of the induced order: for each a, the minimal elements of the
  // strict up-set within the subset, found in topological order.
  std::vector<Elem> by_topo;
  by_topo.reserve(k);
  for (Elem v : lat.topological_order()) {
    if (local[v] != kNone) by_topo.push_back(v);
  }
  std::vector<Cover> covers;
  for (Elem a : elems) {
    std::vector<Elem> minimal;
    for (Elem b : by_topo) {
      if (b == a || !lat.leq(a, b)) continue;
      bool is_min = std::none_of(minimal.begin(), minimal.end(),
                                 [&](Elem m) { return lat.leq(m, b); });
      if (is_min) minimal.push_back(b);
    }
    for (Elem b : minimal) covers.push_back({local[a], local[b]});
  }

  Lattice out;
  out.poset_ = Poset::from_covers(k, std::move(covers));
  out.meet_.resize(k * k);
  out.join_.resize(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      Elem m = local[lat.meet(elems[i], elems[j])];
      Elem jn = local[lat.join(elems[i], elems[j])];
      if (m == kNone || jn == kNone) {
        throw LatticeError(Errc::NotClosed, "subset is not closed under meet and join at " +
                                                pair_text(elems[i], elems[j]));
      }
      out.meet_[i * k + j] = m;
      out.join_[i * k + j] = jn;
    }
  }
  Elem lo = elems[0];
  Elem hi = elems[0];
  for (Elem e : elems) {
    lo = lat.meet(lo, e);
    hi = lat.join(hi, e);
  }
  out.bottom_ = local[lo];
  out.top_ = local[hi];
  if (!lat.names().empty()) {
    out.names_.reserve(k);
    for (Elem e : elems) out.names_.push_back(lat.names()[e]);
  }
  return out;
}

std::optional<Elem> SubLattice::local(Elem parent_elem) const {
  auto it = std::lower_bound(to_parent.begin(), to_parent.end(), parent_elem);
  if (it == to_parent.end() || *it != parent_elem) return std::nullopt;
  return static_cast<Elem>(it - to_parent.begin());
}

// ---------------------------------------------------------- irreducibles

std::vector<Elem> join_irreducibles(const Lattice& lat) {
  std::vector<Elem> out;
  for (Elem v = 0; v < lat.size(); ++v) {
    if (lat.lower_covers(v).size() == 1) out.push_back(v);
  }
  return out;
}

std::vector<Elem> meet_irreducibles(const Lattice& lat) {
  std::vector<Elem> out;
  for (Elem v = 0; v < lat.size(); ++v) {
    if (lat.upper_covers(v).size() == 1) out.push_back(v);
  }
  return out;
}

std::vector<Elem> atoms(const Lattice& lat) {
  auto ups = lat.upper_covers(lat.bottom());
  return {ups.begin(), ups.end()};
}

std::vector<Elem> coatoms(const Lattice& lat) {
  auto downs = lat.lower_covers(lat.top());
  return {downs.begin(), downs.end()};
}

// ---------------------------------------------------------------- chains

std::vector<std::size_t> depth_from_bottom(const Lattice& lat) {
  std::vector<std::size_t> depth(lat.size(), 0);
  for (Elem v : lat.topological_order()) {
    for (Elem w : lat.upper_covers(v)) depth[w] = std::max(depth[w], depth[v] + 1);
  }
  return depth;
}

std::vector<std::size_t> height_to_top(const Lattice& lat) {
  std::vector<std::size_t> height(lat.size(), 0);
  auto topo = lat.topological_order();
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    for (Elem w : lat.upper_covers(*it)) height[*it] = std::max(height[*it], height[w] + 1);
  }
  return height;
}

std::size_t longest_chain_length(const Lattice& lat) {
  return depth_from_bottom(lat)[lat.top()];
}

std::size_t shortest_maximal_chain_length(const Lattice& lat) {
  constexpr auto kInf = static_cast<std::size_t>(-1);
  std::vector<std::size_t> dist(lat.size(), kInf);
  dist[lat.bottom()] = 0;
  for (Elem v : lat.topological_order()) {
    if (dist[v] == kInf) continue;
    for (Elem w : lat.upper_covers(v)) dist[w] = std::min(dist[w], dist[v] + 1);
  }
  return dist[lat.top()];
}

bool is_graded(const Lattice& lat) {
  auto depth = depth_from_bottom(lat);
  for (const auto& c : lat.covers()) {
    if (depth[c.upper] != depth[c.lower] + 1) return false;
  }
  return true;
}

// ------------------------------------------------------------ sublattices

SubLattice interval(const Lattice& lat, Elem y, Elem z) {
  if (!lat.leq(y, z)) {
    throw LatticeError(Errc::NotComparable, "interval endpoints " + pair_text(y, z) +
                                                " are not ordered");
  }
  BitRow span = lat.up_set(y) & lat.down_set(z);
  auto elems = members(span);
  return {restrict_lattice(lat, elems), std::move(elems)};
}

bool is_sublattice(const Lattice& lat, std::span<const Elem> elems) {
  BitRow in(lat.size());
  for (Elem e : elems) in.set(e);
  for (Elem a : elems) {
    for (Elem b : elems) {
      if (!in.test(lat.meet(a, b)) || !in.test(lat.join(a, b))) return false;
    }
  }
  return !elems.empty();
}

SubLattice induced_sublattice(const Lattice& lat, std::vector<Elem> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (elems.empty()) throw LatticeError(Errc::InvalidInput, "empty element set");
  if (!is_sublattice(lat, elems)) {
    throw LatticeError(Errc::NotClosed, "element set is not closed under meet and join");
  }
  Lattice sub = restrict_lattice(lat, elems);
  return {std::move(sub), std::move(elems)};
}

std::vector<Elem> sublattice_closure(const Lattice& lat, std::span<const Elem> seed) {
  if (seed.empty()) throw LatticeError(Errc::InvalidInput, "closure of an empty seed");
  BitRow in(lat.size());
  std::vector<Elem> have;
  std::vector<Elem> work;
  auto add = [&](Elem e) {
    if (!in.test(e)) {
      in.set(e);
      have.push_back(e);
      work.push_back(e);
    }
  };
  for (Elem e : seed) add(e);
  while (!work.empty()) {
    Elem x = work.back();
    work.pop_back();
    for (std::size_t i = 0; i < have.size(); ++i) {
      Elem y = have[i];
      add(lat.meet(x, y));
      add(lat.join(x, y));
    }
  }
  std::sort(have.begin(), have.end());
  return have;
}

// ------------------------------------------------------ M3 / N5 search

std::optional<std::array<Elem, 5>> find_sublattice_m3(const Lattice& lat) {
  const Elem n = static_cast<Elem>(lat.size());
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = a + 1; b < n; ++b) {
      if (lat.comparable(a, b)) continue;
      Elem lo = lat.meet(a, b);
      Elem hi = lat.join(a, b);
      BitRow span = lat.up_set(lo) & lat.down_set(hi);
      for (auto c = span.find_next(b); c != BitRow::npos; c = span.find_next(c)) {
        Elem e = static_cast<Elem>(c);
        if (lat.comparable(a, e) || lat.comparable(b, e)) continue;
        if (lat.meet(a, e) == lo && lat.meet(b, e) == lo && lat.join(a, e) == hi &&
            lat.join(b, e) == hi) {
          return std::array<Elem, 5>{lo, a, b, e, hi};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::array<Elem, 5>> find_sublattice_n5(const Lattice& lat) {
  // x < y and z with x∨z = y∨z, x∧z = y∧z; z is then incomparable to both.
  const Elem n = static_cast<Elem>(lat.size());
  for (Elem z = 0; z < n; ++z) {
    for (Elem x = 0; x < n; ++x) {
      if (lat.comparable(x, z)) continue;
      Elem lo = lat.meet(x, z);
      Elem hi = lat.join(x, z);
      const BitRow& above = lat.up_set(x);
      for (auto c = above.find_first(); c != BitRow::npos; c = above.find_next(c)) {
        Elem y = static_cast<Elem>(c);
        if (y == x || lat.comparable(y, z)) continue;
        if (lat.meet(y, z) == lo && lat.join(y, z) == hi) {
          return std::array<Elem, 5>{lo, x, y, z, hi};
        }
      }
    }
  }
  return std::nullopt;
}

bool is_distributive(const Lattice& lat) {
  return !find_sublattice_m3(lat) && !find_sublattice_n5(lat);
}

// ---------------------------------------------------------------- Möbius

std::vector<long long> mobius_row(const Lattice& lat, Elem x) {
  std::vector<long long> mu(lat.size(), 0);
  const BitRow& above = lat.up_set(x);
  for (Elem y : lat.topological_order()) {
    if (!above.test(y)) continue;
    if (y == x) {
      mu[y] = 1;
      continue;
    }
    BitRow between = above & lat.down_set(y);
    between.reset(y);
    long long sum = 0;
    for (auto z = between.find_first(); z != BitRow::npos; z = between.find_next(z)) {
      sum += mu[z];
    }
    mu[y] = -sum;
  }
  return mu;
}

long long mobius(const Lattice& lat, Elem x, Elem y) {
  if (!lat.leq(x, y)) {
    throw LatticeError(Errc::NotComparable, "mobius needs x <= y, got " + pair_text(x, y));
  }
  return mobius_row(lat, x)[y];
}

// ----------------------------------------------------------- isomorphism

std::optional<std::vector<Elem>> find_isomorphism(const Lattice& a, const Lattice& b) {
  const std::size_t n = a.size();
  if (n != b.size() || a.num_edges() != b.num_edges()) return std::nullopt;

  using Signature = std::array<std::size_t, 6>;
  auto signatures = [](const Lattice& lat) {
    auto depth = depth_from_bottom(lat);
    auto height = height_to_top(lat);
    std::vector<Signature> sig(lat.size());
    for (Elem v = 0; v < lat.size(); ++v) {
      sig[v] = {depth[v],
                height[v],
                lat.upper_covers(v).size(),
                lat.lower_covers(v).size(),
                lat.up_set(v).count(),
                lat.down_set(v).count()};
    }
    return sig;
  };
  auto sa = signatures(a);
  auto sb = signatures(b);
  {
    auto x = sa;
    auto y = sb;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return std::nullopt;
  }

  std::vector<Elem> order(a.topological_order().begin(), a.topological_order().end());
  std::vector<Elem> map(n, kNone);
  std::vector<bool> used(n, false);

  auto consistent = [&](std::size_t depth, Elem cand) {
    Elem v = order[depth];
    for (std::size_t i = 0; i < depth; ++i) {
      Elem u = order[i];
      if (a.leq(u, v) != b.leq(map[u], cand) || a.leq(v, u) != b.leq(cand, map[u])) {
        return false;
      }
    }
    return true;
  };

  // Iterative backtracking over the linear extension of a.
  std::vector<Elem> next_try(n, 0);
  std::size_t depth = 0;
  while (true) {
    if (depth == n) return map;
    Elem v = order[depth];
    bool placed = false;
    for (Elem cand = next_try[depth]; cand < n; ++cand) {
      if (used[cand] || sa[v] != sb[cand] || !consistent(depth, cand)) continue;
      map[v] = cand;
      used[cand] = true;
      next_try[depth] = cand + 1;
      placed = true;
      break;
    }
    if (placed) {
      ++depth;
      if (depth < n) next_try[depth] = 0;
      continue;
    }
    if (depth == 0) return std::nullopt;
    --depth;
    used[map[order[depth]]] = false;
    map[order[depth]] = kNone;
  }
}

Lattice dual(const Lattice& lat) {
  std::vector<Cover> covers;
  covers.reserve(lat.num_edges());
  for (const auto& c : lat.covers()) covers.push_back({c.upper, c.lower});
  return Lattice::from_covers(lat.size(), std::move(covers), lat.names());
}

}  // namespace trimlat
