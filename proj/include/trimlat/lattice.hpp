#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "trimlat/error.hpp"

namespace trimlat {

using Elem = std::uint32_t;
using BitRow = boost::dynamic_bitset<std::uint64_t>;

struct Cover {
  Elem lower;
  Elem upper;
  auto operator<=>(const Cover&) const = default;
};

/// Finite poset given by its Hasse diagram. Covers are kept as the
/// transitive reduction of the order; redundant input pairs are dropped.
class Poset {
 public:
  Poset() = default;

  /// Throws CycleDetected, or InvalidInput on out-of-range or duplicate pairs.
  static Poset from_covers(std::size_t size, std::vector<Cover> covers);

  std::size_t size() const noexcept { return up_.size(); }
  bool leq(Elem a, Elem b) const { return up_[a].test(b); }
  bool lt(Elem a, Elem b) const { return a != b && up_[a].test(b); }
  bool comparable(Elem a, Elem b) const { return leq(a, b) || leq(b, a); }

  /// Row of the order bit-matrix: {b : a <= b}.
  const BitRow& up_set(Elem a) const { return up_[a]; }
  /// Column view: {b : b <= a}.
  const BitRow& down_set(Elem a) const { return down_[a]; }

  /// Sorted by (lower, upper); the position in this list is the edge index.
  std::span<const Cover> covers() const noexcept { return covers_; }
  std::span<const Elem> upper_covers(Elem a) const;
  std::span<const Elem> lower_covers(Elem a) const;
  bool is_cover(Elem a, Elem b) const { return edge_index(a, b).has_value(); }
  std::optional<std::size_t> edge_index(Elem lower, Elem upper) const;

  /// Linear extension, minimal elements first.
  std::span<const Elem> topological_order() const noexcept { return topo_; }

 private:
  std::vector<Cover> covers_;
  std::vector<std::size_t> up_offset_;
  std::vector<Elem> up_adj_;
  std::vector<std::size_t> down_offset_;
  std::vector<Elem> down_adj_;
  std::vector<BitRow> up_;
  std::vector<BitRow> down_;
  std::vector<Elem> topo_;
};

/// Finite lattice with precomputed meet and join tables.
/// Immutable after construction.
class Lattice {
 public:
  Lattice() = default;

  /// Throws CycleDetected, NoBoundedBottom, NoBoundedTop or NotALattice.
  static Lattice from_covers(std::size_t size, std::vector<Cover> covers,
                             std::vector<std::string> names = {});
  static Lattice from_poset(Poset poset, std::vector<std::string> names = {});

  const Poset& poset() const noexcept { return poset_; }
  std::size_t size() const noexcept { return poset_.size(); }
  Elem bottom() const noexcept { return bottom_; }
  Elem top() const noexcept { return top_; }

  bool leq(Elem a, Elem b) const { return poset_.leq(a, b); }
  bool lt(Elem a, Elem b) const { return poset_.lt(a, b); }
  bool comparable(Elem a, Elem b) const { return poset_.comparable(a, b); }
  Elem meet(Elem a, Elem b) const { return meet_[index(a, b)]; }
  Elem join(Elem a, Elem b) const { return join_[index(a, b)]; }

  std::span<const Cover> covers() const noexcept { return poset_.covers(); }
  std::size_t num_edges() const noexcept { return poset_.covers().size(); }
  std::span<const Elem> upper_covers(Elem a) const { return poset_.upper_covers(a); }
  std::span<const Elem> lower_covers(Elem a) const { return poset_.lower_covers(a); }
  bool is_cover(Elem a, Elem b) const { return poset_.is_cover(a, b); }
  std::optional<std::size_t> edge_index(Elem lower, Elem upper) const {
    return poset_.edge_index(lower, upper);
  }
  const BitRow& up_set(Elem a) const { return poset_.up_set(a); }
  const BitRow& down_set(Elem a) const { return poset_.down_set(a); }
  std::span<const Elem> topological_order() const noexcept {
    return poset_.topological_order();
  }

  /// Join of a set of elements; the empty join is the bottom.
  Elem join_all(std::span<const Elem> elems) const;
  Elem meet_all(std::span<const Elem> elems) const;

  const std::vector<std::string>& names() const noexcept { return names_; }
  std::string name(Elem a) const;

 private:
  friend Lattice restrict_lattice(const Lattice&, std::span<const Elem>);

  std::size_t index(Elem a, Elem b) const { return std::size_t{a} * size() + b; }

  Poset poset_;
  Elem bottom_ = 0;
  Elem top_ = 0;
  std::vector<Elem> meet_;
  std::vector<Elem> join_;
  std::vector<std::string> names_;
};

/// A lattice induced on a subset of a parent lattice, with the embedding.
struct SubLattice {
  Lattice lattice;
  std::vector<Elem> to_parent;

  Elem parent(Elem a) const { return to_parent[a]; }
  std::optional<Elem> local(Elem parent_elem) const;
};

std::vector<Elem> join_irreducibles(const Lattice& lat);
std::vector<Elem> meet_irreducibles(const Lattice& lat);
std::vector<Elem> atoms(const Lattice& lat);
std::vector<Elem> coatoms(const Lattice& lat);

/// Length (number of covers) of the longest chain from the bottom to each
/// element, and from each element to the top.
std::vector<std::size_t> depth_from_bottom(const Lattice& lat);
std::vector<std::size_t> height_to_top(const Lattice& lat);
std::size_t longest_chain_length(const Lattice& lat);
std::size_t shortest_maximal_chain_length(const Lattice& lat);

/// True iff in every interval all maximal chains have the same length.
/// Checked through the rank criterion: every cover raises the longest-chain
/// depth by exactly one.
bool is_graded(const Lattice& lat);

/// Induced lattice on {w : y <= w <= z}. Throws NotComparable.
SubLattice interval(const Lattice& lat, Elem y, Elem z);

/// Induced lattice on a subset closed under meet and join. Throws NotClosed.
SubLattice induced_sublattice(const Lattice& lat, std::vector<Elem> elems);

bool is_sublattice(const Lattice& lat, std::span<const Elem> elems);

/// Smallest superset of seed closed under meet and join (sorted).
std::vector<Elem> sublattice_closure(const Lattice& lat, std::span<const Elem> seed);

/// Witness order for M3: (bottom, a, b, c, top).
/// Witness order for N5: (bottom, x, y, z, top) with x < y and z the short side.
std::optional<std::array<Elem, 5>> find_sublattice_m3(const Lattice& lat);
std::optional<std::array<Elem, 5>> find_sublattice_n5(const Lattice& lat);
bool is_distributive(const Lattice& lat);

/// Möbius function. Throws NotComparable unless x <= y.
long long mobius(const Lattice& lat, Elem x, Elem y);
/// mu(x, y) for every y; zero where x is not below y.
std::vector<long long> mobius_row(const Lattice& lat, Elem x);

/// Order isomorphism from a to b as a map a-index -> b-index.
std::optional<std::vector<Elem>> find_isomorphism(const Lattice& a, const Lattice& b);

/// The order dual (same element indices).
Lattice dual(const Lattice& lat);

}  // namespace trimlat
