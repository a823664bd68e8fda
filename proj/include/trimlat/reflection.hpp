#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "trimlat/lattice.hpp"

namespace trimlat {

/// a + b*w in Z[w] with w^2 = p + q*w and w the positive root of that
/// quadratic. p = q = 0 gives plain integers.
struct Quad {
  long long a = 0;
  long long b = 0;
  bool operator==(const Quad&) const = default;
};

struct QuadField {
  long long p = 0;
  long long q = 0;
  std::string symbol;  // printed name of w

  Quad add(Quad x, Quad y) const { return {x.a + y.a, x.b + y.b}; }
  Quad sub(Quad x, Quad y) const { return {x.a - y.a, x.b - y.b}; }
  Quad mul(Quad x, Quad y) const;
  int sign(Quad x) const;
  std::string to_string(Quad x) const;
};

using RootVector = std::vector<Quad>;  // coordinates in the simple roots

/// Finite reflection group given by a Cartan matrix, with roots and elements
/// enumerated exactly. Positive roots are indexed 0..N-1 (simple roots first);
/// -root k has index k + N. Elements act on these 2N indices.
struct ReflectionGroup {
  std::string name;
  std::size_t rank = 0;
  QuadField field;
  std::vector<std::vector<Quad>> cartan;  // cartan[i][j] = <alpha_j, alpha_i^vee>
  std::vector<std::pair<int, int>> diagram_edges;
  std::vector<RootVector> roots;
  std::vector<std::vector<std::uint16_t>> simple_action;
  std::vector<std::vector<std::uint16_t>> elements;
  std::vector<std::uint64_t> inversions;
  std::vector<std::vector<int>> words;  // a reduced word per element
  Lattice weak_order;
  std::vector<std::size_t> degrees;
  std::size_t coxeter_number = 0;
  Elem longest = 0;
  bool contains_minus_one = false;

  std::size_t num_positive() const { return roots.size(); }
  Elem find(std::uint64_t inversion_mask) const;
  std::string root_name(std::size_t k) const;

  std::unordered_map<std::uint64_t, Elem> by_inversions;
};

/// "I2(m)" for m in {3,4,5,6,8,10,12}, "Bn", "Dn", "H3", "F4". Group order is
/// checked against the cap before enumeration (CapExceeded); unknown or
/// unsupported names throw UnsupportedType.
ReflectionGroup build_group(std::string_view name, std::size_t cap = 1500);

/// Orientation of the diagram: one flag per diagram edge (i, j), i < j;
/// true means s_i -> s_j.
using DiagramOrientation = std::vector<bool>;
/// Literal "s0<s1,s1>s2" (arrowhead toward the target); unlisted edges
/// point from the smaller to the larger index.
DiagramOrientation parse_diagram_orientation(const ReflectionGroup& g, std::string_view literal);
std::vector<DiagramOrientation> all_diagram_orientations(const ReflectionGroup& g);
std::string diagram_orientation_string(const ReflectionGroup& g, const DiagramOrientation& o);

/// Generators in word order; sources first, ties to the smaller index.
std::vector<int> coxeter_word(const ReflectionGroup& g, const DiagramOrientation& o);

struct HalfCoxeterChain {
  std::vector<Elem> elements;            // x_0 .. x_N
  std::vector<std::size_t> root_order;   // roots in the order they become inversions
};
/// Prefixes of the word for c^{h/2}. Throws MinusOneAbsent, NotReduced, and
/// CrossCheckFailed if the product is not the longest element.
HalfCoxeterChain half_coxeter_chain(const ReflectionGroup& g, const DiagramOrientation& o);

/// Positive roots of each rank-2 subspace spanned by two roots, as bitmasks,
/// deduplicated and sorted.
std::vector<std::uint64_t> rank2_root_sets(const ReflectionGroup& g);

/// prod (h + d_i) / d_i over the degrees.
std::size_t coxeter_catalan(const ReflectionGroup& g);

}  // namespace trimlat
