#pragma once

#include <span>
#include <utility>
#include <vector>

#include "trimlat/lattice.hpp"

namespace trimlat {

/// Partition of lattice elements; classes are numbered in order of their
/// smallest element index.
struct Congruence {
  std::vector<Elem> class_of;

  std::size_t num_classes() const;
  bool operator==(const Congruence&) const = default;

  static Congruence discrete(std::size_t size);
};

/// Least congruence containing base and identifying each pair: union-find
/// closed under a = b => a v c = b v c and a ^ c = b ^ c. Throws
/// NotACongruence if a class fails to be an interval.
Congruence smallest_congruence(const Lattice& lat, std::span<const std::pair<Elem, Elem>> pairs);
Congruence smallest_congruence(const Lattice& lat, const Congruence& base,
                               std::span<const std::pair<Elem, Elem>> pairs);

struct Quotient {
  Lattice lattice;            // element k is class k, named after its bottom
  std::vector<Elem> class_of;
  std::vector<Elem> bottoms;  // class -> smallest member
  std::vector<Elem> tops;     // class -> largest member
};
/// Throws NotACongruence unless classes are intervals and the class map
/// preserves meets and joins.
Quotient quotient(const Lattice& lat, const Congruence& theta);

}  // namespace trimlat
