#pragma once

#include <functional>

#include "trimlat/lattice.hpp"

namespace trimlat {

/// Lattice from an arbitrary order predicate; covers are derived.
Lattice lattice_from_order(std::size_t size, const std::function<bool(Elem, Elem)>& leq,
                           std::vector<std::string> names = {});

/// Chain 0 < 1 < ... < length.
Lattice chain_lattice(std::size_t length);
/// Subsets of {1..rank}; element index is the bitmask.
Lattice boolean_lattice(std::size_t rank);
/// Pentagon with elements 0=bottom, 1=x, 2=y, 3=z, 4=top and x < y.
Lattice n5_lattice();
/// Diamond with three atoms: 0=bottom, 1=a, 2=b, 3=c, 4=top.
Lattice m3_lattice();
/// Tamari lattice on Catalan(n) binary bracketings, built from bracket
/// vectors under the componentwise order.
Lattice tamari_lattice(std::size_t n);

/// Cartesian product with the componentwise order.
Lattice product_lattice(const Lattice& a, const Lattice& b);

}  // namespace trimlat
