#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "trimlat/lattice.hpp"

namespace trimlat {

/// Maximal chain x_0 = bottom < x_1 < ... < x_n = top of left modular elements.
struct LeftModularChain {
  std::vector<Elem> elements;

  std::size_t length() const { return elements.empty() ? 0 : elements.size() - 1; }
  Elem operator[](std::size_t i) const { return elements[i]; }
};

/// Integer label per cover edge, indexed like Lattice::covers().
struct EdgeLabelling {
  std::vector<int> labels;

  int at(const Lattice& lat, Elem lower, Elem upper) const;
};

/// A pair y < z where (y ∨ x) ∧ z != y ∨ (x ∧ z), or nothing.
std::optional<std::pair<Elem, Elem>> left_modular_violation(const Lattice& lat, Elem x);
bool is_left_modular(const Lattice& lat, Elem x);

/// Checks covers, endpoints and left modularity of every element.
/// Throws InvalidInput or NotLeftModular.
LeftModularChain make_left_modular_chain(const Lattice& lat, std::vector<Elem> elements);

/// Lexicographically least (by element index) maximal chain of left modular
/// elements. With maximum_length set, only chains of maximum length count.
std::optional<LeftModularChain> find_left_modular_maximal_chain(const Lattice& lat,
                                                                bool maximum_length = false);

/// Chain y ∨ (x_i ∧ z) of [y, z] in the parent's indices, deduplicated.
/// Throws NotComparable, or NotLeftModular when the two bracketings differ.
LeftModularChain induced_interval_chain(const Lattice& lat, const LeftModularChain& chain,
                                        Elem y, Elem z);

int delta(const Lattice& lat, const LeftModularChain& chain, Elem v);
int epsilon(const Lattice& lat, const LeftModularChain& chain, Elem v);
int gamma_join(const Lattice& lat, const LeftModularChain& chain, Elem y, Elem z);
int gamma_meet(const Lattice& lat, const LeftModularChain& chain, Elem y, Elem z);
int gamma_chain(const Lattice& lat, const LeftModularChain& chain, Elem y, Elem z);

/// All three labellings on every edge; throws LabellingsDisagree with the edge.
EdgeLabelling full_labelling(const Lattice& lat, const LeftModularChain& chain);

bool is_el_labelling(const Lattice& lat, const EdgeLabelling& lab);

/// Checks every non-increasing 2-chain. Throws NotEL if lab is not EL.
bool is_interpolating(const Lattice& lat, const EdgeLabelling& lab);

/// Unique strictly increasing maximal chain of [y, z]. Throws NotEL.
std::vector<Elem> increasing_chain(const Lattice& lat, const EdgeLabelling& lab, Elem y, Elem z);
/// All maximal chains of [y, z] with weakly decreasing labels.
std::vector<std::vector<Elem>> decreasing_chains(const Lattice& lat, const EdgeLabelling& lab,
                                                 Elem y, Elem z);
/// Number of weakly decreasing maximal chains of [y, z] for every y <= z,
/// as a row indexed by y.
std::vector<long long> decreasing_chain_counts_to(const Lattice& lat, const EdgeLabelling& lab,
                                                  Elem z);

bool restriction_agrees(const Lattice& lat, const LeftModularChain& chain, Elem y, Elem z);
/// Same check against a precomputed labelling of lat.
bool restriction_agrees(const Lattice& lat, const LeftModularChain& chain,
                        const EdgeLabelling& lab, Elem y, Elem z);

}  // namespace trimlat
