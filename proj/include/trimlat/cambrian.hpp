#pragma once

#include <map>
#include <memory>
#include <optional>

#include "trimlat/coxeter.hpp"
#include "trimlat/modularity.hpp"
#include "trimlat/trim.hpp"

namespace trimlat {

/// Quotient of weak order whose fiber bottoms are b_set and tops t_set.
/// Class k of the quotient is represented by bottoms[k] (sorted ambient index).
struct CambrianLattice {
  Orientation orient;
  std::shared_ptr<const WeakOrder> ambient;
  Lattice quotient;
  std::vector<Elem> class_of;  // ambient element -> class
  std::vector<Elem> p_down;    // ambient element -> fiber bottom
  std::vector<Elem> p_up;      // ambient element -> fiber top
  std::vector<Elem> bottoms;   // class -> ambient fiber bottom
  std::vector<Elem> tops;      // class -> ambient fiber top
};

/// Throws FiberNotUnique, FibersNotPartition, NotHomomorphism.
CambrianLattice build_cambrian(std::shared_ptr<const WeakOrder> ambient, const Orientation& orient);
CambrianLattice build_cambrian(const Orientation& orient);

/// I(y') \ I(x) where x is the top of the lower class and y' is the element
/// of the upper class covering it; one root per quotient edge.
std::vector<Root> cambrian_root_labels(const CambrianLattice& c);
Root cambrian_label(const CambrianLattice& c, Elem lower_class, Elem upper_class);
/// Every ambient cover crossing classes carries its class edge's root.
bool crossing_covers_match_labels(const CambrianLattice& c);

/// Orientation of B_n extending a type A orientation of S_n by the edge s0 - s1.
Orientation affix_edge(const Orientation& orient_a, bool forward);

/// Integer labels: positions (from 1) in the order the roots become
/// inversions along the chain for c^n (type B) or along the chain of an
/// extended B_n orientation restricted to e_j - e_i (type A). Checks the EL
/// and interpolating properties (NotEL, NotInterpolating) and, in type B,
/// that the chain's classes form the increasing chain.
EdgeLabelling cambrian_label_order(const CambrianLattice& c);

/// Classes of the chain x_0 .. x_{n^2} (type B only).
std::vector<Elem> xi_classes(const CambrianLattice& c);

/// Trimness with the witness chain taken from xi_classes in type B.
/// Throws CrossCheckFailed naming the failing part.
TrimWitness verify_trim_cambrian(const CambrianLattice& c);

struct Embedding {
  Orientation orient_b;
  CambrianLattice type_b;
  Elem top_class;            // class of the longest element of S_n
  SubLattice lower_interval;  // [bottom, top_class] of type_b's quotient
  std::vector<Elem> iso;      // type A quotient -> lower_interval
};
/// Throws IsomorphismFailed.
Embedding embed_a_in_b(const CambrianLattice& type_a, bool affixed_forward);

/// Join-irreducibles of the fiber bottoms keyed by the pair (x, y) the cover
/// below them transposes, y > 0 and |y| >= |x|. Throws CensusMismatch if the
/// keys are not exactly {(x, y) : -y <= x < y} with one element each.
std::map<std::pair<int, int>, Elem> join_irreducible_census_b(const CambrianLattice& c);

}  // namespace trimlat
