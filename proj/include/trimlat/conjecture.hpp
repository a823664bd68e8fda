#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trimlat/congruence.hpp"
#include "trimlat/reflection.hpp"

namespace trimlat {

enum class WitnessOrder {
  BottomUpSingle,  // one violation per round, scanning the chain upwards
  TopDownBatch,    // one violation per chain element per round, scanning downwards
};

struct PreCambrian {
  Congruence theta;
  Quotient quotient;
  std::vector<Elem> chain;  // classes of x_0 .. x_N with repeats removed
  std::size_t rounds = 0;
};

/// Finest congruence of the lattice under which the classes of the chain are
/// left modular, grown from the discrete one by contracting, for each
/// violation (y, z) at a chain class x, the pair y v (x ^ z) and (y v x) ^ z.
PreCambrian pre_cambrian_search(const Lattice& lat, const std::vector<Elem>& chain, WitnessOrder order);

/// Runs both witness orders; throws OrderDependence if they disagree and
/// CrossCheckFailed if the chain classes are not left modular afterwards.
PreCambrian pre_cambrian(const ReflectionGroup& g, const DiagramOrientation& o);

struct Conjecture1Report {
  std::size_t size = 0;
  bool trim = false;
  std::optional<std::string> failure;
};
Conjecture1Report conjecture1_check(const PreCambrian& pc);

struct SetComparison {
  bool equal = false;
  std::size_t predicted = 0;
  std::size_t actual = 0;
  std::optional<std::string> first_difference;
};
struct Conjecture2Report {
  // the order on each rank-2 subsystem is the restriction of the chain's
  // root order (listed) or its reverse
  SetComparison bottoms_listed, bottoms_reversed, tops_listed, tops_reversed;
  std::size_t rank2_subsystems = 0;
};
Conjecture2Report conjecture2_check(const ReflectionGroup& g, const DiagramOrientation& o,
                                    const PreCambrian& pc);

struct Conjecture3Report {
  std::size_t size = 0;
  std::size_t coxeter_catalan = 0;
  // only for groups of type B, compared with the pattern-avoidance construction
  std::optional<bool> isomorphic_to_cambrian;
  std::optional<bool> same_fibers;
};
Conjecture3Report conjecture3_check(const ReflectionGroup& g, const DiagramOrientation& o,
                                    const PreCambrian& pc);

}  // namespace trimlat
