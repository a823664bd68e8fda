#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trimlat/lattice.hpp"
#include "trimlat/modularity.hpp"

namespace trimlat {

struct TrimWitness {
  LeftModularChain chain;
  std::size_t n = 0;
  std::vector<Elem> join_irreducibles;
  std::vector<Elem> meet_irreducibles;
};

bool is_extremal(const Lattice& lat);

/// Extremal and carrying a left modular chain of maximum length.
std::optional<TrimWitness> is_trim(const Lattice& lat);

/// Human-readable reason is_trim fails, empty when it holds.
std::string trim_failure_reason(const Lattice& lat);

/// delta and epsilon are bijections onto 1..n.
bool unique_irreducible_per_label(const Lattice& lat, const TrimWitness& w);

/// Elements lying on some maximum-length chain from bottom to top (sorted).
std::vector<Elem> spine(const Lattice& lat);

struct SpineReport {
  bool all_left_modular = true;
  bool closed = true;
  bool distributive = true;
  std::optional<Elem> not_left_modular;
  std::optional<std::pair<Elem, Elem>> not_closed;
  std::optional<std::array<Elem, 5>> forbidden;  // M3/N5 witness, parent indices

  bool ok() const { return all_left_modular && closed && distributive; }
};
SpineReport spine_checks(const Lattice& lat);

/// Group of lattice automorphisms given by generators (element permutations).
class AutomorphismGroup {
 public:
  /// Throws NotAnAutomorphism naming the generator and failing pair.
  static AutomorphismGroup from_generators(const Lattice& lat,
                                           std::vector<std::vector<Elem>> generators);

  const std::vector<std::vector<Elem>>& generators() const noexcept { return gens_; }
  /// All group elements by closure under composition (identity first).
  std::vector<std::vector<Elem>> elements(std::size_t cap = 100000) const;

 private:
  std::vector<std::vector<Elem>> gens_;
  std::size_t size_ = 0;
};

/// Induced lattice on the elements fixed by every generator.
SubLattice fixed_sublattice(const Lattice& lat, const AutomorphismGroup& g);

struct LevelViolation {
  Elem atom;
  std::vector<Elem> others;
};
/// No atom a lies strictly below b_1 ∨ ... ∨ b_k for atoms with
/// delta(a) < delta(b_1) < ... < delta(b_k). Throws CapExceeded.
std::optional<LevelViolation> level_condition(const Lattice& lat, const LeftModularChain& chain,
                                              std::size_t atom_cap = 16);

struct SemimodularityViolation {
  Elem w, y, z;
  bool dual = false;         // failure of the order-dual statement
  bool consequence = false;  // y ∨ z covers neither y nor z (or dual)
};
/// For w < y, w < z covers with label(w,y) < label(w,z): z is covered by y ∨ z.
/// Also checks the dual and the "covers at least one" consequence.
std::optional<SemimodularityViolation> weak_semimodularity(const Lattice& lat,
                                                           const EdgeLabelling& lab);

bool is_nuclear(const Lattice& lat);

struct HomotopyType {
  enum class Kind { Contractible, Sphere } kind = Kind::Contractible;
  int dimension = 0;

  std::string to_string() const;
  bool operator==(const HomotopyType&) const = default;
};
/// Throws CrossCheckFailed when decreasing chains or the Möbius value
/// disagree with nuclearity, InvalidInput on a one-element lattice.
HomotopyType homotopy_type(const Lattice& lat, const TrimWitness& w);
HomotopyType homotopy_type(const Lattice& lat, const EdgeLabelling& lab);

/// Runs is_trim on the sublattice K. Throws NotClosed or ChainNotContained.
bool sublattice_trim_check(const Lattice& lat, const TrimWitness& w, std::vector<Elem> k);

/// Runs trimness and its consequences: full labelling is EL, level
/// condition, weak semimodularity, spine checks, and on every interval
/// trimness, homotopy type and a Möbius value in {-1, 0, 1}. Returns a
/// description of the first failure.
std::optional<std::string> trim_consequence_failure(const Lattice& lat, bool all_intervals = true);

}  // namespace trimlat
