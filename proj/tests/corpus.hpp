#pragma once

#include <random>
#include <string>
#include <vector>

#include "trimlat/cambrian.hpp"
#include "trimlat/conjecture.hpp"
#include "trimlat/families.hpp"

namespace corpus {

using namespace trimlat;

struct Entry {
  std::string name;
  Lattice lattice;
};

// Sublattices of B_5 generated by a few random subsets, fixed seed.
inline std::vector<Entry> random_sublattices(std::size_t count, unsigned seed = 20261015) {
  std::mt19937 rng(seed);
  Lattice b5 = boolean_lattice(5);
  std::vector<Entry> out;
  std::uniform_int_distribution<Elem> pick(0, 31);
  std::uniform_int_distribution<int> how_many(2, 6);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Elem> seed_set;
    for (int k = how_many(rng); k > 0; --k) seed_set.push_back(pick(rng));
    auto closed = sublattice_closure(b5, seed_set);
    if (closed.size() < 2) continue;
    out.push_back({"random-sublattice-" + std::to_string(i), induced_sublattice(b5, closed).lattice});
  }
  return out;
}

inline std::vector<Entry> lattices() {
  std::vector<Entry> out;
  for (std::size_t k = 1; k <= 6; ++k) out.push_back({"chain-" + std::to_string(k), chain_lattice(k)});
  for (std::size_t r = 1; r <= 5; ++r) out.push_back({"boolean-" + std::to_string(r), boolean_lattice(r)});
  out.push_back({"n5", n5_lattice()});
  out.push_back({"m3", m3_lattice()});
  out.push_back({"n5-dual", dual(n5_lattice())});
  for (std::size_t n = 3; n <= 5; ++n) out.push_back({"tamari-" + std::to_string(n), tamari_lattice(n)});
  out.push_back({"tamari-4-dual", dual(tamari_lattice(4))});
  out.push_back({"chain2xchain3", product_lattice(chain_lattice(2), chain_lattice(3))});
  out.push_back({"n5xchain1", product_lattice(n5_lattice(), chain_lattice(1))});
  out.push_back({"n5xn5", product_lattice(n5_lattice(), n5_lattice())});
  out.push_back({"m3xchain1", product_lattice(m3_lattice(), chain_lattice(1))});
  out.push_back({"weak-S3", weak_order(CoxeterType::A, 3).lattice});
  out.push_back({"weak-S4", weak_order(CoxeterType::A, 4).lattice});
  out.push_back({"weak-B2", weak_order(CoxeterType::B, 2).lattice});
  out.push_back({"weak-B3", weak_order(CoxeterType::B, 3).lattice});
  for (std::size_t n = 3; n <= 5; ++n)
    for (const auto& o : Orientation::all(CoxeterType::A, n))
      out.push_back({"cambrian-" + o.to_string(), build_cambrian(o).quotient});
  for (std::size_t n = 2; n <= 3; ++n)
    for (const auto& o : Orientation::all(CoxeterType::B, n))
      out.push_back({"cambrian-" + o.to_string(), build_cambrian(o).quotient});
  for (const char* g : {"I2(6)", "H3"}) {
    auto group = build_group(g);
    auto o = all_diagram_orientations(group).front();
    out.push_back({std::string("pre-cambrian-") + g, pre_cambrian(group, o).quotient.lattice});
  }
  for (auto& e : random_sublattices(24)) out.push_back(std::move(e));
  return out;
}

}  // namespace corpus
