#include <doctest.h>

#include "oracles.hpp"
#include "trimlat/families.hpp"
#include "trimlat/trim.hpp"

using namespace trimlat;

namespace {

// 0 < a, b, c;  a, c < q;  q, b < m;  m < 1.  With the chain 0, a, q, m, 1
// the atom a lies below c ∨ b although delta(a) < delta(c) < delta(b).
Lattice level_breaker() {
  return Lattice::from_covers(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {3, 4}, {4, 5}, {2, 5}, {5, 6}},
                              {"0", "a", "b", "c", "q", "m", "1"});
}

std::vector<Elem> swap_coordinates(std::size_t rank, std::size_t i, std::size_t j) {
  std::vector<Elem> p(std::size_t{1} << rank);
  for (Elem s = 0; s < p.size(); ++s) {
    Elem bi = (s >> i) & 1;
    Elem bj = (s >> j) & 1;
    Elem t = s & ~((Elem{1} << i) | (Elem{1} << j));
    p[s] = t | (bi << j) | (bj << i);
  }
  return p;
}

}  // namespace

TEST_CASE("extremality and trimness") {
  CHECK(is_extremal(n5_lattice()));
  CHECK_FALSE(is_extremal(m3_lattice()));
  CHECK(is_extremal(boolean_lattice(3)));
  auto w = is_trim(n5_lattice());
  REQUIRE(w);
  CHECK(w->n == 3);
  CHECK(w->chain.elements == std::vector<Elem>{0, 1, 2, 4});
  CHECK_FALSE(is_trim(m3_lattice()));
  CHECK(trim_failure_reason(m3_lattice()) ==
        "extremality failed: 3 join-irreducibles, 3 meet-irreducibles, longest chain 2");
  auto t4 = is_trim(tamari_lattice(4));
  REQUIRE(t4);
  CHECK(t4->n == 6);
  CHECK(t4->join_irreducibles.size() == 6);
  CHECK(t4->meet_irreducibles.size() == 6);
  for (std::size_t k = 0; k <= 5; ++k) CHECK(is_trim(boolean_lattice(k)));
  for (std::size_t k = 0; k <= 6; ++k) CHECK(is_trim(chain_lattice(k)));
}

TEST_CASE("one irreducible per label") {
  auto n5 = n5_lattice();
  auto w = *is_trim(n5);
  CHECK(unique_irreducible_per_label(n5, w));
  CHECK(delta(n5, w.chain, 1) == 1);
  CHECK(delta(n5, w.chain, 2) == 2);
  CHECK(delta(n5, w.chain, 3) == 3);
  auto b3 = boolean_lattice(3);
  auto wb = *is_trim(b3);
  CHECK(unique_irreducible_per_label(b3, wb));
  auto t4 = tamari_lattice(4);
  CHECK(unique_irreducible_per_label(t4, *is_trim(t4)));
}

TEST_CASE("spine") {
  CHECK(spine(boolean_lattice(3)).size() == 8);
  CHECK(spine(n5_lattice()) == std::vector<Elem>{0, 1, 2, 4});
  CHECK(spine(tamari_lattice(3)).size() == 4);
  CHECK(spine_checks(n5_lattice()).ok());
  CHECK(spine_checks(tamari_lattice(4)).ok());
}

TEST_CASE("fixed sublattices") {
  auto b3 = boolean_lattice(3);
  auto g = AutomorphismGroup::from_generators(b3, {swap_coordinates(3, 0, 2)});
  auto fixed = fixed_sublattice(b3, g);
  CHECK(fixed.to_parent == std::vector<Elem>{0, 2, 5, 7});
  CHECK(find_isomorphism(fixed.lattice, boolean_lattice(2)).has_value());
  CHECK(is_trim(fixed.lattice));

  auto trivial = AutomorphismGroup::from_generators(b3, {});
  CHECK(fixed_sublattice(b3, trivial).lattice.size() == 8);

  auto b2 = boolean_lattice(2);
  auto sym = AutomorphismGroup::from_generators(b2, {swap_coordinates(2, 0, 1)});
  CHECK(fixed_sublattice(b2, sym).to_parent == std::vector<Elem>{0, 3});
  CHECK(sym.elements().size() == 2);

  std::vector<Elem> bad{0, 1, 3, 2};
  CHECK_THROWS_AS(AutomorphismGroup::from_generators(b2, {bad}), LatticeError);
}

TEST_CASE("level condition") {
  auto b4 = boolean_lattice(4);
  CHECK_FALSE(level_condition(b4, is_trim(b4)->chain));
  auto t4 = tamari_lattice(4);
  CHECK_FALSE(level_condition(t4, is_trim(t4)->chain));
  auto lb = level_breaker();
  auto ch = LeftModularChain{{0, 1, 4, 5, 6}};
  auto v = level_condition(lb, ch);
  REQUIRE(v);
  CHECK(v->atom == 1);
  CHECK(v->others == std::vector<Elem>{3, 2});
  CHECK_FALSE(is_trim(lb));
  CHECK_THROWS_AS(level_condition(boolean_lattice(5), is_trim(boolean_lattice(5))->chain, 4),
                  LatticeError);
}

TEST_CASE("weak semimodularity") {
  for (const auto& lat : {n5_lattice(), tamari_lattice(4), boolean_lattice(3)}) {
    auto w = *is_trim(lat);
    CHECK_FALSE(weak_semimodularity(lat, full_labelling(lat, w.chain)));
  }
}

TEST_CASE("nuclearity and homotopy type") {
  CHECK(is_nuclear(boolean_lattice(4)));
  CHECK_FALSE(is_nuclear(chain_lattice(2)));
  CHECK(is_nuclear(n5_lattice()));
  auto n5 = n5_lattice();
  CHECK(homotopy_type(n5, *is_trim(n5)) == HomotopyType{HomotopyType::Kind::Sphere, 0});
  auto c3 = chain_lattice(3);
  CHECK(homotopy_type(c3, *is_trim(c3)).kind == HomotopyType::Kind::Contractible);
  CHECK(mobius(c3, 0, 3) == 0);
  auto b3 = boolean_lattice(3);
  CHECK(homotopy_type(b3, *is_trim(b3)) == HomotopyType{HomotopyType::Kind::Sphere, 1});
  CHECK_THROWS_AS(homotopy_type(chain_lattice(0), *is_trim(chain_lattice(0))), LatticeError);
}

TEST_CASE("sublattices containing the chain") {
  auto t4 = tamari_lattice(4);
  auto w = *is_trim(t4);
  CHECK(sublattice_trim_check(t4, w, spine(t4)));
  std::vector<Elem> all(t4.size());
  for (Elem v = 0; v < t4.size(); ++v) all[v] = v;
  CHECK(sublattice_trim_check(t4, w, all));
  for (Elem extra = 0; extra < t4.size(); ++extra) {
    auto seed = w.chain.elements;
    seed.push_back(extra);
    CHECK(sublattice_trim_check(t4, w, sublattice_closure(t4, seed)));
  }
  CHECK_THROWS_AS(sublattice_trim_check(t4, w, {t4.bottom(), t4.top()}), LatticeError);
}
