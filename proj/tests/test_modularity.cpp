#include <doctest.h>

#include "oracles.hpp"
#include "trimlat/families.hpp"
#include "trimlat/modularity.hpp"

using namespace trimlat;

namespace {

std::vector<Lattice> chain_corpus() {
  std::vector<Lattice> out;
  out.push_back(chain_lattice(3));
  out.push_back(boolean_lattice(3));
  out.push_back(n5_lattice());
  out.push_back(m3_lattice());
  out.push_back(tamari_lattice(3));
  out.push_back(tamari_lattice(4));
  out.push_back(product_lattice(n5_lattice(), chain_lattice(2)));
  out.push_back(product_lattice(tamari_lattice(3), n5_lattice()));
  return out;
}

// gamma_1 straight from the definitions, using the oracle irreducibles.
int brute_gamma_join(const Lattice& lat, const LeftModularChain& ch, Elem y, Elem z) {
  int best = 1 << 30;
  for (Elem v : oracle::join_irreducibles(lat)) {
    if (!lat.leq(v, z) || lat.leq(v, y)) continue;
    int d = 0;
    while (!lat.leq(v, ch[d])) ++d;
    best = std::min(best, d);
  }
  return best;
}

}  // namespace

TEST_CASE("left modular elements") {
  auto b3 = boolean_lattice(3);
  for (Elem x = 0; x < b3.size(); ++x) CHECK(is_left_modular(b3, x));
  auto n5 = n5_lattice();
  auto bad = left_modular_violation(n5, 3);
  REQUIRE(bad);
  CHECK(*bad == std::pair<Elem, Elem>{1, 2});
  CHECK(is_left_modular(n5, 1));
  for (const auto& lat : chain_corpus())
    for (Elem x = 0; x < lat.size(); ++x) CHECK(is_left_modular(lat, x) == oracle::left_modular(lat, x));
}

TEST_CASE("left modular maximal chains") {
  auto n5 = find_left_modular_maximal_chain(n5_lattice());
  REQUIRE(n5);
  CHECK(n5->elements == std::vector<Elem>{0, 1, 2, 4});
  auto m3 = find_left_modular_maximal_chain(m3_lattice());
  REQUIRE(m3);
  CHECK(m3->elements == std::vector<Elem>{0, 1, 4});
  auto b3 = find_left_modular_maximal_chain(boolean_lattice(3));
  REQUIRE(b3);
  CHECK(b3->length() == 3);
  auto one = find_left_modular_maximal_chain(chain_lattice(0));
  REQUIRE(one);
  CHECK(one->elements == std::vector<Elem>{0});
  CHECK_THROWS_AS(make_left_modular_chain(n5_lattice(), {0, 3, 4}), LatticeError);
}

TEST_CASE("induced interval chains") {
  auto n5 = n5_lattice();
  auto ch = make_left_modular_chain(n5, {0, 1, 2, 4});
  CHECK(induced_interval_chain(n5, ch, 0, 4).elements == ch.elements);
  CHECK(induced_interval_chain(n5, ch, 3, 4).elements == std::vector<Elem>{3, 4});
  auto b3 = boolean_lattice(3);
  auto bc = make_left_modular_chain(b3, {0, 1, 3, 7});
  CHECK(induced_interval_chain(b3, bc, 2, 7).elements == std::vector<Elem>{2, 3, 7});
  CHECK_THROWS_AS(induced_interval_chain(n5, ch, 1, 3), LatticeError);
}

TEST_CASE("delta, epsilon and the three labellings") {
  auto n5 = n5_lattice();
  auto ch = make_left_modular_chain(n5, {0, 1, 2, 4});
  CHECK(delta(n5, ch, 1) == 1);
  CHECK(delta(n5, ch, 3) == 3);
  CHECK(epsilon(n5, ch, 3) == 1);
  CHECK_THROWS_AS(delta(n5, ch, 4), LatticeError);
  CHECK_THROWS_AS(epsilon(n5, ch, 0), LatticeError);
  CHECK(gamma_join(n5, ch, 3, 4) == 1);
  CHECK(gamma_join(n5, ch, 1, 2) == 2);
  CHECK(gamma_chain(n5, ch, 1, 2) == 2);
  CHECK(gamma_join(n5, ch, 0, 1) == 1);
  CHECK(gamma_meet(n5, ch, 0, 3) == gamma_join(n5, ch, 0, 3));
  CHECK_THROWS_AS(gamma_join(n5, ch, 0, 2), LatticeError);

  auto b3 = boolean_lattice(3);
  auto bc = make_left_modular_chain(b3, {0, 1, 3, 7});
  CHECK(delta(b3, bc, 4) == 3);
  CHECK(epsilon(b3, bc, 3) == 3);
  for (int i = 1; i <= 3; ++i) CHECK(gamma_meet(b3, bc, bc[i - 1], bc[i]) == i);
  auto lab = full_labelling(b3, bc);
  // adding atom k always carries label k
  auto cs = b3.covers();
  for (std::size_t e = 0; e < cs.size(); ++e) {
    Elem added = cs[e].upper ^ cs[e].lower;
    CHECK(lab.labels[e] == (added == 1 ? 1 : added == 2 ? 2 : 3));
  }
}

TEST_CASE("labellings coincide and match the definition") {
  for (const auto& lat : chain_corpus()) {
    auto ch = find_left_modular_maximal_chain(lat);
    REQUIRE(ch);
    auto lab = full_labelling(lat, *ch);
    auto cs = lat.covers();
    for (std::size_t e = 0; e < cs.size(); ++e) {
      CHECK(lab.labels[e] == brute_gamma_join(lat, *ch, cs[e].lower, cs[e].upper));
    }
  }
}

TEST_CASE("join-irreducibles with equal delta are incomparable") {
  for (const auto& lat : chain_corpus()) {
    auto ch = find_left_modular_maximal_chain(lat);
    REQUIRE(ch);
    auto ji = join_irreducibles(lat);
    for (Elem a : ji)
      for (Elem b : ji)
        if (a != b && delta(lat, *ch, a) == delta(lat, *ch, b)) CHECK_FALSE(lat.comparable(a, b));
  }
}

TEST_CASE("EL labellings") {
  auto diamond = boolean_lattice(2);
  EdgeLabelling natural{{1, 2, 2, 1}};  // edges 0-1, 0-2, 1-3, 2-3
  CHECK(is_el_labelling(diamond, natural));
  EdgeLabelling flat{{1, 1, 2, 2}};
  CHECK_FALSE(is_el_labelling(diamond, flat));
  CHECK(increasing_chain(diamond, natural, 0, 3) == std::vector<Elem>{0, 1, 3});
  CHECK(decreasing_chains(diamond, natural, 0, 3).size() == 1);

  for (const auto& lat : chain_corpus()) {
    auto ch = find_left_modular_maximal_chain(lat);
    REQUIRE(ch);
    auto lab = full_labelling(lat, *ch);
    CHECK(is_el_labelling(lat, lab));
    CHECK(oracle::el_labelling(lat, oracle::as_map(lat, lab.labels)));
    // perturbing a label is judged identically by both checks
    for (std::size_t e = 0; e < lab.labels.size(); e += 3) {
      auto bent = lab;
      bent.labels[e] += 2;
      CHECK(is_el_labelling(lat, bent) == oracle::el_labelling(lat, oracle::as_map(lat, bent.labels)));
    }
  }
  auto c3 = chain_lattice(3);
  auto lab = full_labelling(c3, *find_left_modular_maximal_chain(c3));
  CHECK(increasing_chain(c3, lab, 0, 3) == std::vector<Elem>{0, 1, 2, 3});
  CHECK(decreasing_chains(c3, lab, 0, 3).empty());
}

TEST_CASE("interpolating labellings") {
  auto n5 = n5_lattice();
  auto lab = full_labelling(n5, *find_left_modular_maximal_chain(n5));
  CHECK(is_interpolating(n5, lab));
  CHECK(decreasing_chains(n5, lab, 0, 4).size() == 1);
  auto t4 = tamari_lattice(4);
  CHECK(is_interpolating(t4, full_labelling(t4, *find_left_modular_maximal_chain(t4))));

  auto diamond = boolean_lattice(2);
  EdgeLabelling swapped{{1, 2, 3, 1}};
  REQUIRE(is_el_labelling(diamond, swapped));
  CHECK_FALSE(is_interpolating(diamond, swapped));
  EdgeLabelling flat{{1, 1, 2, 2}};
  CHECK_THROWS_AS(is_interpolating(diamond, flat), LatticeError);
}

TEST_CASE("decreasing chain counts match enumeration") {
  for (const auto& lat : chain_corpus()) {
    auto lab = full_labelling(lat, *find_left_modular_maximal_chain(lat));
    auto m = oracle::as_map(lat, lab.labels);
    for (Elem z = 0; z < lat.size(); ++z) {
      auto row = decreasing_chain_counts_to(lat, lab, z);
      for (Elem y = 0; y < lat.size(); ++y)
        if (lat.leq(y, z)) CHECK(row[y] == oracle::count_decreasing(lat, m, y, z));
    }
  }
}

TEST_CASE("interpolating labelling certifies its increasing chain") {
  for (const auto& lat : chain_corpus()) {
    auto lab = full_labelling(lat, *find_left_modular_maximal_chain(lat));
    if (!is_interpolating(lat, lab)) continue;
    for (Elem x : increasing_chain(lat, lab, lat.bottom(), lat.top())) CHECK(oracle::left_modular(lat, x));
  }
}

TEST_CASE("restriction to intervals") {
  for (const auto& lat : chain_corpus()) {
    auto ch = *find_left_modular_maximal_chain(lat);
    auto lab = full_labelling(lat, ch);
    CHECK(restriction_agrees(lat, ch, lat.bottom(), lat.top()));
    for (Elem y = 0; y < lat.size(); ++y)
      for (Elem z = 0; z < lat.size(); ++z)
        if (lat.leq(y, z)) CHECK(restriction_agrees(lat, ch, lab, y, z));
  }
}
