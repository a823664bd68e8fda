#include "trimlat/conjecture.hpp"

#include <algorithm>

#include "trimlat/cambrian.hpp"
#include "trimlat/modularity.hpp"
#include "trimlat/trim.hpp"

namespace trimlat {

namespace {

std::vector<Elem> chain_classes(const Quotient& q, const std::vector<Elem>& chain) {
  std::vector<Elem> out;
  for (Elem x : chain) {
    Elem c = q.class_of[x];
    if (out.empty() || out.back() != c) out.push_back(c);
  }
  return out;
}

std::optional<std::pair<Elem, Elem>> forced_pair(const Quotient& q, Elem x) {
  auto v = left_modular_violation(q.lattice, x);
  if (!v) return std::nullopt;
  const Lattice& L = q.lattice;
  auto [y, z] = *v;
  Elem lo = L.join(y, L.meet(x, z));
  Elem hi = L.meet(L.join(y, x), z);
  return std::make_pair(q.bottoms[lo], q.bottoms[hi]);
}

}  // namespace

PreCambrian pre_cambrian_search(const Lattice& lat, const std::vector<Elem>& chain, WitnessOrder order) {
  PreCambrian pc;
  pc.theta = Congruence::discrete(lat.size());
  while (true) {
    pc.quotient = quotient(lat, pc.theta);
    pc.chain = chain_classes(pc.quotient, chain);
    std::vector<std::pair<Elem, Elem>> pairs;
    if (order == WitnessOrder::BottomUpSingle) {
      for (Elem x : pc.chain) {
        if (auto p = forced_pair(pc.quotient, x)) {
          pairs.push_back(*p);
          break;
        }
      }
    } else {
      for (auto it = pc.chain.rbegin(); it != pc.chain.rend(); ++it) {
        if (auto p = forced_pair(pc.quotient, *it)) pairs.push_back(*p);
      }
    }
    if (pairs.empty()) return pc;
    pc.theta = smallest_congruence(lat, pc.theta, pairs);
    ++pc.rounds;
  }
}

PreCambrian pre_cambrian(const ReflectionGroup& g, const DiagramOrientation& o) {
  auto chain = half_coxeter_chain(g, o).elements;
  PreCambrian a = pre_cambrian_search(g.weak_order, chain, WitnessOrder::BottomUpSingle);
  PreCambrian b = pre_cambrian_search(g.weak_order, chain, WitnessOrder::TopDownBatch);
  if (!(a.theta == b.theta)) {
    throw LatticeError(Errc::OrderDependence,
                       diagram_orientation_string(g, o) + ": witness orders give " +
                           std::to_string(a.theta.num_classes()) + " and " +
                           std::to_string(b.theta.num_classes()) + " classes");
  }
  for (Elem x : a.chain) {
    if (!is_left_modular(a.quotient.lattice, x)) {
      throw LatticeError(Errc::CrossCheckFailed, "chain class " + a.quotient.lattice.name(x) +
                                                     " is not left modular in the quotient");
    }
  }
  return a;
}

Conjecture1Report conjecture1_check(const PreCambrian& pc) {
  Conjecture1Report r;
  r.size = pc.quotient.lattice.size();
  r.failure = trim_consequence_failure(pc.quotient.lattice);
  r.trim = is_trim(pc.quotient.lattice).has_value();
  return r;
}

namespace {

// B side: initial segment or just the last root; T side: initial segment or
// everything but the first root.
bool good(std::uint64_t inv, const std::vector<std::size_t>& order, bool bottom) {
  const std::size_t k = order.size();
  std::size_t prefix = 0;
  while (prefix < k && (inv >> order[prefix] & 1)) ++prefix;
  std::size_t count = 0;
  for (auto r : order) count += inv >> r & 1;
  if (count == prefix) return true;
  if (bottom) return count == 1 && (inv >> order[k - 1] & 1);
  return count == k - 1 && !(inv >> order[0] & 1);
}

SetComparison compare(const ReflectionGroup& g, const std::vector<std::vector<std::size_t>>& orders,
                      const std::vector<Elem>& actual_list, bool bottom) {
  const Lattice& W = g.weak_order;
  std::vector<bool> actual(W.size(), false);
  for (Elem x : actual_list) actual[x] = true;
  SetComparison c;
  c.actual = actual_list.size();
  c.equal = true;
  for (Elem x = 0; x < W.size(); ++x) {
    bool predicted = std::all_of(orders.begin(), orders.end(),
                                 [&](const auto& ord) { return good(g.inversions[x], ord, bottom); });
    c.predicted += predicted;
    if (predicted != actual[x]) {
      if (c.equal) {
        c.first_difference = W.name(x) + (predicted ? " is predicted but not a fiber "
                                                    : " is a fiber ") +
                             (bottom ? "bottom" : "top") + (predicted ? "" : " but not predicted");
      }
      c.equal = false;
    }
  }
  return c;
}

}  // namespace

Conjecture2Report conjecture2_check(const ReflectionGroup& g, const DiagramOrientation& o,
                                    const PreCambrian& pc) {
  auto root_order = half_coxeter_chain(g, o).root_order;
  std::vector<std::size_t> position(g.num_positive());
  for (std::size_t i = 0; i < root_order.size(); ++i) position[root_order[i]] = i;
  std::vector<std::vector<std::size_t>> listed;
  for (std::uint64_t set : rank2_root_sets(g)) {
    std::vector<std::size_t> ord;
    for (std::size_t r = 0; r < g.num_positive(); ++r)
      if (set >> r & 1) ord.push_back(r);
    std::sort(ord.begin(), ord.end(), [&](auto a, auto b) { return position[a] < position[b]; });
    listed.push_back(std::move(ord));
  }
  auto reversed = listed;
  for (auto& ord : reversed) std::reverse(ord.begin(), ord.end());
  Conjecture2Report r;
  r.rank2_subsystems = listed.size();
  r.bottoms_listed = compare(g, listed, pc.quotient.bottoms, true);
  r.bottoms_reversed = compare(g, reversed, pc.quotient.bottoms, true);
  r.tops_listed = compare(g, listed, pc.quotient.tops, false);
  r.tops_reversed = compare(g, reversed, pc.quotient.tops, false);
  return r;
}

Conjecture3Report conjecture3_check(const ReflectionGroup& g, const DiagramOrientation& o,
                                    const PreCambrian& pc) {
  Conjecture3Report r;
  r.size = pc.quotient.lattice.size();
  r.coxeter_catalan = coxeter_catalan(g);
  if (g.name.size() >= 2 && g.name[0] == 'B' && g.name.find('(') == std::string::npos) {
    Orientation orient(CoxeterType::B, g.rank, o);
    CambrianLattice c = build_cambrian(orient);
    r.isomorphic_to_cambrian = find_isomorphism(pc.quotient.lattice, c.quotient).has_value();
    // match elements through their reduced words
    std::vector<Elem> to_signed(g.elements.size());
    for (Elem x = 0; x < g.elements.size(); ++x) {
      auto w = SignedPermutation::identity(CoxeterType::B, g.rank);
      for (int s : g.words[x]) w = w * SignedPermutation::simple(CoxeterType::B, g.rank, s);
      to_signed[x] = c.ambient->find(w);
    }
    bool same = true;
    for (Elem x = 0; x < g.elements.size() && same; ++x)
      for (Elem y = 0; y < g.elements.size() && same; ++y)
        same = (pc.quotient.class_of[x] == pc.quotient.class_of[y]) ==
               (c.class_of[to_signed[x]] == c.class_of[to_signed[y]]);
    r.same_fibers = same;
  }
  return r;
}

}  // namespace trimlat
