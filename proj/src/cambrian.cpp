#include "trimlat/cambrian.hpp"

#include <algorithm>

namespace trimlat {

CambrianLattice build_cambrian(std::shared_ptr<const WeakOrder> ambient, const Orientation& orient) {
  const WeakOrder& w = *ambient;
  const Lattice& L = w.lattice;
  const std::size_t n = L.size();
  auto bs = b_set(w, orient);
  auto ts = t_set(w, orient);
  if (bs.size() != ts.size()) {
    throw LatticeError(Errc::FibersNotPartition, "fiber bottoms and tops differ in number");
  }
  BitRow in_b(n);
  BitRow in_t(n);
  for (Elem e : bs) in_b.set(e);
  for (Elem e : ts) in_t.set(e);

  CambrianLattice c;
  c.orient = orient;
  c.p_down.resize(n);
  c.p_up.resize(n);
  for (Elem x = 0; x < n; ++x) {
    std::vector<Elem> below;
    std::vector<Elem> above;
    for (Elem b : bs)
      if (L.leq(b, x)) below.push_back(b);
    for (Elem t : ts)
      if (L.leq(x, t)) above.push_back(t);
    c.p_down[x] = L.join_all(below);
    c.p_up[x] = L.meet_all(above);
    if (!in_b.test(c.p_down[x]) || !in_t.test(c.p_up[x])) {
      throw LatticeError(Errc::FiberNotUnique,
                         "element " + L.name(x) + " has no largest fiber bottom below it or "
                                                  "no smallest fiber top above it");
    }
  }

  c.bottoms = bs;
  c.class_of.assign(n, 0);
  std::vector<Elem> class_index(n, static_cast<Elem>(-1));
  for (Elem k = 0; k < bs.size(); ++k) class_index[bs[k]] = k;
  std::size_t covered = 0;
  for (Elem k = 0; k < bs.size(); ++k) {
    Elem b = bs[k];
    Elem t = c.p_up[b];
    c.tops.push_back(t);
    BitRow fiber = L.up_set(b) & L.down_set(t);
    covered += fiber.count();
    for (auto x = fiber.find_first(); x != BitRow::npos; x = fiber.find_next(x)) {
      if (c.p_down[x] != b || c.p_up[x] != t) {
        throw LatticeError(Errc::FibersNotPartition,
                           "element " + L.name(static_cast<Elem>(x)) + " lies in the interval [" +
                               L.name(b) + ", " + L.name(t) + "] but not in its fiber");
      }
    }
  }
  if (covered != n) throw LatticeError(Errc::FibersNotPartition, "fibers do not cover the group");
  {
    auto sorted_tops = c.tops;
    std::sort(sorted_tops.begin(), sorted_tops.end());
    if (sorted_tops != ts) throw LatticeError(Errc::FibersNotPartition, "fiber tops differ from t_set");
  }
  for (Elem x = 0; x < n; ++x) c.class_of[x] = class_index[c.p_down[x]];

  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      Elem pa = c.p_down[a];
      Elem pb = c.p_down[b];
      if (c.class_of[L.join(a, b)] != c.class_of[L.join(pa, pb)] ||
          c.class_of[L.meet(a, b)] != c.class_of[L.meet(pa, pb)]) {
        throw LatticeError(Errc::NotHomomorphism,
                           "class map fails at (" + L.name(a) + ", " + L.name(b) + ")");
      }
    }
  }

  // Quotient order [a] <= [b] iff [a v b] = [b]; it must match the order
  // induced on the fiber bottoms and, through p_up, on the fiber tops.
  SubLattice induced = induced_sublattice(L, bs);
  const std::size_t k = bs.size();
  for (Elem i = 0; i < k; ++i) {
    for (Elem j = 0; j < k; ++j) {
      bool q = c.class_of[L.join(bs[i], bs[j])] == j;
      if (q != L.leq(bs[i], bs[j]) || q != L.leq(c.tops[i], c.tops[j])) {
        throw LatticeError(Errc::NotHomomorphism, "quotient order differs from the order on "
                                                  "fiber bottoms or tops");
      }
    }
  }
  std::vector<Cover> covers(induced.lattice.covers().begin(), induced.lattice.covers().end());
  std::vector<std::string> names;
  for (Elem b : bs) names.push_back(L.name(b));
  c.quotient = Lattice::from_covers(k, std::move(covers), std::move(names));
  c.ambient = std::move(ambient);
  return c;
}

CambrianLattice build_cambrian(const Orientation& orient) {
  auto w = std::make_shared<const WeakOrder>(weak_order(orient.type(), orient.n()));
  return build_cambrian(std::move(w), orient);
}

Root cambrian_label(const CambrianLattice& c, Elem lower_class, Elem upper_class) {
  if (!c.quotient.is_cover(lower_class, upper_class)) {
    throw LatticeError(Errc::NotACover, "not a quotient edge");
  }
  const WeakOrder& w = *c.ambient;
  Elem x = c.tops[lower_class];
  for (Elem y : w.lattice.upper_covers(x)) {
    if (c.class_of[y] == upper_class) {
      RootSet diff = w.inversions[y] - w.inversions[x];
      return w.roots.root(diff.find_first());
    }
  }
  throw LatticeError(Errc::CrossCheckFailed, "no element of the upper class covers the lower top");
}

std::vector<Root> cambrian_root_labels(const CambrianLattice& c) {
  std::vector<Root> out;
  for (const auto& e : c.quotient.covers()) out.push_back(cambrian_label(c, e.lower, e.upper));
  return out;
}

bool crossing_covers_match_labels(const CambrianLattice& c) {
  const WeakOrder& w = *c.ambient;
  auto labels = cambrian_root_labels(c);
  for (const auto& e : w.lattice.covers()) {
    Elem a = c.class_of[e.lower];
    Elem b = c.class_of[e.upper];
    if (a == b) continue;
    auto idx = c.quotient.edge_index(a, b);
    if (!idx) return false;
    RootSet diff = w.inversions[e.upper] - w.inversions[e.lower];
    if (w.roots.root(diff.find_first()) != labels[*idx]) return false;
  }
  return true;
}

Orientation affix_edge(const Orientation& orient_a, bool forward) {
  if (orient_a.type() != CoxeterType::A) {
    throw LatticeError(Errc::InvalidInput, "expected a type A orientation");
  }
  std::vector<bool> edges{forward};
  edges.insert(edges.end(), orient_a.edges().begin(), orient_a.edges().end());
  return {CoxeterType::B, orient_a.n(), std::move(edges)};
}

std::vector<Elem> xi_classes(const CambrianLattice& c) {
  std::vector<Elem> out;
  for (const auto& x : xi_chain(c.orient)) out.push_back(c.class_of[c.ambient->find(x)]);
  return out;
}

EdgeLabelling cambrian_label_order(const CambrianLattice& c) {
  std::vector<Root> order;
  if (c.orient.type() == CoxeterType::B) {
    order = xi_root_order(c.orient);
  } else {
    for (const Root& r : xi_root_order(affix_edge(c.orient, true))) {
      if (r.kind == Root::Kind::Diff) order.push_back(r);
    }
  }
  EdgeLabelling lab;
  for (const Root& r : cambrian_root_labels(c)) {
    auto it = std::find(order.begin(), order.end(), r);
    lab.labels.push_back(static_cast<int>(it - order.begin()) + 1);
  }
  const Lattice& q = c.quotient;
  if (!is_el_labelling(q, lab)) throw LatticeError(Errc::NotEL, "root order labelling is not EL");
  if (!is_interpolating(q, lab)) {
    throw LatticeError(Errc::NotInterpolating, "root order labelling is not interpolating");
  }
  if (c.orient.type() == CoxeterType::B) {
    if (xi_classes(c) != increasing_chain(q, lab, q.bottom(), q.top())) {
      throw LatticeError(Errc::CrossCheckFailed, "chain classes are not the increasing chain");
    }
  }
  return lab;
}

TrimWitness verify_trim_cambrian(const CambrianLattice& c) {
  const Lattice& q = c.quotient;
  auto w = is_trim(q);
  if (!w) {
    throw LatticeError(Errc::CrossCheckFailed,
                       "Cambrian lattice " + c.orient.to_string() + " is not trim: " +
                           trim_failure_reason(q));
  }
  if (c.orient.type() == CoxeterType::B) {
    const std::size_t n2 = c.orient.n() * c.orient.n();
    if (w->join_irreducibles.size() != n2 || w->meet_irreducibles.size() != n2) {
      throw LatticeError(Errc::CrossCheckFailed, "irreducible count differs from n^2");
    }
    w->chain = make_left_modular_chain(q, xi_classes(c));
    w->n = w->chain.length();
  }
  return *w;
}

Embedding embed_a_in_b(const CambrianLattice& type_a, bool affixed_forward) {
  const std::size_t n = type_a.orient.n();
  Orientation ob = affix_edge(type_a.orient, affixed_forward);
  CambrianLattice cb = build_cambrian(ob);
  Elem top = cb.class_of[cb.ambient->find(
      SignedPermutation(CoxeterType::B, SignedPermutation::longest(CoxeterType::A, n).window()))];
  SubLattice lower = interval(cb.quotient, cb.quotient.bottom(), top);
  auto iso = find_isomorphism(type_a.quotient, lower.lattice);
  if (!iso) {
    throw LatticeError(Errc::IsomorphismFailed,
                       "lower interval of " + ob.to_string() + " is not isomorphic to " +
                           type_a.orient.to_string());
  }
  return {ob, std::move(cb), top, std::move(lower), std::move(*iso)};
}

std::map<std::pair<int, int>, Elem> join_irreducible_census_b(const CambrianLattice& c) {
  if (c.orient.type() != CoxeterType::B) {
    throw LatticeError(Errc::UnsupportedType, "census is defined for type B");
  }
  const WeakOrder& w = *c.ambient;
  const int n = static_cast<int>(c.orient.n());
  std::map<std::pair<int, int>, Elem> out;
  for (Elem k : join_irreducibles(c.quotient)) {
    Elem pi = c.bottoms[k];
    auto lower = w.lattice.lower_covers(pi);
    if (lower.size() != 1) {
      throw LatticeError(Errc::CensusMismatch,
                         w.lattice.name(pi) + " is not join-irreducible in weak order");
    }
    const auto& sigma = w.elements[lower[0]];
    const auto& p = w.elements[pi];
    // first window position where the two differ
    int pos = 0;
    while (sigma.window()[pos] == p.window()[pos]) ++pos;
    std::pair<int, int> key;
    int a = sigma.window()[pos];
    if (p.window()[pos] == -a) {
      key = {-std::abs(a), std::abs(a)};
    } else {
      int b = sigma.window()[pos + 1];
      if (b > 0 && std::abs(b) >= std::abs(a)) {
        key = {a, b};
      } else {
        key = {-b, -a};
      }
    }
    if (!(key.second > 0 && -key.second <= key.first && key.first < key.second)) {
      throw LatticeError(Errc::CensusMismatch, "pair (" + std::to_string(key.first) + ", " +
                                                   std::to_string(key.second) +
                                                   ") is outside the index set");
    }
    if (!out.emplace(key, pi).second) {
      throw LatticeError(Errc::CensusMismatch, "two join-irreducibles share the pair (" +
                                                   std::to_string(key.first) + ", " +
                                                   std::to_string(key.second) + ")");
    }
  }
  if (static_cast<int>(out.size()) != n * n) {
    throw LatticeError(Errc::CensusMismatch, std::to_string(out.size()) + " pairs instead of " +
                                                 std::to_string(n * n));
  }
  return out;
}

}  // namespace trimlat
