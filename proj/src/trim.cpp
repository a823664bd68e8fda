#include "trimlat/trim.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace trimlat {

bool is_extremal(const Lattice& lat) {
  const std::size_t len = longest_chain_length(lat);
  return join_irreducibles(lat).size() == len && meet_irreducibles(lat).size() == len;
}

std::optional<TrimWitness> is_trim(const Lattice& lat) {
  if (!is_extremal(lat)) return std::nullopt;
  auto chain = find_left_modular_maximal_chain(lat, true);
  if (!chain) return std::nullopt;
  TrimWitness w;
  w.n = chain->length();
  w.chain = std::move(*chain);
  w.join_irreducibles = join_irreducibles(lat);
  w.meet_irreducibles = meet_irreducibles(lat);
  return w;
}

std::string trim_failure_reason(const Lattice& lat) {
  const std::size_t len = longest_chain_length(lat);
  const std::size_t ji = join_irreducibles(lat).size();
  const std::size_t mi = meet_irreducibles(lat).size();
  if (ji != len || mi != len) {
    return "extremality failed: " + std::to_string(ji) + " join-irreducibles, " +
           std::to_string(mi) + " meet-irreducibles, longest chain " + std::to_string(len);
  }
  if (!find_left_modular_maximal_chain(lat, true)) {
    return "no maximum-length chain of left modular elements";
  }
  return {};
}

bool unique_irreducible_per_label(const Lattice& lat, const TrimWitness& w) {
  std::set<int> seen_d;
  for (Elem v : w.join_irreducibles) {
    int d = delta(lat, w.chain, v);
    if (d < 1 || d > static_cast<int>(w.n) || !seen_d.insert(d).second) return false;
  }
  std::set<int> seen_e;
  for (Elem v : w.meet_irreducibles) {
    int e = epsilon(lat, w.chain, v);
    if (e < 1 || e > static_cast<int>(w.n) || !seen_e.insert(e).second) return false;
  }
  return seen_d.size() == w.n && seen_e.size() == w.n;
}

std::vector<Elem> spine(const Lattice& lat) {
  auto depth = depth_from_bottom(lat);
  auto height = height_to_top(lat);
  const std::size_t len = depth[lat.top()];
  std::vector<Elem> out;
  for (Elem v = 0; v < lat.size(); ++v) {
    if (depth[v] + height[v] == len) out.push_back(v);
  }
  return out;
}

SpineReport spine_checks(const Lattice& lat) {
  SpineReport r;
  auto sp = spine(lat);
  for (Elem v : sp) {
    if (!is_left_modular(lat, v)) {
      r.all_left_modular = false;
      r.not_left_modular = v;
      break;
    }
  }
  BitRow in(lat.size());
  for (Elem v : sp) in.set(v);
  for (Elem a : sp) {
    for (Elem b : sp) {
      if (!in.test(lat.meet(a, b)) || !in.test(lat.join(a, b))) {
        r.closed = false;
        r.not_closed = std::pair{a, b};
        break;
      }
    }
    if (!r.closed) break;
  }
  if (!r.closed) {
    r.distributive = false;
    return r;
  }
  SubLattice sub = induced_sublattice(lat, sp);
  auto bad = find_sublattice_m3(sub.lattice);
  if (!bad) bad = find_sublattice_n5(sub.lattice);
  if (bad) {
    r.distributive = false;
    for (Elem& e : *bad) e = sub.parent(e);
    r.forbidden = bad;
  }
  return r;
}

AutomorphismGroup AutomorphismGroup::from_generators(const Lattice& lat,
                                                     std::vector<std::vector<Elem>> generators) {
  const std::size_t n = lat.size();
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const auto& p = generators[g];
    const std::string tag = "generator " + std::to_string(g);
    if (p.size() != n) throw LatticeError(Errc::NotAnAutomorphism, tag + " has the wrong size");
    std::vector<bool> hit(n, false);
    for (Elem v : p) {
      if (v >= n || hit[v]) throw LatticeError(Errc::NotAnAutomorphism, tag + " is not a bijection");
      hit[v] = true;
    }
    for (const auto& c : lat.covers()) {
      if (!lat.is_cover(p[c.lower], p[c.upper])) {
        throw LatticeError(Errc::NotAnAutomorphism,
                           tag + " breaks the cover " + std::to_string(c.lower) + " < " +
                               std::to_string(c.upper));
      }
    }
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        if (p[lat.meet(a, b)] != lat.meet(p[a], p[b]) || p[lat.join(a, b)] != lat.join(p[a], p[b])) {
          throw LatticeError(Errc::NotAnAutomorphism,
                             tag + " does not commute with meet/join at (" + std::to_string(a) +
                                 ", " + std::to_string(b) + ")");
        }
      }
    }
  }
  AutomorphismGroup out;
  out.gens_ = std::move(generators);
  out.size_ = n;
  return out;
}

std::vector<std::vector<Elem>> AutomorphismGroup::elements(std::size_t cap) const {
  std::vector<Elem> id(size_);
  for (Elem v = 0; v < size_; ++v) id[v] = v;
  std::set<std::vector<Elem>> seen{id};
  std::vector<std::vector<Elem>> out{id};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const auto& g : gens_) {
      std::vector<Elem> h(size_);
      for (Elem v = 0; v < size_; ++v) h[v] = g[out[k][v]];
      if (seen.insert(h).second) {
        if (out.size() >= cap) throw LatticeError(Errc::CapExceeded, "automorphism group too large");
        out.push_back(std::move(h));
      }
    }
  }
  return out;
}

SubLattice fixed_sublattice(const Lattice& lat, const AutomorphismGroup& g) {
  std::vector<Elem> fixed;
  for (Elem v = 0; v < lat.size(); ++v) {
    bool f = std::all_of(g.generators().begin(), g.generators().end(),
                         [&](const std::vector<Elem>& p) { return p[v] == v; });
    if (f) fixed.push_back(v);
  }
  return induced_sublattice(lat, std::move(fixed));
}

std::optional<LevelViolation> level_condition(const Lattice& lat, const LeftModularChain& chain,
                                              std::size_t atom_cap) {
  auto at = atoms(lat);
  if (at.size() > atom_cap) {
    throw LatticeError(Errc::CapExceeded, std::to_string(at.size()) + " atoms exceed the cap of " +
                                              std::to_string(atom_cap));
  }
  // Group atoms by delta; a valid b-sequence takes at most one atom per group.
  std::map<int, std::vector<Elem>> by_delta;
  for (Elem a : at) by_delta[delta(lat, chain, a)].push_back(a);
  std::vector<std::pair<int, std::vector<Elem>>> groups(by_delta.begin(), by_delta.end());

  std::optional<LevelViolation> found;
  std::vector<Elem> picked;
  auto rec = [&](auto&& self, std::size_t g, Elem a, Elem acc) -> void {
    if (found) return;
    if (!picked.empty() && lat.leq(a, acc)) {
      found = LevelViolation{a, picked};
      return;
    }
    for (std::size_t k = g; k < groups.size() && !found; ++k) {
      for (Elem b : groups[k].second) {
        picked.push_back(b);
        self(self, k + 1, a, lat.join(acc, b));
        picked.pop_back();
        if (found) return;
      }
    }
  };
  for (std::size_t g = 0; g < groups.size() && !found; ++g) {
    for (Elem a : groups[g].second) {
      rec(rec, g + 1, a, lat.bottom());
      if (found) break;
    }
  }
  return found;
}

std::optional<SemimodularityViolation> weak_semimodularity(const Lattice& lat,
                                                           const EdgeLabelling& lab) {
  for (Elem w = 0; w < lat.size(); ++w) {
    auto ups = lat.upper_covers(w);
    for (Elem y : ups) {
      for (Elem z : ups) {
        if (y == z) continue;
        Elem j = lat.join(y, z);
        if (lab.at(lat, w, y) < lab.at(lat, w, z) && !lat.is_cover(z, j)) {
          return SemimodularityViolation{w, y, z, false, false};
        }
        if (!lat.is_cover(y, j) && !lat.is_cover(z, j)) {
          return SemimodularityViolation{w, y, z, false, true};
        }
      }
    }
    auto downs = lat.lower_covers(w);
    for (Elem y : downs) {
      for (Elem z : downs) {
        if (y == z) continue;
        Elem m = lat.meet(y, z);
        if (lab.at(lat, y, w) > lab.at(lat, z, w) && !lat.is_cover(m, z)) {
          return SemimodularityViolation{w, y, z, true, false};
        }
        if (!lat.is_cover(m, y) && !lat.is_cover(m, z)) {
          return SemimodularityViolation{w, y, z, true, true};
        }
      }
    }
  }
  return std::nullopt;
}

bool is_nuclear(const Lattice& lat) {
  auto at = atoms(lat);
  return lat.join_all(at) == lat.top();
}

std::string HomotopyType::to_string() const {
  if (kind == Kind::Contractible) return "contractible";
  return "sphere(" + std::to_string(dimension) + ")";
}

HomotopyType homotopy_type(const Lattice& lat, const EdgeLabelling& lab) {
  if (lat.size() < 2) {
    throw LatticeError(Errc::InvalidInput, "homotopy type needs at least two elements");
  }
  const auto num_atoms = static_cast<int>(atoms(lat).size());
  const bool nuclear = is_nuclear(lat);
  const long long dec = decreasing_chain_counts_to(lat, lab, lat.top())[lat.bottom()];
  const long long mu = mobius(lat, lat.bottom(), lat.top());
  const long long want_dec = nuclear ? 1 : 0;
  const long long want_mu = nuclear ? (num_atoms % 2 == 0 ? 1 : -1) : 0;
  if (dec != want_dec || mu != want_mu) {
    throw LatticeError(Errc::CrossCheckFailed,
                       "nuclear=" + std::string(nuclear ? "yes" : "no") + ", decreasing chains " +
                           std::to_string(dec) + ", mobius " + std::to_string(mu));
  }
  if (!nuclear) return {HomotopyType::Kind::Contractible, 0};
  return {HomotopyType::Kind::Sphere, num_atoms - 2};
}

HomotopyType homotopy_type(const Lattice& lat, const TrimWitness& w) {
  return homotopy_type(lat, full_labelling(lat, w.chain));
}

bool sublattice_trim_check(const Lattice& lat, const TrimWitness& w, std::vector<Elem> k) {
  std::sort(k.begin(), k.end());
  k.erase(std::unique(k.begin(), k.end()), k.end());
  for (Elem x : w.chain.elements) {
    if (!std::binary_search(k.begin(), k.end(), x)) {
      throw LatticeError(Errc::ChainNotContained,
                         "chain element " + lat.name(x) + " is missing from the sublattice");
    }
  }
  SubLattice sub = induced_sublattice(lat, std::move(k));
  return is_trim(sub.lattice).has_value();
}

std::optional<std::string> trim_consequence_failure(const Lattice& lat, bool all_intervals) {
  auto w = is_trim(lat);
  if (!w) return "not trim: " + trim_failure_reason(lat);
  if (!unique_irreducible_per_label(lat, *w)) return "irreducibles are not unique per label";
  EdgeLabelling lab = full_labelling(lat, w->chain);
  if (!is_el_labelling(lat, lab)) return "chain labelling is not EL";
  if (auto v = level_condition(lat, w->chain)) {
    return "level condition fails at atom " + lat.name(v->atom);
  }
  if (auto v = weak_semimodularity(lat, lab)) {
    return "weak semimodularity fails at (" + lat.name(v->w) + ", " + lat.name(v->y) + ", " +
           lat.name(v->z) + ")";
  }
  if (!spine_checks(lat).ok()) return "spine is not a distributive sublattice of left modular elements";
  if (!all_intervals) return std::nullopt;
  for (Elem x = 0; x < lat.size(); ++x) {
    auto mu = mobius_row(lat, x);
    const BitRow& up = lat.up_set(x);
    for (auto y = up.find_first(); y != BitRow::npos; y = up.find_next(y)) {
      if (mu[y] < -1 || mu[y] > 1) {
        return "mobius(" + lat.name(x) + ", " + lat.name(static_cast<Elem>(y)) + ") = " +
               std::to_string(mu[y]);
      }
      if (y == x) continue;
      SubLattice iv = interval(lat, x, static_cast<Elem>(y));
      auto iw = is_trim(iv.lattice);
      std::string where = "[" + lat.name(x) + ", " + lat.name(static_cast<Elem>(y)) + "]";
      if (!iw) return "interval " + where + " is not trim";
      try {
        homotopy_type(iv.lattice, *iw);
      } catch (const LatticeError& e) {
        return "interval " + where + ": " + e.what();
      }
    }
  }
  return std::nullopt;
}

}  // namespace trimlat
