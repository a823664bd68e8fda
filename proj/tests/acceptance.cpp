// Prints one PASS/FAIL line per acceptance criterion; exits non-zero on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>

#include "corpus.hpp"
#include "oracles.hpp"
#include "trimlat/trim.hpp"

using namespace trimlat;

namespace {

struct Result {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

const std::vector<corpus::Entry>& the_corpus() {
  static const auto c = corpus::lattices();
  return c;
}

Result trim_on_canonical() {
  Result r;
  if (!is_trim(n5_lattice())) r.fail("N5 not trim");
  if (is_trim(m3_lattice())) r.fail("M3 trim");
  for (std::size_t k = 1; k <= 5; ++k)
    if (!is_trim(boolean_lattice(k))) r.fail("boolean " + std::to_string(k) + " not trim");
  for (std::size_t k = 0; k <= 10; ++k)
    if (!is_trim(chain_lattice(k))) r.fail("chain " + std::to_string(k) + " not trim");
  if (r.pass) r.detail = "N5, Boolean 1-5, chains 0-10 trim; M3 not";
  return r;
}

Result intervals_trim() {
  Result r;
  std::vector<std::pair<std::string, Lattice>> cases{{"tamari-4", tamari_lattice(4)}};
  for (const auto& o : Orientation::all(CoxeterType::B, 3)) cases.emplace_back(o.to_string(), build_cambrian(o).quotient);
  std::size_t count = 0;
  for (const auto& [name, lat] : cases) {
    for (Elem x = 0; x < lat.size(); ++x)
      for (Elem y = 0; y < lat.size(); ++y) {
        if (!lat.leq(x, y)) continue;
        ++count;
        if (!is_trim(interval(lat, x, y).lattice)) r.fail(name + " interval [" + lat.name(x) + ", " + lat.name(y) + "]");
      }
  }
  if (r.pass) r.detail = std::to_string(count) + " intervals over Tamari 4 and 4 Cambrian B3";
  return r;
}

Result gammas_agree() {
  Result r;
  std::size_t lattices = 0, edges = 0;
  for (const auto& e : the_corpus()) {
    auto chain = find_left_modular_maximal_chain(e.lattice);
    if (!chain) continue;
    for (Elem x : chain->elements)
      if (!oracle::left_modular(e.lattice, x)) r.fail(e.name + ": chain element not left modular");
    ++lattices;
    for (const auto& c : e.lattice.covers()) {
      ++edges;
      int g1 = gamma_join(e.lattice, *chain, c.lower, c.upper);
      int g2 = gamma_meet(e.lattice, *chain, c.lower, c.upper);
      int g3 = gamma_chain(e.lattice, *chain, c.lower, c.upper);
      if (g1 != g2 || g2 != g3) r.fail(e.name + ": labels differ on an edge");
    }
  }
  if (r.pass) r.detail = std::to_string(edges) + " edges in " + std::to_string(lattices) + " lattices";
  return r;
}

Result labelling_properties() {
  Result r;
  std::size_t lattices = 0, intervals = 0;
  for (const auto& e : the_corpus()) {
    const Lattice& lat = e.lattice;
    if (lat.size() > 500) continue;
    auto chain = find_left_modular_maximal_chain(lat);
    if (!chain) continue;
    ++lattices;
    auto lab = full_labelling(lat, *chain);
    if (!is_el_labelling(lat, lab)) {
      r.fail(e.name + ": not EL");
      continue;
    }
    if (!oracle::el_labelling(lat, oracle::as_map(lat, lab.labels))) r.fail(e.name + ": oracle says not EL");
    if (!is_interpolating(lat, lab)) r.fail(e.name + ": not interpolating");
    for (Elem y = 0; y < lat.size(); ++y)
      for (Elem z = 0; z < lat.size(); ++z) {
        if (!lat.lt(y, z)) continue;
        ++intervals;
        if (!restriction_agrees(lat, *chain, lab, y, z)) r.fail(e.name + ": restriction differs");
      }
  }
  if (r.pass) r.detail = std::to_string(lattices) + " lattices, " + std::to_string(intervals) + " intervals";
  return r;
}

Result trim_graded_distributive() {
  Result r;
  std::size_t n = 0;
  for (const auto& e : the_corpus()) {
    if (!is_trim(e.lattice) || !is_graded(e.lattice)) continue;
    ++n;
    bool lib = is_distributive(e.lattice);
    bool brute = oracle::distributive_law(e.lattice);
    if (!lib || !brute) r.fail(e.name + " trim and graded but not distributive");
  }
  if (n == 0) r.fail("no trim graded lattice in the corpus");
  if (r.pass) r.detail = std::to_string(n) + " trim graded lattices";
  return r;
}

std::vector<Elem> swap_coordinates(std::size_t rank, std::size_t i, std::size_t j) {
  std::vector<Elem> p(std::size_t{1} << rank);
  for (Elem s = 0; s < p.size(); ++s) {
    Elem bi = (s >> i) & 1, bj = (s >> j) & 1;
    Elem t = s & ~((Elem{1} << i) | (Elem{1} << j));
    p[s] = t | (bi << j) | (bj << i);
  }
  return p;
}

// Induced map of w -> w0 w w0 on a type A Cambrian quotient.
std::vector<Elem> flip_on_quotient(const CambrianLattice& c) {
  const auto& w = *c.ambient;
  auto w0 = SignedPermutation::longest(CoxeterType::A, w.n);
  std::vector<Elem> p(c.quotient.size());
  for (Elem k = 0; k < c.quotient.size(); ++k) {
    auto x = w.elements[c.bottoms[k]];
    p[k] = c.class_of[w.find(w0 * x * w0)];
  }
  return p;
}

Result fixed_sublattices() {
  Result r;
  std::size_t groups = 0;
  for (std::size_t rank = 2; rank <= 5; ++rank) {
    Lattice b = boolean_lattice(rank);
    std::vector<std::vector<std::vector<Elem>>> generator_sets;
    generator_sets.push_back({swap_coordinates(rank, 0, 1)});
    std::vector<std::vector<Elem>> all;
    for (std::size_t i = 0; i + 1 < rank; ++i) all.push_back(swap_coordinates(rank, i, i + 1));
    generator_sets.push_back(all);
    if (rank >= 4) generator_sets.push_back({swap_coordinates(rank, 0, 1), swap_coordinates(rank, 2, 3)});
    for (const auto& gens : generator_sets) {
      ++groups;
      auto g = AutomorphismGroup::from_generators(b, gens);
      if (!is_trim(fixed_sublattice(b, g).lattice)) r.fail("boolean " + std::to_string(rank) + " fixed sublattice");
    }
  }
  // The B3 diagram has no non-trivial symmetry, so its symmetric case is the
  // trivial group; the type A path flip gives genuine symmetric instances.
  for (const auto& o : Orientation::all(CoxeterType::B, 3)) {
    auto c = build_cambrian(o);
    std::vector<Elem> id(c.quotient.size());
    for (Elem k = 0; k < id.size(); ++k) id[k] = k;
    ++groups;
    if (!is_trim(fixed_sublattice(c.quotient, AutomorphismGroup::from_generators(c.quotient, {id})).lattice))
      r.fail(o.to_string() + " fixed sublattice");
  }
  std::size_t symmetric = 0;
  for (std::size_t n = 3; n <= 5; ++n) {
    for (const auto& o : Orientation::all(CoxeterType::A, n)) {
      // edge between s_{i-1} and s_i maps to the edge between s_{n-i} and s_{n-i+1}, reversed
      bool sym = true;
      for (int i = 2; i <= static_cast<int>(n) - 1; ++i) sym = sym && o.forward(i) != o.forward(static_cast<int>(n) + 1 - i);
      if (!sym) continue;
      ++symmetric;
      auto c = build_cambrian(o);
      auto g = AutomorphismGroup::from_generators(c.quotient, {flip_on_quotient(c)});
      ++groups;
      if (!is_trim(fixed_sublattice(c.quotient, g).lattice)) r.fail(o.to_string() + " flip-fixed sublattice");
    }
  }
  if (r.pass) {
    r.detail = std::to_string(groups) + " groups; B3 diagram symmetry trivial, " + std::to_string(symmetric) +
               " flip-symmetric type A orientations";
  }
  return r;
}

Result consequence_suite() {
  Result r;
  std::size_t n = 0;
  for (const auto& e : the_corpus()) {
    auto w = is_trim(e.lattice);
    if (!w) continue;
    ++n;
    if (auto f = trim_consequence_failure(e.lattice)) r.fail(e.name + ": " + *f);
    // independent count of decreasing chains and Möbius value at the top level
    if (e.lattice.size() < 2) continue;
    auto lab = full_labelling(e.lattice, w->chain);
    long long dec = oracle::count_decreasing(e.lattice, oracle::as_map(e.lattice, lab.labels), e.lattice.bottom(),
                                             e.lattice.top());
    long long mu = oracle::mobius(e.lattice, e.lattice.bottom(), e.lattice.top());
    bool nuclear = is_nuclear(e.lattice);
    long long atoms_count = static_cast<long long>(atoms(e.lattice).size());
    long long want = nuclear ? (atoms_count % 2 == 0 ? 1 : -1) : 0;
    if (dec != (nuclear ? 1 : 0) || mu != want) r.fail(e.name + ": decreasing chains or Möbius value off");
  }
  if (r.pass) r.detail = std::to_string(n) + " trim lattices, all intervals";
  return r;
}

Result irreducible_counts() {
  Result r;
  for (std::size_t n = 2; n <= 3; ++n)
    for (const auto& o : Orientation::all(CoxeterType::B, n)) {
      auto c = build_cambrian(o);
      std::size_t ji = oracle::join_irreducibles(c.quotient).size();
      std::size_t mi = oracle::meet_irreducibles(c.quotient).size();
      if (ji != n * n || mi != n * n) r.fail(o.to_string() + ": " + std::to_string(ji) + "/" + std::to_string(mi));
      if (join_irreducible_census_b(c).size() != n * n) r.fail(o.to_string() + ": census");
    }
  if (r.pass) r.detail = "B2: 4/4, B3: 9/9 on every orientation";
  return r;
}

bool avoids_312(const std::vector<int>& w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      for (std::size_t k = j + 1; k < w.size(); ++k)
        if (w[j] < w[k] && w[k] < w[i]) return false;
  return true;
}

// Signed 2-bar-31 and 31-2-underlined avoidance over the full one-line notation.
bool in_b_by_patterns(const SignedPermutation& w, const Orientation& o) {
  auto line = w.one_line();
  for (std::size_t i = 0; i < line.size(); ++i)
    for (std::size_t j = i + 1; j < line.size(); ++j)
      for (std::size_t k = j + 1; k < line.size(); ++k) {
        int a = line[i], b = line[j], c = line[k];
        if (c < a && a < b && o.in_u(a)) return false;
        if (b < c && c < a && o.in_d(c)) return false;
      }
  return true;
}

Result catalan_counts() {
  Result r;
  const std::size_t expected[] = {0, 0, 0, 5, 14, 42};
  std::ostringstream sizes;
  for (std::size_t n = 3; n <= 5; ++n) {
    auto c = build_cambrian(Orientation::all_forward(CoxeterType::A, n));
    std::set<Elem> avoiders;
    for (Elem x = 0; x < c.ambient->elements.size(); ++x)
      if (avoids_312(c.ambient->elements[x].window())) avoiders.insert(x);
    std::set<Elem> bottoms;
    for (Elem x = 0; x < c.ambient->elements.size(); ++x) bottoms.insert(c.p_down[x]);
    if (avoiders.size() != expected[n] || bottoms != avoiders || c.quotient.size() != expected[n])
      r.fail("tamari " + std::to_string(n));
    if (!find_isomorphism(c.quotient, tamari_lattice(n))) r.fail("tamari " + std::to_string(n) + " not isomorphic");
    sizes << c.quotient.size() << " ";
  }
  for (const auto& o : Orientation::all(CoxeterType::B, 2)) {
    auto c = build_cambrian(o);
    std::set<Elem> avoiders;
    for (Elem x = 0; x < c.ambient->elements.size(); ++x)
      if (in_b_by_patterns(c.ambient->elements[x], o)) avoiders.insert(x);
    std::set<Elem> bottoms;
    for (Elem x = 0; x < c.ambient->elements.size(); ++x) bottoms.insert(c.p_down[x]);
    if (avoiders.size() != 6 || bottoms != avoiders || c.quotient.size() != 6) r.fail(o.to_string());
  }
  if (r.pass) r.detail = "Tamari " + sizes.str() + "; B2 6 on both orientations";
  return r;
}

Result embedding() {
  Result r;
  for (std::size_t n = 3; n <= 4; ++n) {
    auto a = build_cambrian(Orientation::all_forward(CoxeterType::A, n));
    auto tamari = tamari_lattice(n);
    for (bool fwd : {true, false}) {
      auto e = embed_a_in_b(a, fwd);
      if (!find_isomorphism(e.lower_interval.lattice, tamari)) r.fail(e.orient_b.to_string());
      // the isomorphism is an order bijection: check it explicitly
      const auto& iso = e.iso;
      const auto& sub = e.lower_interval.lattice;
      for (Elem x = 0; x < a.quotient.size(); ++x)
        for (Elem y = 0; y < a.quotient.size(); ++y)
          if (a.quotient.leq(x, y) != sub.leq(iso[x], iso[y])) r.fail(e.orient_b.to_string() + " order differs");
    }
  }
  if (r.pass) r.detail = "Tamari 3 in B3, Tamari 4 in B4, both affixed orientations";
  return r;
}

Result type_b_ground_truth() {
  Result r;
  std::size_t count = 0;
  for (std::size_t n = 2; n <= 3; ++n) {
    auto g = build_group("B" + std::to_string(n));
    for (const auto& o : all_diagram_orientations(g)) {
      ++count;
      auto pc = pre_cambrian(g, o);
      auto c = build_cambrian(Orientation(CoxeterType::B, n, o));
      if (!find_isomorphism(pc.quotient.lattice, c.quotient)) r.fail(diagram_orientation_string(g, o));
    }
  }
  if (r.pass) r.detail = std::to_string(count) + " orientations isomorphic";
  return r;
}

Result new_ground() {
  Result r;
  std::ostringstream out;
  for (const char* name : {"I2(6)", "I2(8)", "D4", "H3"}) {
    auto g = build_group(name);
    std::size_t trim = 0, c2 = 0, total = 0, size = 0;
    for (const auto& o : all_diagram_orientations(g)) {
      ++total;
      try {
        auto pc = pre_cambrian(g, o);
        size = pc.quotient.lattice.size();
        auto r1 = conjecture1_check(pc);
        auto r2 = conjecture2_check(g, o, pc);
        trim += r1.trim && !r1.failure;
        c2 += r2.bottoms_listed.equal && r2.tops_listed.equal;
      } catch (const LatticeError& e) {
        if (e.code() != Errc::OrderDependence) throw;
        r.fail(diagram_orientation_string(g, o) + ": order dependence");
      }
    }
    out << name << " size " << size << " trim " << trim << "/" << total << " conj2 " << c2 << "/" << total << "; ";
    if (trim != total) r.fail(std::string(name) + ": pre-Cambrian not trim for some orientation");
  }
  r.detail = r.pass ? out.str() : r.detail + " | " + out.str();
  return r;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Result()> run;
  };
  std::vector<Criterion> criteria{
      {"trim on canonical instances", trim_on_canonical},
      {"every interval trim (Tamari 4, Cambrian B3)", intervals_trim},
      {"three chain labellings agree", gammas_agree},
      {"chain labelling EL, interpolating, restricts to intervals", labelling_properties},
      {"trim and graded implies distributive", trim_graded_distributive},
      {"fixed sublattices trim", fixed_sublattices},
      {"level condition, weak semimodularity, homotopy type", consequence_suite},
      {"n^2 irreducibles in Cambrian B2, B3", irreducible_counts},
      {"Catalan counts by pattern avoidance", catalan_counts},
      {"type A Cambrian as lower interval of type B", embedding},
      {"pre-Cambrian equals Cambrian in type B", type_b_ground_truth},
      {"pre-Cambrian reports for I2(6), I2(8), D4, H3", new_ground},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Result r;
    try {
      r = criteria[i].run();
    } catch (const std::exception& e) {
      r.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failures += !r.pass;
    std::printf("%s %2zu %s (%s; %.2fs)\n", r.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, r.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
