#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <sstream>

#include "trimlat/cambrian.hpp"
#include "trimlat/conjecture.hpp"
#include "trimlat/families.hpp"
#include "trimlat/io.hpp"
#include "trimlat/parallel.hpp"
#include "trimlat/trim.hpp"

using namespace trimlat;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* kSchema = "trimlat.report/1";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A property that does not hold; the report is still printed.
struct Outcome {
  json report;
  bool holds = true;
};

bool theory_failure(Errc c) {
  switch (c) {
    case Errc::CrossCheckFailed:
    case Errc::NotEL:
    case Errc::NotInterpolating:
    case Errc::OrderDependence:
    case Errc::FiberNotUnique:
    case Errc::FibersNotPartition:
    case Errc::NotHomomorphism:
    case Errc::CensusMismatch:
    case Errc::IsomorphismFailed:
      return true;
    default:
      return false;
  }
}

json names_of(const Lattice& lat, std::span<const Elem> elems) {
  json out = json::array();
  for (Elem e : elems) out.push_back(lat.name(e));
  return out;
}

Elem resolve(const Lattice& lat, const std::string& token) {
  for (Elem e = 0; e < lat.size(); ++e)
    if (lat.name(e) == token) return e;
  Elem idx = 0;
  auto [p, ec] = std::from_chars(token.data(), token.data() + token.size(), idx);
  if (ec == std::errc() && p == token.data() + token.size() && idx < lat.size()) return idx;
  throw UsageError("no element named '" + token + "'");
}

std::vector<std::string> split(const std::string& text, const std::string& seps = ", ") {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (seps.find(c) != std::string::npos) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<Elem> resolve_list(const Lattice& lat, const std::string& text) {
  std::vector<Elem> out;
  for (const auto& t : split(text)) out.push_back(resolve(lat, t));
  return out;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_text_file(path, text);
  }
}

LeftModularChain chain_for(const Lattice& lat, const std::string& spec) {
  if (!spec.empty()) return make_left_modular_chain(lat, resolve_list(lat, spec));
  auto c = find_left_modular_maximal_chain(lat, true);
  if (!c) c = find_left_modular_maximal_chain(lat, false);
  if (!c) throw LatticeError(Errc::NotLeftModular, "no maximal chain of left modular elements");
  return *c;
}

Orientation orientation_for(CoxeterType type, std::size_t n, const std::string& spec) {
  if (spec.empty()) {
    if (n == 0) throw UsageError("--n or a prefixed --orient is required");
    return Orientation::all_forward(type, n);
  }
  std::string literal = spec;
  if (spec.find(':') == std::string::npos) {
    if (n == 0) throw UsageError("--n is required when --orient has no group prefix");
    std::size_t rank = type == CoxeterType::A ? n - 1 : n;
    literal = std::string(type == CoxeterType::A ? "A" : "B") + std::to_string(rank) + ":" + spec;
  }
  Orientation o = Orientation::parse(literal);
  if (o.type() != type) throw UsageError("orientation '" + spec + "' is for the other type");
  if (n != 0 && o.n() != n) throw UsageError("orientation '" + spec + "' does not match --n");
  return o;
}

// ---- verbs ----

struct GenOpts {
  std::string family, orient, out, dot, group;
  std::size_t n = 0;
  std::size_t group_cap = 1500;
};

Outcome run_gen(const GenOpts& o) {
  Lattice lat;
  std::vector<std::string> edge_labels;
  const std::string& f = o.family;
  auto need_n = [&] {
    if (o.n == 0) throw UsageError("--n is required for family " + f);
    return o.n;
  };
  if (f == "chain") {
    lat = chain_lattice(need_n());
  } else if (f == "boolean") {
    lat = boolean_lattice(need_n());
  } else if (f == "n5") {
    lat = n5_lattice();
  } else if (f == "m3") {
    lat = m3_lattice();
  } else if (f == "tamari") {
    lat = tamari_lattice(need_n());
  } else if (f == "weak-a" || f == "weak-b") {
    lat = weak_order(f == "weak-a" ? CoxeterType::A : CoxeterType::B, need_n()).lattice;
  } else if (f == "weak") {
    if (o.group.empty()) throw UsageError("--group is required for family weak");
    lat = build_group(o.group, o.group_cap).weak_order;
  } else if (f == "cambrian-a" || f == "cambrian-b") {
    auto type = f == "cambrian-a" ? CoxeterType::A : CoxeterType::B;
    auto c = build_cambrian(orientation_for(type, o.n, o.orient));
    lat = c.quotient;
    for (const Root& r : cambrian_root_labels(c)) edge_labels.push_back(r.to_string());
  } else {
    throw UsageError("unknown family '" + f + "'");
  }
  emit(o.out, lattice_to_json(lat));
  if (!o.dot.empty()) write_text_file(o.dot, lattice_to_dot(lat, edge_labels));
  std::cerr << f << ": " << lat.size() << " elements, " << lat.num_edges() << " covers\n";
  return {json(), true};
}

struct CheckOpts {
  std::string property, file, chain;
  std::size_t atom_cap = 16;
};

Outcome run_check(const CheckOpts& o) {
  Lattice lat = read_lattice_file(o.file);
  json r;
  r["schema"] = kSchema;
  r["verb"] = "check";
  r["property"] = o.property;
  r["size"] = lat.size();
  bool holds = true;
  const std::string& p = o.property;
  if (p == "trim") {
    auto w = is_trim(lat);
    holds = w.has_value();
    if (w) {
      r["witness"] = {{"n", w->n},
                      {"chain", names_of(lat, w->chain.elements)},
                      {"join_irreducibles", names_of(lat, w->join_irreducibles)},
                      {"meet_irreducibles", names_of(lat, w->meet_irreducibles)}};
    } else {
      r["reason"] = trim_failure_reason(lat);
    }
  } else if (p == "extremal") {
    holds = is_extremal(lat);
    r["join_irreducibles"] = join_irreducibles(lat).size();
    r["meet_irreducibles"] = meet_irreducibles(lat).size();
    r["longest_chain"] = longest_chain_length(lat);
  } else if (p == "left-modular") {
    auto c = find_left_modular_maximal_chain(lat, true);
    if (!c) c = find_left_modular_maximal_chain(lat, false);
    holds = c.has_value();
    if (c) r["chain"] = names_of(lat, c->elements);
  } else if (p == "el") {
    auto chain = chain_for(lat, o.chain);
    auto lab = full_labelling(lat, chain);
    bool el = is_el_labelling(lat, lab);
    bool interp = el && is_interpolating(lat, lab);
    holds = el && interp;
    r["chain"] = names_of(lat, chain.elements);
    r["el"] = el;
    r["interpolating"] = interp;
  } else if (p == "distributive") {
    holds = is_distributive(lat);
    if (auto m3 = find_sublattice_m3(lat)) r["m3"] = names_of(lat, *m3);
    if (auto n5 = find_sublattice_n5(lat)) r["n5"] = names_of(lat, *n5);
  } else if (p == "graded") {
    holds = is_graded(lat);
  } else if (p == "level") {
    auto chain = chain_for(lat, o.chain);
    auto v = level_condition(lat, chain, o.atom_cap);
    holds = !v;
    if (v) r["violation"] = {{"atom", lat.name(v->atom)}, {"others", names_of(lat, v->others)}};
  } else if (p == "semimodular") {
    auto chain = chain_for(lat, o.chain);
    auto v = weak_semimodularity(lat, full_labelling(lat, chain));
    holds = !v;
    if (v) {
      r["violation"] = {{"w", lat.name(v->w)}, {"y", lat.name(v->y)}, {"z", lat.name(v->z)},
                        {"dual", v->dual}, {"consequence", v->consequence}};
    }
  } else if (p == "consequences") {
    auto f = trim_consequence_failure(lat);
    holds = !f;
    if (f) r["reason"] = *f;
  } else {
    throw UsageError("unknown property '" + p + "'");
  }
  r["holds"] = holds;
  std::cerr << p << ": " << (holds ? "holds" : "fails") << "\n";
  return {r, holds};
}

Outcome run_label(const std::string& file, const std::string& chain_spec, const std::string& dot) {
  Lattice lat = read_lattice_file(file);
  auto chain = chain_for(lat, chain_spec);
  auto lab = full_labelling(lat, chain);
  json r;
  r["schema"] = kSchema;
  r["verb"] = "label";
  r["chain"] = names_of(lat, chain.elements);
  json edges = json::array();
  std::vector<std::string> text;
  for (std::size_t k = 0; k < lat.num_edges(); ++k) {
    const auto& e = lat.covers()[k];
    edges.push_back({{"lower", lat.name(e.lower)}, {"upper", lat.name(e.upper)}, {"label", lab.labels[k]}});
    text.push_back(std::to_string(lab.labels[k]));
  }
  r["edges"] = edges;
  bool el = is_el_labelling(lat, lab);
  r["el"] = el;
  r["interpolating"] = el && is_interpolating(lat, lab);
  if (!dot.empty()) write_text_file(dot, lattice_to_dot(lat, text));
  return {r, el};
}

Outcome run_mobius(const std::string& file, const std::string& from, const std::string& to) {
  Lattice lat = read_lattice_file(file);
  Elem x = from.empty() ? lat.bottom() : resolve(lat, from);
  Elem y = to.empty() ? lat.top() : resolve(lat, to);
  if (!lat.leq(x, y)) throw UsageError("'" + lat.name(x) + "' is not below '" + lat.name(y) + "'");
  json r;
  r["schema"] = kSchema;
  r["verb"] = "mobius";
  r["from"] = lat.name(x);
  r["to"] = lat.name(y);
  r["mobius"] = mobius(lat, x, y);
  bool holds = true;
  if (x != y) {
    auto iv = interval(lat, x, y).lattice;
    if (auto w = is_trim(iv)) {
      auto h = homotopy_type(iv, *w);
      r["homotopy"] = h.to_string();
      r["nuclear"] = is_nuclear(iv);
    } else {
      r["homotopy"] = nullptr;
      r["reason"] = "interval is not trim: " + trim_failure_reason(iv);
    }
  }
  return {r, holds};
}

Outcome run_spine(const std::string& file) {
  Lattice lat = read_lattice_file(file);
  auto s = spine(lat);
  auto rep = spine_checks(lat);
  json r;
  r["schema"] = kSchema;
  r["verb"] = "spine";
  r["spine"] = names_of(lat, s);
  r["all_left_modular"] = rep.all_left_modular;
  r["closed"] = rep.closed;
  r["distributive"] = rep.distributive;
  if (rep.not_left_modular) r["not_left_modular"] = lat.name(*rep.not_left_modular);
  if (rep.not_closed) r["not_closed"] = {lat.name(rep.not_closed->first), lat.name(rep.not_closed->second)};
  if (rep.forbidden) r["forbidden"] = names_of(lat, *rep.forbidden);
  r["holds"] = rep.ok();
  return {r, rep.ok()};
}

Outcome run_fixed(const std::string& file, const std::vector<std::string>& gens, const std::string& out) {
  Lattice lat = read_lattice_file(file);
  std::vector<std::vector<Elem>> perms;
  for (const auto& g : gens) {
    auto p = resolve_list(lat, g);
    if (p.size() != lat.size()) throw UsageError("generator '" + g + "' must list an image for every element");
    perms.push_back(std::move(p));
  }
  auto group = AutomorphismGroup::from_generators(lat, perms);
  auto sub = fixed_sublattice(lat, group);
  json r;
  r["schema"] = kSchema;
  r["verb"] = "fixed";
  r["group_order"] = group.elements().size();
  r["fixed"] = names_of(lat, sub.to_parent);
  auto w = is_trim(sub.lattice);
  r["trim"] = w.has_value();
  if (!w) r["reason"] = trim_failure_reason(sub.lattice);
  if (!out.empty()) write_text_file(out, lattice_to_json(sub.lattice));
  return {r, w.has_value()};
}

Outcome run_quotient(const std::string& file, const std::vector<std::string>& pairs, const std::string& out) {
  Lattice lat = read_lattice_file(file);
  std::vector<std::pair<Elem, Elem>> ps;
  for (const auto& p : pairs) {
    auto e = resolve_list(lat, p);
    if (e.size() != 2) throw UsageError("--pair takes two elements, got '" + p + "'");
    ps.emplace_back(e[0], e[1]);
  }
  auto theta = smallest_congruence(lat, ps);
  auto q = quotient(lat, theta);
  json r;
  r["schema"] = kSchema;
  r["verb"] = "quotient";
  r["classes"] = json::array();
  for (Elem k = 0; k < q.lattice.size(); ++k) {
    std::vector<Elem> members;
    for (Elem x = 0; x < lat.size(); ++x)
      if (q.class_of[x] == k) members.push_back(x);
    r["classes"].push_back(names_of(lat, members));
  }
  r["size"] = q.lattice.size();
  if (!out.empty()) write_text_file(out, lattice_to_json(q.lattice));
  return {r, true};
}

json comparison(const SetComparison& c) {
  json j{{"equal", c.equal}, {"predicted", c.predicted}, {"actual", c.actual}};
  if (c.first_difference) j["first_difference"] = *c.first_difference;
  return j;
}

struct ConjectureOpts {
  std::string group, orient, dump;
  std::vector<int> checks;
  std::size_t group_cap = 1500;
  bool allow_f4 = false;
  std::size_t jobs = 1;
};

Outcome run_conjecture(const ConjectureOpts& o) {
  if ((o.group == "F4") && !o.allow_f4) throw UsageError("F4 needs --allow-f4");
  auto g = build_group(o.group, o.group_cap);
  std::vector<DiagramOrientation> orients;
  if (o.orient.empty() || o.orient == "all") {
    orients = all_diagram_orientations(g);
  } else {
    std::string spec = o.orient;
    if (auto colon = spec.find(':'); colon != std::string::npos) spec = spec.substr(colon + 1);
    orients.push_back(parse_diagram_orientation(g, spec));
  }
  if (!o.dump.empty() && orients.size() != 1) throw UsageError("--dump-quotient needs a single --orient");
  std::vector<json> results(orients.size());
  std::vector<bool> ok(orients.size(), true);
  std::optional<Lattice> dumped;
  std::mutex m;
  parallel_for(orients.size(), o.jobs, [&](std::size_t i) {
    const auto& orient = orients[i];
    json r;
    r["orientation"] = diagram_orientation_string(g, orient);
    try {
      auto pc = pre_cambrian(g, orient);
      r["size"] = pc.quotient.lattice.size();
      r["rounds"] = pc.rounds;
      for (int c : o.checks) {
        if (c == 1) {
          auto c1 = conjecture1_check(pc);
          json j{{"trim", c1.trim}, {"holds", !c1.failure}};
          if (c1.failure) j["failure"] = *c1.failure;
          ok[i] = ok[i] && !c1.failure;
          r["conjecture1"] = j;
        } else if (c == 2) {
          auto c2 = conjecture2_check(g, orient, pc);
          bool holds = (c2.bottoms_listed.equal && c2.tops_listed.equal) ||
                       (c2.bottoms_reversed.equal && c2.tops_reversed.equal);
          ok[i] = ok[i] && holds;
          r["conjecture2"] = {{"rank2_subsystems", c2.rank2_subsystems},
                              {"bottoms_listed", comparison(c2.bottoms_listed)},
                              {"bottoms_reversed", comparison(c2.bottoms_reversed)},
                              {"tops_listed", comparison(c2.tops_listed)},
                              {"tops_reversed", comparison(c2.tops_reversed)},
                              {"holds", holds}};
        } else {
          auto c3 = conjecture3_check(g, orient, pc);
          json j{{"size", c3.size}, {"coxeter_catalan", c3.coxeter_catalan}};
          bool holds = c3.size == c3.coxeter_catalan;
          if (c3.isomorphic_to_cambrian) {
            j["isomorphic_to_cambrian"] = *c3.isomorphic_to_cambrian;
            j["same_fibers"] = *c3.same_fibers;
            holds = holds && *c3.isomorphic_to_cambrian && *c3.same_fibers;
          }
          j["holds"] = holds;
          ok[i] = ok[i] && holds;
          r["conjecture3"] = j;
        }
      }
      if (!o.dump.empty()) {
        std::lock_guard lock(m);
        dumped = pc.quotient.lattice;
      }
    } catch (const LatticeError& e) {
      if (!theory_failure(e.code())) throw;
      r["error"] = std::string(errc_name(e.code()));
      r["message"] = e.what();
      ok[i] = false;
    }
    results[i] = std::move(r);
  });
  if (dumped) write_text_file(o.dump, lattice_to_json(*dumped));
  json r;
  r["schema"] = kSchema;
  r["verb"] = "conjecture";
  r["group"] = g.name;
  r["order"] = g.elements.size();
  r["coxeter_number"] = g.coxeter_number;
  r["results"] = results;
  bool all = std::all_of(ok.begin(), ok.end(), [](bool b) { return b; });
  r["holds"] = all;
  std::cerr << g.name << ": " << orients.size() << " orientation(s), "
            << (all ? "all checks hold" : "some checks fail") << "\n";
  return {r, all};
}

Outcome run_convert(const std::string& in, const std::string& to, const std::string& out) {
  Lattice lat = read_lattice_file(in);
  if (to == "json") {
    emit(out, lattice_to_json(lat));
  } else if (to == "dot") {
    emit(out, lattice_to_dot(lat));
  } else {
    throw UsageError("--to must be json or dot");
  }
  return {json(), true};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite lattices, trimness and Cambrian lattices"};
  app.require_subcommand(1);
  std::size_t jobs = default_jobs();
  app.add_option("--jobs", jobs, "worker threads for sweeps")->check(CLI::PositiveNumber);

  GenOpts gen;
  auto* g = app.add_subcommand("gen", "generate a lattice");
  g->add_option("--family", gen.family, "chain|boolean|n5|m3|tamari|weak-a|weak-b|weak|cambrian-a|cambrian-b")
      ->required();
  g->add_option("--n", gen.n, "size parameter");
  g->add_option("--orient", gen.orient, "diagram orientation, e.g. s0<s1,s1>s2");
  g->add_option("--group", gen.group, "reflection group for family weak, e.g. H3");
  g->add_option("--group-cap", gen.group_cap, "largest group enumerated");
  g->add_option("-o,--output", gen.out, "output file (default stdout)");
  g->add_option("--dot", gen.dot, "also write DOT, root-labelled for Cambrian families");

  CheckOpts chk;
  auto* c = app.add_subcommand("check", "check a property");
  c->add_option("property", chk.property,
                "trim|extremal|left-modular|el|distributive|graded|level|semimodular|consequences")
      ->required();
  c->add_option("file", chk.file, "lattice file")->required()->check(CLI::ExistingFile);
  c->add_option("--chain", chk.chain, "left modular chain, comma separated");
  c->add_option("--atom-cap", chk.atom_cap, "largest atom count for the level condition");

  std::string file, chain, dot, from, to, out, format;
  auto* l = app.add_subcommand("label", "edge labelling from a left modular chain");
  l->add_option("file", file)->required()->check(CLI::ExistingFile);
  l->add_option("--chain", chain);
  l->add_option("--dot", dot, "write labelled DOT");

  auto* mo = app.add_subcommand("mobius", "Möbius value and homotopy type of an interval");
  mo->add_option("file", file)->required()->check(CLI::ExistingFile);
  mo->add_option("--from", from);
  mo->add_option("--to", to);

  auto* sp = app.add_subcommand("spine", "spine and its checks");
  sp->add_option("file", file)->required()->check(CLI::ExistingFile);

  std::vector<std::string> gens;
  auto* fx = app.add_subcommand("fixed", "sublattice fixed by automorphisms");
  fx->add_option("file", file)->required()->check(CLI::ExistingFile);
  fx->add_option("--gen", gens, "image of each element, comma separated")->required();
  fx->add_option("-o,--output", out);

  std::vector<std::string> pairs;
  auto* qu = app.add_subcommand("quotient", "quotient by the least congruence identifying pairs");
  qu->add_option("file", file)->required()->check(CLI::ExistingFile);
  qu->add_option("--pair", pairs, "two elements, comma separated")->required();
  qu->add_option("-o,--output", out);

  ConjectureOpts conj;
  auto* cj = app.add_subcommand("conjecture", "pre-Cambrian lattice reports");
  cj->add_option("--group", conj.group, "I2(m), Bn, D4, H3, F4")->required();
  cj->add_option("--orient", conj.orient, "orientation or 'all'");
  cj->add_option("--check", conj.checks, "1, 2 or 3")->check(CLI::Range(1, 3));
  cj->add_option("--dump-quotient", conj.dump);
  cj->add_option("--group-cap", conj.group_cap);
  cj->add_flag("--allow-f4", conj.allow_f4);

  auto* cv = app.add_subcommand("convert", "rewrite a lattice file");
  cv->add_option("file", file)->required()->check(CLI::ExistingFile);
  cv->add_option("--to", format, "json|dot")->required();
  cv->add_option("-o,--output", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Outcome o;
    if (g->parsed()) {
      o = run_gen(gen);
    } else if (c->parsed()) {
      o = run_check(chk);
    } else if (l->parsed()) {
      o = run_label(file, chain, dot);
    } else if (mo->parsed()) {
      o = run_mobius(file, from, to);
    } else if (sp->parsed()) {
      o = run_spine(file);
    } else if (fx->parsed()) {
      o = run_fixed(file, gens, out);
    } else if (qu->parsed()) {
      o = run_quotient(file, pairs, out);
    } else if (cj->parsed()) {
      if (conj.checks.empty()) conj.checks = {1, 2, 3};
      conj.jobs = jobs;
      o = run_conjecture(conj);
    } else if (cv->parsed()) {
      o = run_convert(file, format, out);
    }
    if (!o.report.is_null()) std::cout << o.report.dump(2) << "\n";
    return o.holds ? 0 : 1;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const LatticeError& e) {
    if (theory_failure(e.code()) || e.code() == Errc::NotLeftModular) {
      json r{{"schema", kSchema}, {"holds", false}, {"error", std::string(errc_name(e.code()))}, {"message", e.what()}};
      std::cout << r.dump(2) << "\n";
      return 1;
    }
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
