#include "trimlat/reflection.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <deque>
#include <numeric>
#include <regex>
#include <set>

#include "trimlat/error.hpp"

namespace trimlat {

Quad QuadField::mul(Quad x, Quad y) const {
  // (a + b w)(c + d w) = ac + (ad + bc) w + bd (p + q w)
  long long bd = x.b * y.b;
  return {x.a * y.a + bd * p, x.a * y.b + x.b * y.a + bd * q};
}

int QuadField::sign(Quad x) const {
  // a + b w = (u + v sqrt(d)) / 2 with u = 2a + bq, v = b, d = q^2 + 4p
  if (x.b == 0) return (x.a > 0) - (x.a < 0);
  long long u = 2 * x.a + x.b * q;
  long long v = x.b;
  long long d = q * q + 4 * p;
  if (u >= 0 && v >= 0) return 1;
  if (u <= 0 && v <= 0) return -1;
  long long lhs = u * u;
  long long rhs = v * v * d;
  if (lhs == rhs) return 0;
  return u > 0 ? (lhs > rhs ? 1 : -1) : (rhs > lhs ? 1 : -1);
}

std::string QuadField::to_string(Quad x) const {
  if (x.b == 0) return std::to_string(x.a);
  std::string w = x.b == 1 ? symbol : x.b == -1 ? "-" + symbol : std::to_string(x.b) + symbol;
  if (x.a == 0) return w;
  return std::to_string(x.a) + (x.b > 0 ? "+" : "") + w;
}

namespace {

struct Spec {
  std::string name;
  std::size_t rank;
  QuadField field;
  std::vector<std::vector<Quad>> cartan;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::size_t> degrees;
};

void link(Spec& s, int i, int j, Quad aij, Quad aji) {
  s.cartan[i][j] = aij;
  s.cartan[j][i] = aji;
  s.edges.emplace_back(std::min(i, j), std::max(i, j));
}

Spec blank(std::string name, std::size_t rank) {
  Spec s;
  s.name = std::move(name);
  s.rank = rank;
  s.cartan.assign(rank, std::vector<Quad>(rank));
  for (std::size_t i = 0; i < rank; ++i) s.cartan[i][i] = {2, 0};
  return s;
}

std::size_t order_of(const std::vector<std::size_t>& degrees) {
  std::size_t o = 1;
  for (auto d : degrees) o *= d;
  return o;
}

Spec parse_spec(std::string_view text, std::size_t cap) {
  std::string name(text);
  std::smatch m;
  static const std::regex dihedral(R"(I2\((\d+)\))");
  static const std::regex series(R"(([A-Z])(\d+))");
  if (std::regex_match(name, m, dihedral)) {
    int k = std::stoi(m[1]);
    Spec s = blank(name, 2);
    s.degrees = {2, static_cast<std::size_t>(k)};
    Quad c;
    switch (k) {
      case 3: c = {1, 0}; break;
      case 4: c = {2, 0}; break;
      case 6: c = {3, 0}; break;
      case 5:
        // both simple roots lie in one orbit, so the matrix must be symmetric
        s.field = {1, 1, "phi"};
        link(s, 0, 1, {0, -1}, {0, -1});
        return s;
      case 10: s.field = {1, 1, "phi"}; c = {2, 1}; break;
      case 8: s.field = {2, 0, "sqrt2"}; c = {2, 1}; break;
      case 12: s.field = {3, 0, "sqrt3"}; c = {2, 1}; break;
      default:
        throw LatticeError(Errc::UnsupportedType, "I2(" + std::to_string(k) +
                                                      ") needs a field beyond the supported ones");
    }
    link(s, 0, 1, {-1, 0}, {-c.a, -c.b});
    return s;
  }
  if (!std::regex_match(name, m, series)) {
    throw LatticeError(Errc::UnsupportedType, "unknown group '" + name + "'");
  }
  char family = m[1].str()[0];
  std::size_t n = std::stoul(m[2]);
  std::vector<std::size_t> degrees;
  if (family == 'B' && n >= 2) {
    for (std::size_t i = 1; i <= n; ++i) degrees.push_back(2 * i);
  } else if (family == 'D' && n == 4) {
    degrees = {2, 4, 4, 6};
  } else if (family == 'H' && n == 3) {
    degrees = {2, 6, 10};
  } else if (family == 'H' && n == 4) {
    degrees = {2, 12, 20, 30};
  } else if (family == 'F' && n == 4) {
    degrees = {2, 6, 8, 12};
  } else if (family == 'E' && n >= 6 && n <= 8) {
    static const std::vector<std::size_t> e[] = {{2, 5, 6, 8, 9, 12},
                                                 {2, 6, 8, 10, 12, 14, 18},
                                                 {2, 8, 12, 14, 18, 20, 24, 30}};
    degrees = e[n - 6];
  } else {
    throw LatticeError(Errc::UnsupportedType, "unsupported group '" + name + "'");
  }
  if (order_of(degrees) > cap) {
    throw LatticeError(Errc::CapExceeded, name + " has " + std::to_string(order_of(degrees)) +
                                              " elements, above the cap of " + std::to_string(cap));
  }
  Spec s = blank(name, n);
  s.degrees = degrees;
  switch (family) {
    case 'B':
      link(s, 0, 1, {-2, 0}, {-1, 0});
      for (int i = 1; i + 1 < static_cast<int>(n); ++i) link(s, i, i + 1, {-1, 0}, {-1, 0});
      break;
    case 'D':
      for (int j : {0, 2, 3}) link(s, 1, j, {-1, 0}, {-1, 0});
      break;
    case 'H':
      if (n != 3) throw LatticeError(Errc::UnsupportedType, name + " is outside desk scale");
      s.field = {1, 1, "phi"};
      link(s, 0, 1, {0, -1}, {0, -1});
      link(s, 1, 2, {-1, 0}, {-1, 0});
      break;
    case 'F':
      link(s, 0, 1, {-1, 0}, {-1, 0});
      link(s, 1, 2, {-2, 0}, {-1, 0});
      link(s, 2, 3, {-1, 0}, {-1, 0});
      break;
    default:
      throw LatticeError(Errc::UnsupportedType, name + " is outside desk scale");
  }
  std::sort(s.edges.begin(), s.edges.end());
  return s;
}

std::string word_name(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string out;
  for (int s : word) out += "s" + std::to_string(s);
  return out;
}

}  // namespace

Elem ReflectionGroup::find(std::uint64_t mask) const {
  auto it = by_inversions.find(mask);
  if (it == by_inversions.end()) throw LatticeError(Errc::InvalidInput, "no element with that inversion set");
  return it->second;
}

std::string ReflectionGroup::root_name(std::size_t k) const {
  const RootVector& r = roots[k % roots.size()];
  std::string out = k >= roots.size() ? "-(" : "";
  bool first = true;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] == Quad{}) continue;
    if (!first) out += "+";
    first = false;
    if (!(r[i] == Quad{1, 0})) {
      std::string c = field.to_string(r[i]);
      out += r[i].b != 0 ? "(" + c + ")" : c;
    }
    out += "a" + std::to_string(i);
  }
  return k >= roots.size() ? out + ")" : out;
}

ReflectionGroup build_group(std::string_view name, std::size_t cap) {
  Spec spec = parse_spec(name, cap);
  ReflectionGroup g;
  g.name = spec.name;
  g.rank = spec.rank;
  g.field = spec.field;
  g.cartan = spec.cartan;
  g.diagram_edges = spec.edges;
  g.degrees = spec.degrees;
  const std::size_t r = g.rank;
  const QuadField& F = g.field;

  auto reflect = [&](std::size_t i, const RootVector& beta) {
    Quad pairing{};
    for (std::size_t j = 0; j < r; ++j) pairing = F.add(pairing, F.mul(beta[j], g.cartan[i][j]));
    RootVector out = beta;
    out[i] = F.sub(out[i], pairing);
    return out;
  };
  auto is_positive = [&](const RootVector& beta) {
    int sgn = 0;
    for (const Quad& c : beta) {
      int s = F.sign(c);
      if (s == 0) continue;
      if (sgn != 0 && s != sgn) throw LatticeError(Errc::CrossCheckFailed, "root with mixed signs");
      sgn = s;
    }
    return sgn > 0;
  };

  for (std::size_t i = 0; i < r; ++i) {
    RootVector e(r);
    e[i] = {1, 0};
    g.roots.push_back(e);
  }
  for (std::size_t k = 0; k < g.roots.size(); ++k) {
    for (std::size_t i = 0; i < r; ++i) {
      if (k == i) continue;
      RootVector beta = reflect(i, g.roots[k]);
      if (!is_positive(beta)) throw LatticeError(Errc::CrossCheckFailed, "simple reflection made a root negative");
      if (std::find(g.roots.begin(), g.roots.end(), beta) == g.roots.end()) g.roots.push_back(beta);
      if (g.roots.size() > 64) throw LatticeError(Errc::CapExceeded, "more than 64 positive roots");
    }
  }
  const std::size_t N = g.roots.size();
  auto index_of = [&](const RootVector& beta) -> std::uint16_t {
    bool pos = is_positive(beta);
    RootVector b = beta;
    if (!pos)
      for (auto& c : b) c = {-c.a, -c.b};
    auto it = std::find(g.roots.begin(), g.roots.end(), b);
    if (it == g.roots.end()) throw LatticeError(Errc::CrossCheckFailed, "reflection left the root system");
    return static_cast<std::uint16_t>((it - g.roots.begin()) + (pos ? 0 : N));
  };
  g.simple_action.assign(r, std::vector<std::uint16_t>(2 * N));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t k = 0; k < N; ++k) {
      std::uint16_t t = index_of(reflect(i, g.roots[k]));
      g.simple_action[i][k] = t;
      g.simple_action[i][k + N] = static_cast<std::uint16_t>(t < N ? t + N : t - N);
    }
  }

  std::vector<std::uint16_t> id(2 * N);
  std::iota(id.begin(), id.end(), std::uint16_t{0});
  g.elements.push_back(id);
  g.inversions.push_back(0);
  g.words.push_back({});
  g.by_inversions[0] = 0;
  std::vector<Cover> covers;
  for (std::size_t w = 0; w < g.elements.size(); ++w) {
    for (std::size_t s = 0; s < r; ++s) {
      std::uint16_t image = g.elements[w][s];
      if (image >= N) continue;
      std::uint64_t mask = g.inversions[w] | (std::uint64_t{1} << image);
      auto [it, fresh] = g.by_inversions.emplace(mask, static_cast<Elem>(g.elements.size()));
      if (fresh) {
        if (g.elements.size() >= cap) {
          throw LatticeError(Errc::CapExceeded, g.name + " exceeds the cap of " + std::to_string(cap));
        }
        std::vector<std::uint16_t> next(2 * N);
        for (std::size_t k = 0; k < 2 * N; ++k) next[k] = g.elements[w][g.simple_action[s][k]];
        g.elements.push_back(std::move(next));
        g.inversions.push_back(mask);
        auto word = g.words[w];
        word.push_back(static_cast<int>(s));
        g.words.push_back(std::move(word));
      }
      covers.push_back({static_cast<Elem>(w), it->second});
    }
  }
  if (g.elements.size() != order_of(g.degrees)) {
    throw LatticeError(Errc::CrossCheckFailed, g.name + ": enumerated " + std::to_string(g.elements.size()) +
                                                   " elements, expected " +
                                                   std::to_string(order_of(g.degrees)));
  }
  std::vector<std::string> names;
  for (const auto& w : g.words) names.push_back(word_name(w));
  g.weak_order = Lattice::from_covers(g.elements.size(), std::move(covers), std::move(names));
  g.coxeter_number = 2 * N / r;
  const std::uint64_t full = N == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << N) - 1;
  g.longest = g.find(full);
  g.contains_minus_one = true;
  for (std::size_t k = 0; k < N; ++k)
    if (g.elements[g.longest][k] != k + N) g.contains_minus_one = false;
  return g;
}

DiagramOrientation parse_diagram_orientation(const ReflectionGroup& g, std::string_view literal) {
  DiagramOrientation o(g.diagram_edges.size(), true);
  static const std::regex arc(R"(\s*s(\d+)\s*([<>])\s*s(\d+)\s*)");
  std::size_t start = 0;
  std::string text(literal);
  while (start < text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    std::string piece = text.substr(start, end - start);
    std::smatch m;
    if (!std::regex_match(piece, m, arc)) {
      throw LatticeError(Errc::InvalidInput, "cannot read orientation arc '" + piece + "'");
    }
    int a = std::stoi(m[1]);
    int b = std::stoi(m[3]);
    bool a_to_b = m[2] == ">";
    auto key = std::make_pair(std::min(a, b), std::max(a, b));
    auto it = std::find(g.diagram_edges.begin(), g.diagram_edges.end(), key);
    if (it == g.diagram_edges.end()) {
      throw LatticeError(Errc::InvalidInput, "s" + std::to_string(a) + " and s" + std::to_string(b) +
                                                 " are not joined in " + g.name);
    }
    o[it - g.diagram_edges.begin()] = (a < b) == a_to_b;
    start = end + 1;
  }
  return o;
}

std::vector<DiagramOrientation> all_diagram_orientations(const ReflectionGroup& g) {
  const std::size_t e = g.diagram_edges.size();
  std::vector<DiagramOrientation> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << e); ++mask) {
    DiagramOrientation o(e);
    for (std::size_t k = 0; k < e; ++k) o[k] = !((mask >> k) & 1);
    out.push_back(o);
  }
  return out;
}

std::string diagram_orientation_string(const ReflectionGroup& g, const DiagramOrientation& o) {
  std::string out = g.name + ":";
  for (std::size_t k = 0; k < o.size(); ++k) {
    auto [a, b] = g.diagram_edges[k];
    if (k) out += ",";
    out += "s" + std::to_string(a) + (o[k] ? ">" : "<") + "s" + std::to_string(b);
  }
  return out;
}

std::vector<int> coxeter_word(const ReflectionGroup& g, const DiagramOrientation& o) {
  const std::size_t r = g.rank;
  std::vector<int> indegree(r, 0);
  std::vector<std::vector<int>> out(r);
  for (std::size_t k = 0; k < g.diagram_edges.size(); ++k) {
    auto [a, b] = g.diagram_edges[k];
    if (!o[k]) std::swap(a, b);
    out[a].push_back(b);
    ++indegree[b];
  }
  std::set<int> ready;
  for (std::size_t i = 0; i < r; ++i)
    if (indegree[i] == 0) ready.insert(static_cast<int>(i));
  std::vector<int> word;
  while (!ready.empty()) {
    int s = *ready.begin();
    ready.erase(ready.begin());
    word.push_back(s);
    for (int t : out[s])
      if (--indegree[t] == 0) ready.insert(t);
  }
  return word;
}

HalfCoxeterChain half_coxeter_chain(const ReflectionGroup& g, const DiagramOrientation& o) {
  if (!g.contains_minus_one) {
    throw LatticeError(Errc::MinusOneAbsent, g.name + " does not contain -1");
  }
  if (g.coxeter_number % 2 != 0) {
    throw LatticeError(Errc::CrossCheckFailed, g.name + " contains -1 but h is odd");
  }
  auto c = coxeter_word(g, o);
  const std::size_t N = g.num_positive();
  HalfCoxeterChain chain;
  Elem w = 0;
  chain.elements.push_back(w);
  for (std::size_t rep = 0; rep < g.coxeter_number / 2; ++rep) {
    for (int s : c) {
      std::uint16_t image = g.elements[w][s];
      if (image >= N) {
        throw LatticeError(Errc::NotReduced, "step " + std::to_string(chain.elements.size()) +
                                                 " of the word for c^{h/2} is not a cover");
      }
      chain.root_order.push_back(image);
      w = g.find(g.inversions[w] | (std::uint64_t{1} << image));
      chain.elements.push_back(w);
    }
  }
  if (w != g.longest) throw LatticeError(Errc::CrossCheckFailed, "c^{h/2} is not the longest element");
  return chain;
}

std::vector<std::uint64_t> rank2_root_sets(const ReflectionGroup& g) {
  const QuadField& F = g.field;
  const std::size_t N = g.num_positive();
  const std::size_t r = g.rank;
  auto in_span = [&](const RootVector& x, const RootVector& y, const RootVector& z) {
    // every 3x3 minor vanishes
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i + 1; j < r; ++j)
        for (std::size_t k = j + 1; k < r; ++k) {
          auto m2 = [&](const RootVector& u, const RootVector& v, std::size_t p, std::size_t q) {
            return F.sub(F.mul(u[p], v[q]), F.mul(u[q], v[p]));
          };
          Quad det = F.add(F.sub(F.mul(x[i], m2(y, z, j, k)), F.mul(x[j], m2(y, z, i, k))),
                           F.mul(x[k], m2(y, z, i, j)));
          if (!(det == Quad{})) return false;
        }
    return true;
  };
  std::set<std::uint64_t> sets;
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = a + 1; b < N; ++b) {
      std::uint64_t mask = 0;
      for (std::size_t c = 0; c < N; ++c)
        if (in_span(g.roots[a], g.roots[b], g.roots[c])) mask |= std::uint64_t{1} << c;
      sets.insert(mask);
    }
  return {sets.begin(), sets.end()};
}

std::size_t coxeter_catalan(const ReflectionGroup& g) {
  // numerator and denominator products stay small for desk-scale groups
  unsigned long long num = 1;
  unsigned long long den = 1;
  for (auto d : g.degrees) {
    num *= g.coxeter_number + d;
    den *= d;
  }
  return static_cast<std::size_t>(num / den);
}

}  // namespace trimlat
