#include "trimlat/coxeter.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <queue>
#include <sstream>

namespace trimlat {

std::string_view type_name(CoxeterType t) { return t == CoxeterType::A ? "A" : "B"; }

// ------------------------------------------------------ SignedPermutation

SignedPermutation::SignedPermutation(CoxeterType type, std::vector<int> window)
    : type_(type), window_(std::move(window)) {
  const int n = static_cast<int>(window_.size());
  std::vector<bool> seen(n + 1, false);
  for (int v : window_) {
    int a = std::abs(v);
    if (a < 1 || a > n || seen[a] || (type_ == CoxeterType::A && v < 0)) {
      throw LatticeError(Errc::InvalidInput, "window is not a " +
                                                 std::string(type_name(type_)) + " permutation");
    }
    seen[a] = true;
  }
}

SignedPermutation SignedPermutation::identity(CoxeterType type, std::size_t n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return {type, std::move(w)};
}

SignedPermutation SignedPermutation::simple(CoxeterType type, std::size_t n, int i) {
  auto w = identity(type, n).window_;
  if (i == 0 && type == CoxeterType::B) {
    w[0] = -1;
  } else if (i >= 1 && i < static_cast<int>(n)) {
    std::swap(w[i - 1], w[i]);
  } else {
    throw LatticeError(Errc::InvalidInput, "no simple reflection s" + std::to_string(i));
  }
  return {type, std::move(w)};
}

SignedPermutation SignedPermutation::longest(CoxeterType type, std::size_t n) {
  std::vector<int> w(n);
  for (std::size_t k = 0; k < n; ++k) {
    w[k] = type == CoxeterType::B ? -static_cast<int>(k + 1) : static_cast<int>(n - k);
  }
  return {type, std::move(w)};
}

std::vector<int> SignedPermutation::one_line() const {
  if (type_ == CoxeterType::A) return window_;
  std::vector<int> out;
  out.reserve(2 * window_.size());
  for (auto it = window_.rbegin(); it != window_.rend(); ++it) out.push_back(-*it);
  out.insert(out.end(), window_.begin(), window_.end());
  return out;
}

SignedPermutation SignedPermutation::operator*(const SignedPermutation& b) const {
  SignedPermutation out = b;
  for (auto& v : out.window_) v = (*this)(v);
  return out;
}

SignedPermutation SignedPermutation::inverse() const {
  SignedPermutation out = *this;
  for (std::size_t k = 0; k < window_.size(); ++k) {
    int v = window_[k];
    int pos = static_cast<int>(k) + 1;
    out.window_[std::abs(v) - 1] = v > 0 ? pos : -pos;
  }
  return out;
}

std::string SignedPermutation::to_string() const {
  std::string s = "[";
  for (std::size_t k = 0; k < window_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(window_[k]);
  }
  return s + "]";
}

// ------------------------------------------------------------------ roots

std::string Root::to_string() const {
  switch (kind) {
    case Kind::Diff: return "e" + std::to_string(j) + "-e" + std::to_string(i);
    case Kind::Sum: return "e" + std::to_string(j) + "+e" + std::to_string(i);
    case Kind::Short: return "e" + std::to_string(i);
  }
  return {};
}

RootSystem::RootSystem(CoxeterType type, std::size_t n) : type_(type), n_(n) {
  const int m = static_cast<int>(n);
  if (type == CoxeterType::B) {
    for (int i = 1; i <= m; ++i) roots_.push_back(Root::short_root(i));
  }
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      roots_.push_back(Root::diff(i, j));
      if (type == CoxeterType::B) roots_.push_back(Root::sum(i, j));
    }
  }
}

std::size_t RootSystem::index(const Root& r) const {
  // Layout: [short roots] then per pair (i < j) in lexicographic order the
  // difference followed (type B) by the sum.
  const std::size_t n = n_;
  const bool b = type_ == CoxeterType::B;
  if (r.kind == Root::Kind::Short) return static_cast<std::size_t>(r.i - 1);
  const auto i = static_cast<std::size_t>(r.i);
  const auto j = static_cast<std::size_t>(r.j);
  // pairs before (i, j): rows 1..i-1 contribute (n - row) each
  std::size_t before = (i - 1) * n - (i - 1) * i / 2 + (j - i - 1);
  std::size_t base = b ? n + 2 * before : before;
  return base + (b && r.kind == Root::Kind::Sum ? 1 : 0);
}

RootSet inversion_set(const RootSystem& rs, const SignedPermutation& w) {
  const int n = static_cast<int>(w.n());
  // pos[v + n] = position of value v in the one-line notation
  std::vector<int> pos(2 * n + 1, 0);
  auto line = w.one_line();
  for (std::size_t k = 0; k < line.size(); ++k) pos[line[k] + n] = static_cast<int>(k);
  auto at = [&](int v) { return pos[v + n]; };
  RootSet out(rs.size());
  for (std::size_t k = 0; k < rs.size(); ++k) {
    const Root& r = rs.root(k);
    bool inv = false;
    switch (r.kind) {
      case Root::Kind::Diff: inv = at(r.j) < at(r.i); break;
      case Root::Kind::Short: inv = at(r.i) < at(-r.i); break;
      case Root::Kind::Sum: inv = at(r.i) < at(-r.j); break;
    }
    if (inv) out.set(k);
  }
  return out;
}

RootSet inversion_set_algebraic(const RootSystem& rs, const SignedPermutation& w) {
  const auto winv = w.inverse();
  const int n = static_cast<int>(w.n());
  // A vector is positive when its coordinate with the largest index among
  // the nonzero ones is positive.
  auto positive = [&](const std::vector<int>& v) {
    for (int k = n; k >= 1; --k) {
      if (v[k] != 0) return v[k] > 0;
    }
    return false;
  };
  auto act = [&](int k, int coef, std::vector<int>& v) {
    int img = winv(k);
    v[std::abs(img)] += img > 0 ? coef : -coef;
  };
  RootSet out(rs.size());
  for (std::size_t k = 0; k < rs.size(); ++k) {
    const Root& r = rs.root(k);
    std::vector<int> v(n + 1, 0);
    switch (r.kind) {
      case Root::Kind::Diff: act(r.j, 1, v); act(r.i, -1, v); break;
      case Root::Kind::Sum: act(r.j, 1, v); act(r.i, 1, v); break;
      case Root::Kind::Short: act(r.i, 1, v); break;
    }
    if (!positive(v)) out.set(k);
  }
  return out;
}

// ------------------------------------------------------------ orientation

Orientation::Orientation(CoxeterType type, std::size_t n, std::vector<bool> forward)
    : type_(type), n_(n), forward_(std::move(forward)) {
  const std::size_t want = type == CoxeterType::B ? (n >= 1 ? n - 1 : 0) : (n >= 2 ? n - 2 : 0);
  if (n == 0 || forward_.size() != want) {
    throw LatticeError(Errc::InvalidInput, "orientation does not match the diagram");
  }
}

Orientation Orientation::all_forward(CoxeterType type, std::size_t n) {
  std::size_t edges = type == CoxeterType::B ? (n >= 1 ? n - 1 : 0) : (n >= 2 ? n - 2 : 0);
  return {type, n, std::vector<bool>(edges, true)};
}

std::vector<Orientation> Orientation::all(CoxeterType type, std::size_t n) {
  std::size_t edges = all_forward(type, n).forward_.size();
  std::vector<Orientation> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << edges); ++mask) {
    std::vector<bool> f(edges);
    for (std::size_t k = 0; k < edges; ++k) f[k] = !((mask >> k) & 1);
    out.emplace_back(type, n, std::move(f));
  }
  return out;
}

namespace {

int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) {
    throw LatticeError(Errc::InvalidInput, "bad " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

std::string_view trim_ws(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

Orientation Orientation::parse(std::string_view literal) {
  literal = trim_ws(literal);
  auto colon = literal.find(':');
  std::string_view head = literal.substr(0, colon);
  if (head.size() < 2 || (head[0] != 'A' && head[0] != 'B')) {
    throw LatticeError(Errc::InvalidInput, "orientation must start with A<rank> or B<rank>");
  }
  const CoxeterType type = head[0] == 'A' ? CoxeterType::A : CoxeterType::B;
  const int rank = parse_int(head.substr(1), "rank");
  if (rank < 1) throw LatticeError(Errc::InvalidInput, "rank must be positive");
  const std::size_t n = type == CoxeterType::A ? static_cast<std::size_t>(rank) + 1
                                               : static_cast<std::size_t>(rank);
  Orientation o = all_forward(type, n);
  if (colon == std::string_view::npos) return o;
  std::string_view rest = literal.substr(colon + 1);
  const int lo = type == CoxeterType::B ? 0 : 1;
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view item = trim_ws(rest.substr(0, comma));
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    if (item.empty()) continue;
    auto op = item.find_first_of("<>");
    if (op == std::string_view::npos || item[0] != 's' || op + 1 >= item.size() ||
        item[op + 1] != 's') {
      throw LatticeError(Errc::InvalidInput, "bad edge '" + std::string(item) + "'");
    }
    int a = parse_int(item.substr(1, op - 1), "node");
    int b = parse_int(item.substr(op + 2), "node");
    // arrowhead toward the target
    int src = item[op] == '>' ? a : b;
    int dst = item[op] == '>' ? b : a;
    if (std::abs(src - dst) != 1 || std::min(src, dst) < lo ||
        std::max(src, dst) >= static_cast<int>(n)) {
      throw LatticeError(Errc::InvalidInput, "no diagram edge '" + std::string(item) + "'");
    }
    int i = std::max(src, dst);
    std::size_t slot = static_cast<std::size_t>(i - (type == CoxeterType::B ? 1 : 2));
    o.forward_[slot] = src < dst;
  }
  return o;
}

bool Orientation::forward(int i) const {
  int slot = i - (type_ == CoxeterType::B ? 1 : 2);
  if (slot < 0 || slot >= static_cast<int>(forward_.size())) {
    throw LatticeError(Errc::InvalidInput, "no diagram edge at " + std::to_string(i));
  }
  return forward_[static_cast<std::size_t>(slot)];
}

bool Orientation::in_d(int v) const {
  if (type_ == CoxeterType::A) return v >= 2 && v + 1 <= static_cast<int>(n_) && forward(v);
  int a = std::abs(v);
  if (a < 1 || a >= static_cast<int>(n_)) return false;
  return forward(a) == (v > 0);
}

bool Orientation::in_u(int v) const {
  if (type_ == CoxeterType::A) return v >= 2 && v + 1 <= static_cast<int>(n_) && !forward(v);
  int a = std::abs(v);
  if (a < 1 || a >= static_cast<int>(n_)) return false;
  return forward(a) != (v > 0);
}

std::vector<int> Orientation::d_set() const {
  std::vector<int> out;
  for (int v = -static_cast<int>(n_); v <= static_cast<int>(n_); ++v)
    if (v != 0 && in_d(v)) out.push_back(v);
  return out;
}

std::vector<int> Orientation::u_set() const {
  std::vector<int> out;
  for (int v = -static_cast<int>(n_); v <= static_cast<int>(n_); ++v)
    if (v != 0 && in_u(v)) out.push_back(v);
  return out;
}

std::vector<int> Orientation::coxeter_word() const {
  const int lo = type_ == CoxeterType::B ? 0 : 1;
  const int hi = static_cast<int>(n_) - 1;
  std::vector<int> indeg(n_, 0);
  for (int i = lo + 1; i <= hi; ++i) ++indeg[forward(i) ? i : i - 1];
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = lo; v <= hi; ++v)
    if (indeg[v] == 0) ready.push(v);
  std::vector<int> word;
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    word.push_back(v);
    // successors of v along arcs
    if (v + 1 <= hi && forward(v + 1) && --indeg[v + 1] == 0) ready.push(v + 1);
    if (v - 1 >= lo && !forward(v) && --indeg[v - 1] == 0) ready.push(v - 1);
  }
  return word;
}

std::string Orientation::to_string() const {
  std::string s = std::string(type_name(type_)) +
                  std::to_string(type_ == CoxeterType::A ? n_ - 1 : n_);
  const int lo = type_ == CoxeterType::B ? 1 : 2;
  for (int i = lo; i < static_cast<int>(n_); ++i) {
    s += i == lo ? ":" : ",";
    s += "s" + std::to_string(i - 1) + (forward(i) ? ">" : "<") + "s" + std::to_string(i);
  }
  return s;
}

// --------------------------------------------------------------- patterns

AnnotatedPattern AnnotatedPattern::parse(std::string_view text) {
  AnnotatedPattern p;
  for (char ch : text) {
    if (ch >= '1' && ch <= '9') {
      p.perm.push_back(ch - '0');
      p.marks.push_back(Mark::Plain);
    } else if ((ch == 'b' || ch == 'u') && !p.marks.empty()) {
      p.marks.back() = ch == 'b' ? Mark::Barred : Mark::Underlined;
    } else {
      throw LatticeError(Errc::InvalidInput, "bad pattern '" + std::string(text) + "'");
    }
  }
  std::vector<int> sorted = p.perm;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (sorted[k] != static_cast<int>(k) + 1) {
      throw LatticeError(Errc::InvalidInput, "pattern is not a permutation");
    }
  }
  return p;
}

bool contains_pattern(const SignedPermutation& w, const AnnotatedPattern& p,
                      const Orientation& orient) {
  const auto line = w.one_line();
  const std::size_t k = p.perm.size();
  if (k == 0 || k > line.size()) return k == 0;
  std::vector<std::size_t> idx(k);
  auto rec = [&](auto&& self, std::size_t depth, std::size_t start) -> bool {
    if (depth == k) {
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a + 1; b < k; ++b) {
          if ((line[idx[a]] < line[idx[b]]) != (p.perm[a] < p.perm[b])) return false;
        }
        int v = line[idx[a]];
        if (p.marks[a] == AnnotatedPattern::Mark::Barred && !orient.in_u(v)) return false;
        if (p.marks[a] == AnnotatedPattern::Mark::Underlined && !orient.in_d(v)) return false;
      }
      return true;
    }
    for (std::size_t s = start; s + (k - depth) <= line.size(); ++s) {
      idx[depth] = s;
      if (self(self, depth + 1, s + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0, 0);
}

// ------------------------------------------------------------- weak order

Elem WeakOrder::find(const SignedPermutation& w) const {
  auto it = index.find(w);
  if (it == index.end()) throw LatticeError(Errc::InvalidInput, "element not in weak order");
  return it->second;
}

WeakOrder weak_order(CoxeterType type, std::size_t n, std::size_t cap_a, std::size_t cap_b) {
  if (n == 0) throw LatticeError(Errc::InvalidInput, "n must be positive");
  if ((type == CoxeterType::A && n > cap_a) || (type == CoxeterType::B && n > cap_b)) {
    throw LatticeError(Errc::CapExceeded, "weak order " + std::string(type_name(type)) +
                                              std::to_string(n) + " exceeds the size cap");
  }
  RootSystem rs(type, n);
  const int lo = type == CoxeterType::B ? 0 : 1;
  std::vector<SignedPermutation> gens;
  for (int i = lo; i < static_cast<int>(n); ++i) gens.push_back(SignedPermutation::simple(type, n, i));

  // Breadth-first over right multiplication by simple reflections.
  std::map<SignedPermutation, std::size_t> seen;
  std::vector<SignedPermutation> elems{SignedPermutation::identity(type, n)};
  seen[elems[0]] = 0;
  for (std::size_t k = 0; k < elems.size(); ++k) {
    for (const auto& s : gens) {
      auto next = elems[k] * s;
      if (seen.emplace(next, elems.size()).second) elems.push_back(next);
    }
  }
  std::vector<RootSet> invs;
  invs.reserve(elems.size());
  for (const auto& e : elems) invs.push_back(inversion_set(rs, e));
  std::vector<std::size_t> order(elems.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    auto la = invs[a].count();
    auto lb = invs[b].count();
    if (la != lb) return la < lb;
    return elems[a].window() < elems[b].window();
  });

  WeakOrder w{type, n, rs, {}, {}, {}, {}};
  for (std::size_t k : order) {
    w.index[elems[k]] = static_cast<Elem>(w.elements.size());
    w.elements.push_back(elems[k]);
    w.inversions.push_back(invs[k]);
  }
  std::vector<Cover> covers;
  std::vector<std::string> names;
  for (Elem a = 0; a < w.elements.size(); ++a) {
    names.push_back(w.elements[a].to_string());
    for (const auto& s : gens) {
      Elem b = w.index.at(w.elements[a] * s);
      if (w.inversions[b].count() == w.inversions[a].count() + 1) {
        if (!w.inversions[a].is_subset_of(w.inversions[b])) {
          throw LatticeError(Errc::CrossCheckFailed, "cover does not add one inversion");
        }
        covers.push_back({a, b});
      }
    }
  }
  w.lattice = Lattice::from_covers(w.elements.size(), std::move(covers), std::move(names));
  return w;
}

namespace {

std::vector<Elem> avoiders(const WeakOrder& w, const Orientation& orient,
                           std::initializer_list<std::string_view> patterns) {
  if (orient.type() != w.type || orient.n() != w.n) {
    throw LatticeError(Errc::InvalidInput, "orientation does not match the group");
  }
  std::vector<AnnotatedPattern> ps;
  for (auto p : patterns) ps.push_back(AnnotatedPattern::parse(p));
  std::vector<Elem> out;
  for (Elem e = 0; e < w.elements.size(); ++e) {
    bool ok = std::none_of(ps.begin(), ps.end(), [&](const AnnotatedPattern& p) {
      return contains_pattern(w.elements[e], p, orient);
    });
    if (ok) out.push_back(e);
  }
  return out;
}

}  // namespace

std::vector<Elem> b_set(const WeakOrder& w, const Orientation& orient) {
  return avoiders(w, orient, {"2b31", "312u"});
}

std::vector<Elem> t_set(const WeakOrder& w, const Orientation& orient) {
  return avoiders(w, orient, {"2b13", "132u"});
}

std::vector<Elem> b_set_one_pattern(const WeakOrder& w, const Orientation& orient) {
  return avoiders(w, orient, {"2b31"});
}

std::vector<Elem> t_set_one_pattern(const WeakOrder& w, const Orientation& orient) {
  return avoiders(w, orient, {"2b13"});
}

// ------------------------------------------------------- Coxeter element

SignedPermutation coxeter_element(const Orientation& orient) {
  if (orient.type() != CoxeterType::B) {
    throw LatticeError(Errc::UnsupportedType, "coxeter_element is defined for type B");
  }
  const std::size_t n = orient.n();
  auto c = SignedPermutation::identity(CoxeterType::B, n);
  for (int s : orient.coxeter_word()) c = c * SignedPermutation::simple(CoxeterType::B, n, s);

  // -n, D ascending, n, U descending, back to -n.
  std::vector<int> cycle{-static_cast<int>(n)};
  auto d = orient.d_set();
  auto u = orient.u_set();
  cycle.insert(cycle.end(), d.begin(), d.end());
  cycle.push_back(static_cast<int>(n));
  cycle.insert(cycle.end(), u.rbegin(), u.rend());
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    if (c(cycle[k]) != cycle[(k + 1) % cycle.size()]) {
      throw LatticeError(Errc::CrossCheckFailed,
                         "Coxeter element " + c.to_string() + " does not follow the cycle at " +
                             std::to_string(cycle[k]));
    }
  }
  return c;
}

std::vector<SignedPermutation> xi_chain(const Orientation& orient) {
  if (orient.type() != CoxeterType::B) {
    throw LatticeError(Errc::UnsupportedType, "xi_chain is defined for type B");
  }
  const std::size_t n = orient.n();
  RootSystem rs(CoxeterType::B, n);
  auto word = orient.coxeter_word();
  std::vector<SignedPermutation> out{SignedPermutation::identity(CoxeterType::B, n)};
  RootSet prev = inversion_set(rs, out.back());
  for (std::size_t rep = 0; rep < n; ++rep) {
    for (int s : word) {
      out.push_back(out.back() * SignedPermutation::simple(CoxeterType::B, n, s));
      RootSet cur = inversion_set(rs, out.back());
      if (cur.count() != prev.count() + 1 || !prev.is_subset_of(cur)) {
        throw LatticeError(Errc::NotReduced, "step " + std::to_string(out.size() - 1) +
                                                 " of the chain is not a cover");
      }
      prev = std::move(cur);
    }
  }
  if (out.back() != SignedPermutation::longest(CoxeterType::B, n)) {
    throw LatticeError(Errc::NotReduced, "the chain does not end at -1");
  }
  return out;
}

std::vector<Root> xi_root_order(const Orientation& orient) {
  auto chain = xi_chain(orient);
  RootSystem rs(CoxeterType::B, orient.n());
  std::vector<Root> out;
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    RootSet diff = inversion_set(rs, chain[k + 1]) - inversion_set(rs, chain[k]);
    out.push_back(rs.root(diff.find_first()));
  }
  return out;
}

// --------------------------------------------------------- rank 2 systems

std::string Rank2System::to_string() const {
  switch (kind) {
    case Kind::B2: return "B2(" + std::to_string(i) + "," + std::to_string(j) + ")";
    case Kind::A2Plain:
      return "A2(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
    case Kind::A2Mixed:
      return "A2(" + std::to_string(i) + "," + std::to_string(j) + ",-" + std::to_string(k) + ")";
  }
  return {};
}

std::vector<Rank2System> rank2_subsystems(CoxeterType type, std::size_t n) {
  const int m = static_cast<int>(n);
  std::vector<Rank2System> out;
  if (type == CoxeterType::B) {
    for (int i = 1; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j)
        out.push_back({Rank2System::Kind::B2, i, j, 0,
                       {Root::short_root(i), Root::sum(i, j), Root::short_root(j), Root::diff(i, j)}});
  }
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      for (int k = j + 1; k <= m; ++k)
        out.push_back({Rank2System::Kind::A2Plain, i, j, k,
                       {Root::diff(i, j), Root::diff(i, k), Root::diff(j, k)}});
  if (type == CoxeterType::B) {
    for (int i = 1; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j)
        for (int k = 1; k <= m; ++k) {
          if (k == i || k == j) continue;
          out.push_back({Rank2System::Kind::A2Mixed, i, j, k,
                         {Root::diff(i, j), Root::sum(j, k), Root::sum(i, k)}});
        }
  }
  return out;
}

std::vector<Root> gbar_order(const Rank2System& r, const Orientation& orient) {
  bool listed = true;
  switch (r.kind) {
    case Rank2System::Kind::B2: listed = orient.in_d(r.i); break;
    case Rank2System::Kind::A2Plain: listed = orient.in_d(r.j); break;
    case Rank2System::Kind::A2Mixed: listed = orient.in_u(r.i); break;
  }
  std::vector<Root> out = r.roots;
  if (!listed) std::reverse(out.begin(), out.end());
  return out;
}

bool good_intersection(const RootSet& inv, const RootSystem& rs, const std::vector<Root>& order,
                       Side side) {
  std::vector<bool> in;
  for (const Root& r : order) in.push_back(inv.test(rs.index(r)));
  const std::size_t m = in.size();
  std::size_t t = 0;
  while (t < m && in[t]) ++t;
  if (std::none_of(in.begin() + static_cast<std::ptrdiff_t>(t), in.end(), [](bool b) { return b; })) {
    return true;  // initial
  }
  if (side == Side::B) {
    return in[m - 1] && std::count(in.begin(), in.end(), true) == 1;
  }
  return !in[0] && std::count(in.begin(), in.end(), true) == static_cast<std::ptrdiff_t>(m - 1);
}

bool good_intersection(const RootSet& inv, const RootSystem& rs, const Rank2System& r,
                       const Orientation& orient, Side side) {
  return good_intersection(inv, rs, gbar_order(r, orient), side);
}

bool is_inversion_set(const RootSet& inv, const RootSystem& rs) {
  for (const auto& r : rank2_subsystems(rs.type(), rs.n())) {
    std::vector<bool> in;
    for (const Root& root : r.roots) in.push_back(inv.test(rs.index(root)));
    std::size_t t = 0;
    while (t < in.size() && in[t]) ++t;
    bool initial = std::none_of(in.begin() + static_cast<std::ptrdiff_t>(t), in.end(),
                                [](bool b) { return b; });
    std::size_t f = in.size();
    while (f > 0 && in[f - 1]) --f;
    bool final = std::none_of(in.begin(), in.begin() + static_cast<std::ptrdiff_t>(f),
                              [](bool b) { return b; });
    if (!initial && !final) return false;
  }
  return true;
}

namespace {

bool good_everywhere(const RootSet& inv, const RootSystem& rs, const Orientation& orient,
                     Side side) {
  if (!is_inversion_set(inv, rs)) {
    throw LatticeError(Errc::NotAnInversionSet, "root set is not the inversion set of any element");
  }
  for (const auto& r : rank2_subsystems(rs.type(), rs.n())) {
    if (!good_intersection(inv, rs, r, orient, side)) return false;
  }
  return true;
}

}  // namespace

bool is_b_inversion_set(const RootSet& inv, const RootSystem& rs, const Orientation& orient) {
  return good_everywhere(inv, rs, orient, Side::B);
}

bool is_t_inversion_set(const RootSet& inv, const RootSystem& rs, const Orientation& orient) {
  return good_everywhere(inv, rs, orient, Side::T);
}

}  // namespace trimlat
