#include "trimlat/families.hpp"
#include <algorithm>

#include <sstream>

namespace trimlat {

Lattice lattice_from_order(std::size_t size, const std::function<bool(Elem, Elem)>& leq,
                           std::vector<std::string> names) {
  std::vector<Cover> rel;
  for (Elem a = 0; a < size; ++a) {
    for (Elem b = 0; b < size; ++b) {
      if (a != b && leq(a, b)) rel.push_back({a, b});
    }
  }
  return Lattice::from_covers(size, std::move(rel), std::move(names));
}

Lattice chain_lattice(std::size_t length) {
  std::vector<Cover> covers;
  for (Elem i = 0; i < length; ++i) covers.push_back({i, i + 1});
  return Lattice::from_covers(length + 1, std::move(covers));
}

Lattice boolean_lattice(std::size_t rank) {
  if (rank > 16) throw LatticeError(Errc::CapExceeded, "boolean rank above 16");
  const std::size_t size = std::size_t{1} << rank;
  std::vector<Cover> covers;
  std::vector<std::string> names(size);
  for (Elem s = 0; s < size; ++s) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (std::size_t i = 0; i < rank; ++i) {
      if (s & (Elem{1} << i)) {
        os << (first ? "" : ",") << i + 1;
        first = false;
      } else {
        covers.push_back({s, s | (Elem{1} << i)});
      }
    }
    os << "}";
    names[s] = os.str();
  }
  return Lattice::from_covers(size, std::move(covers), std::move(names));
}

Lattice n5_lattice() {
  return Lattice::from_covers(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}},
                              {"0", "x", "y", "z", "1"});
}

Lattice m3_lattice() {
  return Lattice::from_covers(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}},
                              {"0", "a", "b", "c", "1"});
}

Lattice tamari_lattice(std::size_t n) {
  if (n == 0) throw LatticeError(Errc::InvalidInput, "tamari needs n >= 1");
  if (n > 8) throw LatticeError(Errc::CapExceeded, "tamari n above 8");
  // Bracket vectors: i <= v_i <= n, and v_j <= v_i whenever i < j <= v_i.
  std::vector<std::vector<int>> vecs;
  std::vector<int> v(n + 1, 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == 0) {
      vecs.emplace_back(v.begin() + 1, v.end());
      return;
    }
    for (int val = i; val <= static_cast<int>(n); ++val) {
      bool ok = true;
      for (int j = i + 1; j <= val && ok; ++j) ok = v[j] <= val;
      if (ok) {
        v[i] = val;
        self(self, i - 1);
      }
    }
  };
  rec(rec, static_cast<int>(n));
  std::sort(vecs.begin(), vecs.end());
  std::vector<std::string> names;
  for (const auto& vec : vecs) {
    std::string s;
    for (int x : vec) s += std::to_string(x);
    names.push_back(s);
  }
  return lattice_from_order(
      vecs.size(),
      [&](Elem a, Elem b) {
        for (std::size_t i = 0; i < n; ++i) {
          if (vecs[a][i] > vecs[b][i]) return false;
        }
        return true;
      },
      std::move(names));
}

Lattice product_lattice(const Lattice& a, const Lattice& b) {
  const std::size_t nb = b.size();
  std::vector<Cover> covers;
  for (Elem x = 0; x < a.size(); ++x) {
    for (Elem y = 0; y < nb; ++y) {
      Elem self = static_cast<Elem>(x * nb + y);
      for (Elem x2 : a.upper_covers(x)) covers.push_back({self, static_cast<Elem>(x2 * nb + y)});
      for (Elem y2 : b.upper_covers(y)) covers.push_back({self, static_cast<Elem>(x * nb + y2)});
    }
  }
  return Lattice::from_covers(a.size() * nb, std::move(covers));
}

}  // namespace trimlat
