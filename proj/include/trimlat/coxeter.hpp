#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trimlat/lattice.hpp"

namespace trimlat {

enum class CoxeterType { A, B };

/// Element of S_n (type A) or the hyperoctahedral group B_n, stored by its
/// window pi_1..pi_n. In type B, pi(-i) = -pi(i).
class SignedPermutation {
 public:
  SignedPermutation() = default;
  /// Throws InvalidInput unless |window| is a permutation of [n] (and all
  /// entries positive in type A).
  SignedPermutation(CoxeterType type, std::vector<int> window);

  static SignedPermutation identity(CoxeterType type, std::size_t n);
  /// s_i: for i > 0 swaps positions i, i+1; s_0 (type B) negates position 1.
  static SignedPermutation simple(CoxeterType type, std::size_t n, int i);
  static SignedPermutation longest(CoxeterType type, std::size_t n);

  CoxeterType type() const noexcept { return type_; }
  std::size_t n() const noexcept { return window_.size(); }
  const std::vector<int>& window() const noexcept { return window_; }
  /// Value at a (signed, nonzero) position.
  int operator()(int i) const { return i > 0 ? window_[i - 1] : -window_[-i - 1]; }

  /// One-line notation: pi_{-n} .. pi_{-1} pi_1 .. pi_n in type B, the window in type A.
  std::vector<int> one_line() const;
  /// Position -> value map composition: (a * b)(i) = a(b(i)).
  SignedPermutation operator*(const SignedPermutation& b) const;
  SignedPermutation inverse() const;
  std::string to_string() const;

  auto operator<=>(const SignedPermutation&) const = default;

 private:
  CoxeterType type_ = CoxeterType::A;
  std::vector<int> window_;
};

/// Positive roots: Diff = e_j - e_i, Sum = e_j + e_i (i < j), Short = e_i.
struct Root {
  enum class Kind { Diff, Sum, Short };
  Kind kind = Kind::Diff;
  int i = 0;
  int j = 0;

  static Root diff(int i, int j) { return {Kind::Diff, i, j}; }
  static Root sum(int a, int b) { return {Kind::Sum, std::min(a, b), std::max(a, b)}; }
  static Root short_root(int i) { return {Kind::Short, i, 0}; }

  std::string to_string() const;
  auto operator<=>(const Root&) const = default;
};

using RootSet = BitRow;

/// Positive roots of type A_{n-1} or B_n with a dense index.
class RootSystem {
 public:
  RootSystem(CoxeterType type, std::size_t n);

  CoxeterType type() const noexcept { return type_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return roots_.size(); }
  const std::vector<Root>& roots() const noexcept { return roots_; }
  const Root& root(std::size_t k) const { return roots_[k]; }
  std::size_t index(const Root& r) const;

 private:
  CoxeterType type_;
  std::size_t n_;
  std::vector<Root> roots_;
};

/// Positional rules: e_j - e_i if j precedes i, e_i if i precedes -i,
/// e_j + e_i if i precedes -j.
RootSet inversion_set(const RootSystem& rs, const SignedPermutation& w);
/// {alpha > 0 : w^{-1}(alpha) < 0} through the linear action; for cross-checks.
RootSet inversion_set_algebraic(const RootSystem& rs, const SignedPermutation& w);

/// Orientation of the Coxeter diagram. Type B: path s_0 - s_1 - ... - s_{n-1};
/// type A (S_n): path s_1 - ... - s_{n-1}. forward(i) means s_{i-1} -> s_i.
class Orientation {
 public:
  Orientation() = default;
  /// forward[k] describes the edge between s_{i-1} and s_i with i = k + 1
  /// (type B) or i = k + 2 (type A).
  Orientation(CoxeterType type, std::size_t n, std::vector<bool> forward);
  static Orientation all_forward(CoxeterType type, std::size_t n);
  /// Literal such as "B3:s0<s1,s1>s2" (arrowhead toward the target) or
  /// "A3:s1>s2,s2<s3" for S_4. Unlisted edges point forward.
  static Orientation parse(std::string_view literal);
  static std::vector<Orientation> all(CoxeterType type, std::size_t n);

  CoxeterType type() const noexcept { return type_; }
  std::size_t n() const noexcept { return n_; }
  /// Edge between s_{i-1} and s_i.
  bool forward(int i) const;
  const std::vector<bool>& edges() const noexcept { return forward_; }

  bool in_d(int v) const;
  bool in_u(int v) const;
  std::vector<int> d_set() const;
  std::vector<int> u_set() const;

  /// Generators in word order: for an arc s_i -> s_j, s_i is written left of
  /// s_j; ties go to the smaller index.
  std::vector<int> coxeter_word() const;

  std::string to_string() const;
  bool operator==(const Orientation&) const = default;

 private:
  CoxeterType type_ = CoxeterType::B;
  std::size_t n_ = 0;
  std::vector<bool> forward_;
};

/// Pattern with per-position marks; perm is a permutation of 1..k.
struct AnnotatedPattern {
  enum class Mark { Plain, Barred, Underlined };
  std::vector<int> perm;
  std::vector<Mark> marks;

  /// "2b31", "312u": a value followed by b (barred) or u (underlined).
  static AnnotatedPattern parse(std::string_view text);
};

/// Barred values must lie in U, underlined values in D. Type B positions
/// range over the full one-line notation.
bool contains_pattern(const SignedPermutation& w, const AnnotatedPattern& p,
                      const Orientation& orient);

/// Weak order: group elements ordered by inclusion of inversion sets.
struct WeakOrder {
  CoxeterType type;
  std::size_t n;
  RootSystem roots;
  std::vector<SignedPermutation> elements;  // sorted by length, then window
  std::vector<RootSet> inversions;
  Lattice lattice;
  std::map<SignedPermutation, Elem> index;

  Elem find(const SignedPermutation& w) const;
  Elem identity() const { return lattice.bottom(); }
};

/// Caps: type A n <= 7, type B n <= 5 unless raised. Throws CapExceeded.
WeakOrder weak_order(CoxeterType type, std::size_t n, std::size_t cap_a = 7,
                     std::size_t cap_b = 5);

/// Avoiders of 2̄31 and 31̲2 (fiber bottoms) and of 2̄13 and 13̲2 (fiber tops).
std::vector<Elem> b_set(const WeakOrder& w, const Orientation& orient);
std::vector<Elem> t_set(const WeakOrder& w, const Orientation& orient);
/// Single-pattern variants (2̄31 only, 2̄13 only).
std::vector<Elem> b_set_one_pattern(const WeakOrder& w, const Orientation& orient);
std::vector<Elem> t_set_one_pattern(const WeakOrder& w, const Orientation& orient);

/// Product of the Coxeter word; type B only. Checks the cycle description
/// -n -> min D -> ... -> max D -> n -> max U -> ... -> min U -> -n and throws
/// CrossCheckFailed if it does not hold.
SignedPermutation coxeter_element(const Orientation& orient);

/// x_0 = e, ..., x_{n^2} = -1: prefixes of the word for c^n. Throws NotReduced
/// if some step is not a cover.
std::vector<SignedPermutation> xi_chain(const Orientation& orient);
/// Roots in the order they become inversions along the chain.
std::vector<Root> xi_root_order(const Orientation& orient);

struct Rank2System {
  enum class Kind { B2, A2Plain, A2Mixed };
  Kind kind;
  int i, j, k;              // k unused for B2
  std::vector<Root> roots;  // listed order

  std::string to_string() const;
};

/// Type B: all B2 (i<j), A2-plain (i<j<k), A2-mixed (i<j, k distinct).
/// Type A: A2-plain only.
std::vector<Rank2System> rank2_subsystems(CoxeterType type, std::size_t n);

/// The listed order or its reverse according to D/U membership.
std::vector<Root> gbar_order(const Rank2System& r, const Orientation& orient);

enum class Side { B, T };
/// B side: initial or just the last root; T side: initial or all but the first.
bool good_intersection(const RootSet& inv, const RootSystem& rs, const std::vector<Root>& order,
                       Side side);
bool good_intersection(const RootSet& inv, const RootSystem& rs, const Rank2System& r,
                       const Orientation& orient, Side side);

/// Initial or final in listed order for every rank 2 subsystem.
bool is_inversion_set(const RootSet& inv, const RootSystem& rs);
/// Throw NotAnInversionSet unless is_inversion_set.
bool is_b_inversion_set(const RootSet& inv, const RootSystem& rs, const Orientation& orient);
bool is_t_inversion_set(const RootSet& inv, const RootSystem& rs, const Orientation& orient);

std::string_view type_name(CoxeterType t);

}  // namespace trimlat
