#pragma once

#include <string>
#include <vector>

#include "cyclotome/cyclic_set.hpp"

namespace cyclotome {

/// Finite monoid given by its multiplication table; table[a][b] = a * b.
struct FiniteMonoid {
  std::vector<std::string> elements;
  std::vector<std::vector<int>> table;
  int identity = 0;

  std::size_t size() const { return elements.size(); }
  /// Checks closure, unit laws and associativity on all triples.
  void validate() const;

  static FiniteMonoid trivial();
  static FiniteMonoid cyclic(int n);
  /// S_3 acting on {0,1,2}; the product a * b applies a first, then b.
  static FiniteMonoid symmetric3();
};

/// Finite category.  compose[f][g] is "f then g" (g o f) when target(f) ==
/// source(g), and -1 otherwise.
struct FiniteCategory {
  std::vector<std::string> objects;
  std::vector<std::string> arrows;
  std::vector<int> source;
  std::vector<int> target;
  std::vector<int> identities;  // one arrow per object
  std::vector<std::vector<int>> compose;

  std::size_t arrow_count() const { return arrows.size(); }
  void validate() const;

  static FiniteCategory from_monoid(const FiniteMonoid& M);
  /// The discrete category on n objects.
  static FiniteCategory discrete(int n);
};

/// Cyclic nerve.  Level n is the set of composable loops (a_0, ..., a_n) with
/// target(a_i) = source(a_{i+1}) and target(a_n) = source(a_0); a_0 is the
/// closing arrow.  The operators are
///   d_i = (.., a_i a_{i+1}, ..)            0 <= i < n
///   d_n = (a_n a_0, a_1, .., a_{n-1})
///   s_i = (a_0, .., a_i, id, a_{i+1}, ..)
///   t_n = (a_n, a_0, .., a_{n-1})
/// Ids are the base-|arrows| encodings of the tuples with a_0 most significant.
class CyclicNerve final : public CyclicSet {
 public:
  CyclicNerve(FiniteCategory C, int truncation);
  CyclicNerve(const FiniteMonoid& M, int truncation);

  int truncation() const override { return truncation_; }
  bool lazy() const override { return true; }
  std::uint64_t level_size(int n) const override;
  std::vector<ElementId> elements(int n) const override;
  bool contains(int n, ElementId x) const override;
  ElementId face(int n, int i, ElementId x) const override;
  ElementId degeneracy(int n, int i, ElementId x) const override;
  ElementId cycle(int n, ElementId x) const override;
  ElementId cycle_inverse(int n, ElementId x) const override;
  std::string describe(int n, ElementId x) const override;

  /// Fixed points of t^power, enumerated over the slot orbits of the rotation
  /// instead of the whole level.
  std::vector<ElementId> fixed_by_cycle_power(int n, int power,
                                              std::size_t cap = kDefaultElementCap) const override;

  /// Action of f : [k] -> [n] computed directly from the function model: the
  /// slot of each arrow j-1 -> j of [k] receives the product of the slots
  /// crossed by F(j-1) -> F(j), or an identity when F(j-1) = F(j).
  ElementId act_direct(const LambdaMor& f, ElementId x) const;

  std::vector<int> decode(int n, ElementId x) const;
  ElementId encode(const std::vector<int>& tuple) const;
  /// True if the tuple is a composable loop.
  bool is_loop(const std::vector<int>& tuple) const;
  const FiniteCategory& category() const { return C_; }

  /// The r-fold repetition of a level-n loop, an element of level r(n+1)-1.
  ElementId repeat(int n, ElementId x, int r) const;

 private:
  void check_encodable(int n) const;

  FiniteCategory C_;
  int truncation_;
};

}  // namespace cyclotome
