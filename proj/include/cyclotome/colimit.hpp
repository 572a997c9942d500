#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <vector>

#include "cyclotome/cyclic_set.hpp"

namespace cyclotome {

/// A finite colimit of representables: a coproduct of cells Lambda[n_j]
/// modulo relations (a, u) ~ (b, v) with u : [p] -> [n_a], v : [p] -> [n_b].
/// Each relation is the pushout along Lambda[p] => Lambda[n_a], Lambda[n_b].
struct CyclicPresentation {
  struct Relation {
    int left_cell = 0;
    LambdaMor left;
    int right_cell = 0;
    LambdaMor right;
  };
  std::vector<int> cell_dims;
  std::vector<Relation> relations;

  void validate() const;
  int max_dim() const;

  static CyclicPresentation representable(int n);
  /// Lambda[0] with both points of level 1 identified; presents the point.
  static CyclicPresentation point();
  /// Random presentation: 1..max_cells cells of dimension <= max_dim and up to
  /// max_relations pushouts along Lambda[0] or Lambda[1].
  static CyclicPresentation random(std::mt19937_64& rng, int max_cells = 3, int max_dim = 2,
                                   int max_relations = 3);
};

/// Levelwise colimit: X_k = (disjoint union of Lambda([k],[n_j])) / ~, where ~
/// is generated by (a, u h) ~ (b, v h) for every relation and every h.
/// Element ids are class indices ordered by their least representative.
class ColimitCyclicSet final : public CyclicSet {
 public:
  ColimitCyclicSet(CyclicPresentation P, int truncation, std::size_t cap = kDefaultMorphismCap);

  int truncation() const override { return truncation_; }
  bool lazy() const override { return true; }
  std::uint64_t level_size(int k) const override;
  std::vector<ElementId> elements(int k) const override;
  bool contains(int k, ElementId x) const override;
  ElementId face(int k, int i, ElementId x) const override;
  ElementId degeneracy(int k, int i, ElementId x) const override;
  ElementId cycle(int k, ElementId x) const override;
  std::string describe(int k, ElementId x) const override;

  const CyclicPresentation& presentation() const { return P_; }
  /// Every level above this one is degenerate: a cell Lambda[n] has
  /// non-degenerate simplices only up to level n + 1.
  int top_nondegenerate_bound() const { return P_.max_dim() + 1; }

 private:
  struct Level {
    // offsets[j] = index of the first element of cell j in the disjoint union
    std::vector<std::size_t> offsets;
    std::vector<ElementId> class_of;        // union element -> class id
    std::vector<std::size_t> representative;  // class id -> least union element
  };
  const Level& level(int k) const;
  ElementId apply(int k, ElementId x, const LambdaMor& g) const;

  CyclicPresentation P_;
  int truncation_;
  std::size_t cap_;
  std::vector<std::unique_ptr<RepresentableCyclicSet>> cells_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::unique_ptr<Level>> cache_;
};

}  // namespace cyclotome
