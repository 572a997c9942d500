#pragma once

// Set-valued simplicial and cyclic objects, truncated or lazily generated.
//
// Elements carry stable 64-bit ids.  Operators follow the contravariant
// convention: face(n, i, x) is the action of d^i : [n-1] -> [n] on x in X_n,
// degeneracy(n, i, x) the action of s^i : [n+1] -> [n], cycle(n, x) the action
// of tau_n.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cyclotome/lambda.hpp"

namespace cyclotome {

using ElementId = std::uint64_t;

/// Default cap on the number of elements materialized for one level.
inline constexpr std::size_t kDefaultElementCap = 2'000'000;

class SimplicialSet {
 public:
  virtual ~SimplicialSet() = default;

  /// Declared truncation window 0..truncation().
  virtual int truncation() const = 0;
  /// True when levels beyond the truncation can be generated on demand.
  virtual bool lazy() const = 0;

  /// Number of elements at level n (saturating for huge implicit levels).
  virtual std::uint64_t level_size(int n) const = 0;
  /// Sorted element ids at level n.
  virtual std::vector<ElementId> elements(int n) const = 0;
  virtual bool contains(int n, ElementId x) const = 0;

  virtual ElementId face(int n, int i, ElementId x) const = 0;
  virtual ElementId degeneracy(int n, int i, ElementId x) const = 0;

  virtual std::string describe(int n, ElementId x) const;

  /// Throws GeneratorExhausted if level n is unavailable.
  void require_level(int n) const;
  bool has_level(int n) const { return n >= 0 && (n <= truncation() || lazy()); }

  /// x is in the image of some s_i with i < n (uses x = s_i d_i x).
  bool is_degenerate(int n, ElementId x) const;
};

class CyclicSet : public SimplicialSet {
 public:
  virtual ElementId cycle(int n, ElementId x) const = 0;
  virtual ElementId cycle_inverse(int n, ElementId x) const;

  /// Elements of X_n fixed by t_n^power.  The default enumerates the level.
  virtual std::vector<ElementId> fixed_by_cycle_power(int n, int power,
                                                      std::size_t cap = kDefaultElementCap) const;

  /// Action of the extra degeneracy s^{n+1} : [n+1] -> [n], i.e. t^{-1} s_0.
  ElementId extra_degeneracy(int n, ElementId x) const;
};

/// Action of a Lambda-morphism f : [k] -> [n] on x in X_n, through the
/// canonical generator word of f.
ElementId act(const CyclicSet& X, const LambdaMor& f, ElementId x);
/// Same, through an explicitly supplied factorization.
ElementId act(const CyclicSet& X, const GeneratorWord& word, ElementId x);

/// Explicit per-level tables; ids are 0..size-1.
class TableCyclicSet final : public CyclicSet {
 public:
  struct Level {
    std::size_t size = 0;
    std::vector<std::vector<ElementId>> faces;         // faces[i][x] in level n-1
    std::vector<std::vector<ElementId>> degeneracies;  // s_i : X_{n-1} -> X_n, stored at level n
    std::vector<ElementId> cycle;
    std::vector<std::string> labels;
  };

  TableCyclicSet(std::string name, std::vector<Level> levels);

  int truncation() const override { return static_cast<int>(levels_.size()) - 1; }
  bool lazy() const override { return false; }
  std::uint64_t level_size(int n) const override;
  std::vector<ElementId> elements(int n) const override;
  bool contains(int n, ElementId x) const override;
  ElementId face(int n, int i, ElementId x) const override;
  ElementId degeneracy(int n, int i, ElementId x) const override;
  ElementId cycle(int n, ElementId x) const override;
  std::string describe(int n, ElementId x) const override;

  const Level& level(int n) const;
  const std::string& name() const { return name_; }

 private:
  std::string name_;
  std::vector<Level> levels_;
};

/// Copies levels 0..N of X into explicit tables with no lazy generator.
std::shared_ptr<TableCyclicSet> materialize(const CyclicSet& X, int N,
                                            std::size_t cap = kDefaultElementCap);

/// The constant one-point cyclic set (lazy).
class PointCyclicSet final : public CyclicSet {
 public:
  explicit PointCyclicSet(int truncation = 0) : truncation_(truncation) {}
  int truncation() const override { return truncation_; }
  bool lazy() const override { return true; }
  std::uint64_t level_size(int) const override { return 1; }
  std::vector<ElementId> elements(int n) const override;
  bool contains(int n, ElementId x) const override { return n >= 0 && x == 0; }
  ElementId face(int, int, ElementId) const override { return 0; }
  ElementId degeneracy(int, int, ElementId) const override { return 0; }
  ElementId cycle(int, ElementId) const override { return 0; }

 private:
  int truncation_;
};

/// Lambda[n] = Lambda(-, [n]); level k is Lambda([k],[n]) in canonical order,
/// acted on by precomposition.
class RepresentableCyclicSet final : public CyclicSet {
 public:
  RepresentableCyclicSet(int n, int truncation, std::size_t cap = kDefaultMorphismCap);

  int truncation() const override { return truncation_; }
  bool lazy() const override { return true; }
  std::uint64_t level_size(int k) const override;
  std::vector<ElementId> elements(int k) const override;
  bool contains(int k, ElementId x) const override;
  ElementId face(int k, int i, ElementId x) const override;
  ElementId degeneracy(int k, int i, ElementId x) const override;
  ElementId cycle(int k, ElementId x) const override;
  std::string describe(int k, ElementId x) const override;

  int simplex_level() const { return n_; }
  const LambdaMor& morphism(int k, ElementId x) const;
  ElementId id_of(const LambdaMor& f) const;
  /// Precomposition x |-> x o g for g : [j] -> [k].
  ElementId precompose(const LambdaMor& g, ElementId x) const;

 private:
  struct Level {
    std::vector<LambdaMor> morphisms;
    std::map<LambdaMor, ElementId> index;
  };
  const Level& level(int k) const;

  int n_;
  int truncation_;
  std::size_t cap_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::unique_ptr<Level>> cache_;
};

}  // namespace cyclotome
