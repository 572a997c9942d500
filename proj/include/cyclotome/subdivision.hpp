#pragma once

// Edgewise subdivision, fixed points of the C_r-action and the diagonal maps
// gamma_r for cyclic nerves.

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <vector>

#include "cyclotome/check.hpp"
#include "cyclotome/cyclic_set.hpp"
#include "cyclotome/nerve.hpp"

namespace cyclotome {

/// sd_r X: level k is X_{r(k+1)-1}, with ids shared with X.  The Lambda_r
/// action goes through the functions themselves; faces and degeneracies are
/// sd_r of the Delta generators.  Only the simplicial part is exposed through
/// the SimplicialSet interface, since sd_r X is r-cyclic rather than cyclic.
class Subdivision final : public SimplicialSet {
 public:
  Subdivision(std::shared_ptr<const CyclicSet> X, int r, int truncation);

  int truncation() const override { return truncation_; }
  bool lazy() const override { return X_->lazy(); }
  std::uint64_t level_size(int k) const override { return X_->level_size(source_level(k)); }
  std::vector<ElementId> elements(int k) const override { return X_->elements(source_level(k)); }
  bool contains(int k, ElementId x) const override { return X_->contains(source_level(k), x); }
  ElementId face(int k, int i, ElementId x) const override;
  ElementId degeneracy(int k, int i, ElementId x) const override;
  std::string describe(int k, ElementId x) const override { return X_->describe(source_level(k), x); }

  int r() const { return r_; }
  int source_level(int k) const { return r_ * (k + 1) - 1; }
  const CyclicSet& base() const { return *X_; }

  /// Action of f : [m] -> [n] in Lambda_r on level n.
  ElementId act_rcyclic(const RCyclicMor& f, ElementId x) const;
  /// The C_r generator t_{r(k+1)-1}^{k+1} on level k.
  ElementId group_generator(int k, ElementId x) const;

 private:
  ElementId act_cached(const LambdaMor& f, ElementId x) const;

  std::shared_ptr<const CyclicSet> X_;
  int r_;
  int truncation_;
  mutable std::mutex mutex_;
  mutable std::map<LambdaMor, GeneratorWord> words_;
};

/// (sd_r X)^{C_r}: level k consists of the elements of X_{r(k+1)-1} fixed by
/// t^{k+1}.  A Lambda-morphism acts through its P_r-preimage on a chosen sheet.
class FixedPointCyclicSet final : public CyclicSet {
 public:
  FixedPointCyclicSet(std::shared_ptr<const CyclicSet> X, int r, int truncation, int sheet = 0,
                      std::size_t cap = kDefaultElementCap);

  int truncation() const override { return truncation_; }
  bool lazy() const override { return X_->lazy(); }
  std::uint64_t level_size(int k) const override { return level(k).size(); }
  std::vector<ElementId> elements(int k) const override { return level(k); }
  bool contains(int k, ElementId x) const override;
  ElementId face(int k, int i, ElementId x) const override;
  ElementId degeneracy(int k, int i, ElementId x) const override;
  ElementId cycle(int k, ElementId x) const override;
  std::string describe(int k, ElementId x) const override { return X_->describe(source_level(k), x); }
  std::vector<ElementId> fixed_by_cycle_power(int k, int power,
                                              std::size_t cap = kDefaultElementCap) const override;

  int r() const { return r_; }
  int source_level(int k) const { return r_ * (k + 1) - 1; }
  const CyclicSet& base() const { return *X_; }
  /// Action of g : [j] -> [k] through the preimage on the given sheet.
  ElementId act_via_sheet(const LambdaMor& g, ElementId x, int sheet) const;

 private:
  const std::vector<ElementId>& level(int k) const;

  std::shared_ptr<const CyclicSet> X_;
  int r_;
  int truncation_;
  int sheet_;
  std::size_t cap_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::vector<ElementId>> cache_;
};

// --- verification --------------------------------------------------------------------

/// Well-definedness of the P_r-factorization: the Lambda-action through
/// preimages on sheets 0 and 1 agrees on all generators of levels <= N.
CheckResult check_fixed_point_action(const FixedPointCyclicSet& F, int N);

/// The C_r action on sd_r X has order dividing r and commutes with the Lambda_r
/// generator actions (faces and degeneracies), levels <= N.
CheckResult check_subdivision_group_action(const Subdivision& S, int N);

/// gamma_r : N^cyc -> (sd_r N^cyc)^{C_r} is a bijection at every level <= N and
/// commutes with all faces, degeneracies (into level <= N) and the cycle map.
CheckResult check_gamma(std::shared_ptr<const CyclicNerve> X, int r, int N);

/// Elementwise check of the square it o gamma_{mn} = gamma_n o gamma_m, where
/// it identifies (sd_{mn} X)^{C_{mn}} with (sd_m (sd_n X)^{C_n})^{C_m}, plus
/// the C_m-equivariance of gamma_n after subdivision.  Large levels are sampled.
CheckResult check_cyclotomic_compatibility(std::shared_ptr<const CyclicNerve> X, int m, int n, int N,
                                           std::uint64_t seed = 0, std::size_t sample = 4096);

}  // namespace cyclotome
