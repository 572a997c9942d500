#include "cyclotome/subdivision.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cyclotome/error.hpp"

namespace cyclotome {

namespace {

std::string at(int k, ElementId x) { return "level " + std::to_string(k) + ", element " + std::to_string(x); }

}  // namespace

// --- Subdivision -----------------------------------------------------------------------

Subdivision::Subdivision(std::shared_ptr<const CyclicSet> X, int r, int truncation)
    : X_(std::move(X)), r_(r), truncation_(truncation) {
  if (r < 1) throw InputError("subdivision needs r >= 1");
  if (truncation < 0) throw InputError("truncation must be non-negative");
  X_->require_level(source_level(truncation));
}

ElementId Subdivision::act_cached(const LambdaMor& f, ElementId x) const {
  const GeneratorWord* w = nullptr;
  {
    std::lock_guard lock(mutex_);
    auto it = words_.find(f);
    if (it == words_.end()) it = words_.emplace(f, to_generator_word(f)).first;
    w = &it->second;
  }
  return act(*X_, *w, x);
}

ElementId Subdivision::face(int k, int i, ElementId x) const {
  require_level(k);
  return act_cached(LambdaMor::from_delta(sd_on_morphism(r_, DeltaMor::coface(k, i))), x);
}

ElementId Subdivision::degeneracy(int k, int i, ElementId x) const {
  require_level(k + 1);
  return act_cached(LambdaMor::from_delta(sd_on_morphism(r_, DeltaMor::codegeneracy(k, i))), x);
}

ElementId Subdivision::act_rcyclic(const RCyclicMor& f, ElementId x) const {
  if (f.r != r_) throw InputError("morphism belongs to a different r-cyclic category");
  require_level(f.target);
  return act_cached(as_lambda_morphism(f), x);
}

ElementId Subdivision::group_generator(int k, ElementId x) const {
  return act_rcyclic(rcyclic_group_generator(r_, k), x);
}

// --- FixedPointCyclicSet ---------------------------------------------------------------

FixedPointCyclicSet::FixedPointCyclicSet(std::shared_ptr<const CyclicSet> X, int r, int truncation, int sheet,
                                         std::size_t cap)
    : X_(std::move(X)), r_(r), truncation_(truncation), sheet_(sheet), cap_(cap) {
  if (r < 1) throw InputError("fixed points need r >= 1");
  if (truncation < 0) throw InputError("truncation must be non-negative");
}

const std::vector<ElementId>& FixedPointCyclicSet::level(int k) const {
  require_level(k);
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(k);
    if (it != cache_.end()) return it->second;
  }
  auto v = X_->fixed_by_cycle_power(source_level(k), k + 1, cap_);
  std::sort(v.begin(), v.end());
  std::lock_guard lock(mutex_);
  return cache_.emplace(k, std::move(v)).first->second;
}

bool FixedPointCyclicSet::contains(int k, ElementId x) const {
  if (!has_level(k) || !X_->contains(source_level(k), x)) return false;
  ElementId y = x;
  for (int j = 0; j <= k; ++j) y = X_->cycle(source_level(k), y);
  return y == x;
}

ElementId FixedPointCyclicSet::act_via_sheet(const LambdaMor& g, ElementId x, int sheet) const {
  return act(*X_, as_lambda_morphism(lift_to_rcyclic(g, r_, sheet)), x);
}

ElementId FixedPointCyclicSet::face(int k, int i, ElementId x) const {
  return act_via_sheet(LambdaMor::coface(k, i), x, sheet_);
}

ElementId FixedPointCyclicSet::degeneracy(int k, int i, ElementId x) const {
  return act_via_sheet(LambdaMor::codegeneracy(k, i), x, sheet_);
}

ElementId FixedPointCyclicSet::cycle(int k, ElementId x) const {
  if (sheet_ == 0) return X_->cycle(source_level(k), x);  // the sheet-0 lift of tau_k is tau
  return act_via_sheet(LambdaMor::cycle(k), x, sheet_);
}

std::vector<ElementId> FixedPointCyclicSet::fixed_by_cycle_power(int k, int power, std::size_t cap) const {
  if (sheet_ != 0) return CyclicSet::fixed_by_cycle_power(k, power, cap);
  // Here t acts as t on X_{r(k+1)-1}, whose order is r(k+1); being fixed by
  // t^{k+1} and t^power amounts to being fixed by t^gcd.
  const int g = std::gcd(k + 1, static_cast<int>(floor_mod(power, r_ * (k + 1))));
  auto v = X_->fixed_by_cycle_power(source_level(k), g == 0 ? k + 1 : g, cap);
  std::sort(v.begin(), v.end());
  return v;
}

// --- checks ----------------------------------------------------------------------------

CheckResult check_fixed_point_action(const FixedPointCyclicSet& F, int N) {
  CheckResult res;
  std::uint64_t checked = 0;
  for (int k = 0; k <= N; ++k) {
    for (ElementId x : F.elements(k)) {
      std::vector<std::pair<LambdaMor, int>> gens;  // morphism, level of the result
      for (int i = 0; k > 0 && i <= k; ++i) gens.emplace_back(LambdaMor::coface(k, i), k - 1);
      for (int i = 0; k < N && i <= k; ++i) gens.emplace_back(LambdaMor::codegeneracy(k, i), k + 1);
      gens.emplace_back(LambdaMor::cycle(k), k);
      for (const auto& [g, target_level] : gens) {
        const ElementId a = F.act_via_sheet(g, x, 0);
        const ElementId b = F.act_via_sheet(g, x, std::min(1, F.r() - 1));
        res.expect(a == b, "sheets disagree on " + to_string(g) + " at " + at(k, x));
        res.expect(F.contains(target_level, a), to_string(g) + " leaves the fixed points at " + at(k, x));
        ++checked;
      }
    }
  }
  res.evidence["actions_checked"] = checked;
  return res;
}

CheckResult check_subdivision_group_action(const Subdivision& S, int N) {
  CheckResult res;
  std::uint64_t checked = 0;
  for (int k = 0; k <= N; ++k) {
    for (ElementId x : S.elements(k)) {
      ElementId y = x;
      for (int j = 0; j < S.r(); ++j) y = S.group_generator(k, y);
      res.expect(y == x, "C_r generator does not have order dividing r at " + at(k, x));
      const ElementId gx = S.group_generator(k, x);
      for (int i = 0; k > 0 && i <= k; ++i) {
        res.expect(S.face(k, i, gx) == S.group_generator(k - 1, S.face(k, i, x)),
                   "face " + std::to_string(i) + " is not equivariant at " + at(k, x));
      }
      for (int i = 0; k < N && i <= k; ++i) {
        res.expect(S.degeneracy(k, i, gx) == S.group_generator(k + 1, S.degeneracy(k, i, x)),
                   "degeneracy " + std::to_string(i) + " is not equivariant at " + at(k, x));
      }
      ++checked;
    }
  }
  res.evidence["elements_checked"] = checked;
  return res;
}

CheckResult check_gamma(std::shared_ptr<const CyclicNerve> X, int r, int N) {
  CheckResult res;
  FixedPointCyclicSet F(X, r, N);
  auto gamma = [&](int k, ElementId x) { return X->repeat(k, x, r); };
  nlohmann::ordered_json sizes = nlohmann::ordered_json::array();
  for (int k = 0; k <= N; ++k) {
    const auto dom = X->elements(k);
    const auto& cod = F.elements(k);
    std::vector<ElementId> img;
    img.reserve(dom.size());
    for (ElementId x : dom) img.push_back(gamma(k, x));
    std::vector<ElementId> sorted = img;
    std::sort(sorted.begin(), sorted.end());
    const bool injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    res.expect(injective, "gamma is not injective at level " + std::to_string(k));
    res.expect(sorted == cod, "gamma is not onto the fixed points at level " + std::to_string(k));
    sizes.push_back({{"level", k}, {"source", dom.size()}, {"fixed_points", cod.size()}});

    for (std::size_t idx = 0; idx < dom.size(); ++idx) {
      const ElementId x = dom[idx];
      const ElementId gx = img[idx];
      for (int i = 0; k > 0 && i <= k; ++i) {
        res.expect(gamma(k - 1, X->face(k, i, x)) == F.face(k, i, gx),
                   "gamma does not commute with d_" + std::to_string(i) + " at " + at(k, x));
      }
      for (int i = 0; k < N && i <= k; ++i) {
        res.expect(gamma(k + 1, X->degeneracy(k, i, x)) == F.degeneracy(k, i, gx),
                   "gamma does not commute with s_" + std::to_string(i) + " at " + at(k, x));
      }
      res.expect(gamma(k, X->cycle(k, x)) == F.cycle(k, gx), "gamma does not commute with t at " + at(k, x));
    }
  }
  res.evidence["r"] = r;
  res.evidence["levels"] = sizes;
  return res;
}

namespace {

/// All elements of X_k if there are at most `sample` of them, otherwise a
/// seeded random sample of composable loops.
std::vector<ElementId> elements_or_sample(const CyclicNerve& X, int k, std::size_t sample, std::mt19937_64& rng) {
  if (X.level_size(k) <= sample) return X.elements(k);
  const auto& C = X.category();
  std::uniform_int_distribution<int> pick(0, static_cast<int>(C.arrow_count()) - 1);
  std::set<ElementId> out;
  std::size_t tries = 0;
  std::vector<int> t(static_cast<std::size_t>(k) + 1);
  while (out.size() < sample && tries++ < 64 * sample) {
    for (auto& a : t) a = pick(rng);
    if (X.is_loop(t)) out.insert(X.encode(t));
  }
  return {out.begin(), out.end()};
}

}  // namespace

CheckResult check_cyclotomic_compatibility(std::shared_ptr<const CyclicNerve> X, int m, int n, int N,
                                           std::uint64_t seed, std::size_t sample) {
  CheckResult res;
  std::mt19937_64 rng(seed);
  FixedPointCyclicSet A(X, m * n, N);
  auto inner = std::make_shared<FixedPointCyclicSet>(X, n, m * (N + 2));
  FixedPointCyclicSet B(inner, m, N);
  std::uint64_t square_checked = 0, equivariance_checked = 0, actions_checked = 0;

  for (int k = 0; k <= N; ++k) {
    const auto& a = A.elements(k);
    const auto b = B.elements(k);
    res.expect(a == b, "the identification fails on underlying sets at level " + std::to_string(k));

    // Both sides carry the same Lambda-action.
    std::size_t per_level = 0;
    for (ElementId y : a) {
      if (per_level++ >= sample) break;
      for (int i = 0; k > 0 && i <= k; ++i) {
        res.expect(A.face(k, i, y) == B.face(k, i, y), "faces disagree at " + at(k, y));
      }
      for (int i = 0; k < N && i <= k; ++i) {
        res.expect(A.degeneracy(k, i, y) == B.degeneracy(k, i, y), "degeneracies disagree at " + at(k, y));
      }
      res.expect(A.cycle(k, y) == B.cycle(k, y), "cycle maps disagree at " + at(k, y));
      ++actions_checked;
    }

    // it o gamma_{mn} = gamma_n o gamma_m, elementwise.
    const int mk = m * (k + 1) - 1;
    for (ElementId x : elements_or_sample(*X, k, sample, rng)) {
      const ElementId left = X->repeat(k, x, m * n);
      const ElementId right = X->repeat(mk, X->repeat(k, x, m), n);
      res.expect(left == right, "the square fails at " + at(k, x));
      res.expect(B.contains(k, right), "gamma_n o gamma_m leaves the iterated fixed points at " + at(k, x));
      ++square_checked;
    }

    // gamma_n, applied on sd_m, commutes with the C_m generator.
    for (ElementId y : elements_or_sample(*X, mk, sample, rng)) {
      ElementId gy = y;
      for (int j = 0; j <= k; ++j) gy = X->cycle(mk, gy);
      ElementId lhs = X->repeat(mk, gy, n);
      ElementId rhs = X->repeat(mk, y, n);
      for (int j = 0; j <= k; ++j) rhs = inner->cycle(mk, rhs);
      res.expect(lhs == rhs, "gamma_n is not C_m-equivariant at " + at(mk, y));
      ++equivariance_checked;
    }
  }
  res.evidence["m"] = m;
  res.evidence["n"] = n;
  res.evidence["max_level"] = N;
  res.evidence["square_checks"] = square_checked;
  res.evidence["action_checks"] = actions_checked;
  res.evidence["equivariance_checks"] = equivariance_checked;
  return res;
}

}  // namespace cyclotome
