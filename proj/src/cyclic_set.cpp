#include "cyclotome/cyclic_set.hpp"

#include <algorithm>

#include "cyclotome/error.hpp"

namespace cyclotome {

std::string SimplicialSet::describe(int, ElementId x) const { return "#" + std::to_string(x); }

void SimplicialSet::require_level(int n) const {
  if (!has_level(n)) {
    throw GeneratorExhausted("level " + std::to_string(n) + " is outside the truncation window 0.." +
                             std::to_string(truncation()) + " and no lazy generator is available");
  }
}

bool SimplicialSet::is_degenerate(int n, ElementId x) const {
  for (int i = 0; i < n; ++i) {
    if (degeneracy(n - 1, i, face(n, i, x)) == x) return true;
  }
  return false;
}

ElementId CyclicSet::cycle_inverse(int n, ElementId x) const {
  for (int k = 0; k < n; ++k) x = cycle(n, x);
  return x;
}

std::vector<ElementId> CyclicSet::fixed_by_cycle_power(int n, int power, std::size_t cap) const {
  if (level_size(n) > cap) {
    throw ResourceLimitError("level " + std::to_string(n) + " has " + std::to_string(level_size(n)) +
                             " elements, cap is " + std::to_string(cap));
  }
  std::vector<ElementId> out;
  for (ElementId x : elements(n)) {
    ElementId y = x;
    for (int k = 0; k < power; ++k) y = cycle(n, y);
    if (y == x) out.push_back(x);
  }
  return out;
}

ElementId CyclicSet::extra_degeneracy(int n, ElementId x) const {
  return act(*this, LambdaMor::extra_codegeneracy(n), x);
}

ElementId act(const CyclicSet& X, const GeneratorWord& word, ElementId x) {
  X.require_level(word.target);
  for (auto it = word.atoms.rbegin(); it != word.atoms.rend(); ++it) {
    const Generator& a = *it;
    switch (a.kind) {
      case Generator::Kind::Face: x = X.face(a.target, a.index, x); break;
      case Generator::Kind::Degeneracy: x = X.degeneracy(a.target, a.index, x); break;
      case Generator::Kind::Cycle: x = X.cycle(a.target, x); break;
      case Generator::Kind::CycleInverse: x = X.cycle_inverse(a.target, x); break;
    }
  }
  return x;
}

ElementId act(const CyclicSet& X, const LambdaMor& f, ElementId x) {
  return act(X, to_generator_word(f), x);
}

// --- TableCyclicSet --------------------------------------------------------------------

TableCyclicSet::TableCyclicSet(std::string name, std::vector<Level> levels)
    : name_(std::move(name)), levels_(std::move(levels)) {
  if (levels_.empty()) throw InputError("a cyclic set needs at least level 0");
  for (std::size_t n = 0; n < levels_.size(); ++n) {
    const auto& L = levels_[n];
    if (L.cycle.size() != L.size) throw InputError("cycle table has the wrong size at level " + std::to_string(n));
    if (n > 0) {
      if (L.faces.size() != n + 1 || L.degeneracies.size() != n) {
        throw InputError("operator count mismatch at level " + std::to_string(n));
      }
      for (const auto& f : L.faces) {
        if (f.size() != L.size) throw InputError("face table has the wrong size");
        for (auto y : f) {
          if (y >= levels_[n - 1].size) throw InputError("face value out of range");
        }
      }
      for (const auto& s : L.degeneracies) {
        if (s.size() != levels_[n - 1].size) throw InputError("degeneracy table has the wrong size");
        for (auto y : s) {
          if (y >= L.size) throw InputError("degeneracy value out of range");
        }
      }
    }
    for (auto y : L.cycle) {
      if (y >= L.size) throw InputError("cycle value out of range");
    }
  }
}

const TableCyclicSet::Level& TableCyclicSet::level(int n) const {
  require_level(n);
  return levels_[static_cast<std::size_t>(n)];
}

std::uint64_t TableCyclicSet::level_size(int n) const { return level(n).size; }

std::vector<ElementId> TableCyclicSet::elements(int n) const {
  std::vector<ElementId> v(level(n).size);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
  return v;
}

bool TableCyclicSet::contains(int n, ElementId x) const { return has_level(n) && x < level(n).size; }

ElementId TableCyclicSet::face(int n, int i, ElementId x) const { return level(n).faces[static_cast<std::size_t>(i)][x]; }

ElementId TableCyclicSet::degeneracy(int n, int i, ElementId x) const {
  return level(n + 1).degeneracies[static_cast<std::size_t>(i)][x];
}

ElementId TableCyclicSet::cycle(int n, ElementId x) const { return level(n).cycle[x]; }

std::string TableCyclicSet::describe(int n, ElementId x) const {
  const auto& L = level(n);
  if (x < L.labels.size()) return L.labels[x];
  return SimplicialSet::describe(n, x);
}

std::shared_ptr<TableCyclicSet> materialize(const CyclicSet& X, int N, std::size_t cap) {
  std::vector<TableCyclicSet::Level> levels;
  std::vector<std::vector<ElementId>> ids;
  auto index_of = [&](int n, ElementId x) -> ElementId {
    const auto& v = ids[static_cast<std::size_t>(n)];
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it == v.end() || *it != x) throw InputError("operator leaves the level");
    return static_cast<ElementId>(it - v.begin());
  };
  for (int n = 0; n <= N; ++n) {
    X.require_level(n);
    if (X.level_size(n) > cap) throw ResourceLimitError("level too large to materialize");
    ids.push_back(X.elements(n));
    const auto& cur = ids.back();
    TableCyclicSet::Level L;
    L.size = cur.size();
    for (auto x : cur) {
      L.cycle.push_back(index_of(n, X.cycle(n, x)));
      L.labels.push_back(X.describe(n, x));
    }
    if (n > 0) {
      L.faces.resize(static_cast<std::size_t>(n) + 1);
      for (int i = 0; i <= n; ++i) {
        for (auto x : cur) L.faces[static_cast<std::size_t>(i)].push_back(index_of(n - 1, X.face(n, i, x)));
      }
      L.degeneracies.resize(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        for (auto y : ids[static_cast<std::size_t>(n) - 1]) {
          L.degeneracies[static_cast<std::size_t>(i)].push_back(index_of(n, X.degeneracy(n - 1, i, y)));
        }
      }
    }
    levels.push_back(std::move(L));
  }
  return std::make_shared<TableCyclicSet>("materialized", std::move(levels));
}

// --- PointCyclicSet --------------------------------------------------------------------

std::vector<ElementId> PointCyclicSet::elements(int n) const {
  require_level(n);
  return {0};
}

// --- RepresentableCyclicSet ------------------------------------------------------------

RepresentableCyclicSet::RepresentableCyclicSet(int n, int truncation, std::size_t cap)
    : n_(n), truncation_(truncation), cap_(cap) {
  if (n < 0 || truncation < 0) throw InputError("representable needs non-negative levels");
}

const RepresentableCyclicSet::Level& RepresentableCyclicSet::level(int k) const {
  require_level(k);
  std::lock_guard lock(mutex_);
  auto it = cache_.find(k);
  if (it != cache_.end()) return *it->second;
  auto L = std::make_unique<Level>();
  L->morphisms = enumerate_lambda(k, n_, cap_);
  for (std::size_t i = 0; i < L->morphisms.size(); ++i) L->index.emplace(L->morphisms[i], i);
  return *cache_.emplace(k, std::move(L)).first->second;
}

std::uint64_t RepresentableCyclicSet::level_size(int k) const { return count_lambda(k, n_); }

std::vector<ElementId> RepresentableCyclicSet::elements(int k) const {
  std::vector<ElementId> v(level(k).morphisms.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
  return v;
}

bool RepresentableCyclicSet::contains(int k, ElementId x) const { return has_level(k) && x < level_size(k); }

const LambdaMor& RepresentableCyclicSet::morphism(int k, ElementId x) const {
  const auto& L = level(k);
  if (x >= L.morphisms.size()) throw InputError("element id out of range");
  return L.morphisms[x];
}

ElementId RepresentableCyclicSet::id_of(const LambdaMor& f) const {
  if (f.target != n_) throw InputError("morphism does not land in [" + std::to_string(n_) + "]");
  const auto& L = level(f.source);
  auto it = L.index.find(f);
  if (it == L.index.end()) throw InputError("morphism is not in normal form");
  return it->second;
}

ElementId RepresentableCyclicSet::precompose(const LambdaMor& g, ElementId x) const {
  return id_of(compose(morphism(g.target, x), g));
}

ElementId RepresentableCyclicSet::face(int k, int i, ElementId x) const {
  return precompose(LambdaMor::coface(k, i), x);
}

ElementId RepresentableCyclicSet::degeneracy(int k, int i, ElementId x) const {
  return precompose(LambdaMor::codegeneracy(k, i), x);
}

ElementId RepresentableCyclicSet::cycle(int k, ElementId x) const { return precompose(LambdaMor::cycle(k), x); }

std::string RepresentableCyclicSet::describe(int k, ElementId x) const { return to_string(morphism(k, x)); }

}  // namespace cyclotome
