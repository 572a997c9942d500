#include "cyclotome/colimit.hpp"

#include <algorithm>
#include <numeric>

#include "cyclotome/error.hpp"

namespace cyclotome {

void CyclicPresentation::validate() const {
  if (cell_dims.empty()) throw InputError("a presentation needs at least one cell");
  for (int d : cell_dims) {
    if (d < 0) throw InputError("cell dimensions must be non-negative");
  }
  const int cells = static_cast<int>(cell_dims.size());
  for (std::size_t r = 0; r < relations.size(); ++r) {
    const auto& rel = relations[r];
    const std::string where = "relation " + std::to_string(r);
    if (rel.left_cell < 0 || rel.left_cell >= cells || rel.right_cell < 0 || rel.right_cell >= cells) {
      throw InputError(where + ": cell index out of range");
    }
    rel.left.validate();
    rel.right.validate();
    if (rel.left.source != rel.right.source) throw InputError(where + ": the two sides start at different levels");
    if (rel.left.target != cell_dims[static_cast<std::size_t>(rel.left_cell)] ||
        rel.right.target != cell_dims[static_cast<std::size_t>(rel.right_cell)]) {
      throw InputError(where + ": morphism does not land in its cell");
    }
  }
}

int CyclicPresentation::max_dim() const { return *std::max_element(cell_dims.begin(), cell_dims.end()); }

CyclicPresentation CyclicPresentation::representable(int n) { return {{n}, {}}; }

CyclicPresentation CyclicPresentation::point() {
  auto pts = enumerate_lambda(1, 0);
  CyclicPresentation P{{0}, {}};
  P.relations.push_back({0, pts[0], 0, pts[1]});
  return P;
}

CyclicPresentation CyclicPresentation::random(std::mt19937_64& rng, int max_cells, int max_dim,
                                              int max_relations) {
  auto uniform = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  CyclicPresentation P;
  const int cells = uniform(1, std::max(1, max_cells));
  for (int j = 0; j < cells; ++j) P.cell_dims.push_back(uniform(0, max_dim));
  const int rels = uniform(0, max_relations);
  for (int k = 0; k < rels; ++k) {
    const int a = uniform(0, cells - 1);
    const int b = uniform(0, cells - 1);
    const int p = uniform(0, 1);
    auto left = enumerate_lambda(p, P.cell_dims[static_cast<std::size_t>(a)]);
    auto right = enumerate_lambda(p, P.cell_dims[static_cast<std::size_t>(b)]);
    const auto& u = left[static_cast<std::size_t>(uniform(0, static_cast<int>(left.size()) - 1))];
    const auto& v = right[static_cast<std::size_t>(uniform(0, static_cast<int>(right.size()) - 1))];
    P.relations.push_back({a, u, b, v});
  }
  return P;
}

ColimitCyclicSet::ColimitCyclicSet(CyclicPresentation P, int truncation, std::size_t cap)
    : P_(std::move(P)), truncation_(truncation), cap_(cap) {
  P_.validate();
  if (truncation < 0) throw InputError("truncation must be non-negative");
  for (int d : P_.cell_dims) cells_.push_back(std::make_unique<RepresentableCyclicSet>(d, truncation, cap));
}

const ColimitCyclicSet::Level& ColimitCyclicSet::level(int k) const {
  require_level(k);
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(k);
    if (it != cache_.end()) return *it->second;
  }
  auto L = std::make_unique<Level>();
  std::size_t total = 0;
  for (const auto& c : cells_) {
    L->offsets.push_back(total);
    total += static_cast<std::size_t>(c->level_size(k));
    if (total > cap_) throw ResourceLimitError("colimit level " + std::to_string(k) + " exceeds the cap");
  }

  std::vector<std::size_t> parent(total);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&parent](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const auto& rel : P_.relations) {
    const int p = rel.left.source;
    const auto& A = *cells_[static_cast<std::size_t>(rel.left_cell)];
    const auto& B = *cells_[static_cast<std::size_t>(rel.right_cell)];
    for (const auto& h : enumerate_lambda(k, p, cap_)) {
      std::size_t x = L->offsets[static_cast<std::size_t>(rel.left_cell)] + A.id_of(compose(rel.left, h));
      std::size_t y = L->offsets[static_cast<std::size_t>(rel.right_cell)] + B.id_of(compose(rel.right, h));
      x = find(x);
      y = find(y);
      if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
  }

  L->class_of.resize(total);
  std::vector<ElementId> class_of_root(total, ~ElementId{0});
  for (std::size_t x = 0; x < total; ++x) {
    const std::size_t root = find(x);
    if (class_of_root[root] == ~ElementId{0}) {
      class_of_root[root] = L->representative.size();
      L->representative.push_back(x);
    }
    L->class_of[x] = class_of_root[root];
  }

  std::lock_guard lock(mutex_);
  return *cache_.emplace(k, std::move(L)).first->second;
}

std::uint64_t ColimitCyclicSet::level_size(int k) const { return level(k).representative.size(); }

std::vector<ElementId> ColimitCyclicSet::elements(int k) const {
  std::vector<ElementId> v(level(k).representative.size());
  std::iota(v.begin(), v.end(), ElementId{0});
  return v;
}

bool ColimitCyclicSet::contains(int k, ElementId x) const { return has_level(k) && x < level_size(k); }

ElementId ColimitCyclicSet::apply(int k, ElementId x, const LambdaMor& g) const {
  const Level& L = level(k);
  if (x >= L.representative.size()) throw InputError("element id out of range");
  const std::size_t u = L.representative[x];
  const auto cell = static_cast<std::size_t>(
      std::upper_bound(L.offsets.begin(), L.offsets.end(), u) - L.offsets.begin() - 1);
  const ElementId local = cells_[cell]->precompose(g, u - L.offsets[cell]);
  const Level& M = level(g.source);
  return M.class_of[M.offsets[cell] + local];
}

ElementId ColimitCyclicSet::face(int k, int i, ElementId x) const { return apply(k, x, LambdaMor::coface(k, i)); }

ElementId ColimitCyclicSet::degeneracy(int k, int i, ElementId x) const {
  return apply(k, x, LambdaMor::codegeneracy(k, i));
}

ElementId ColimitCyclicSet::cycle(int k, ElementId x) const { return apply(k, x, LambdaMor::cycle(k)); }

std::string ColimitCyclicSet::describe(int k, ElementId x) const {
  const Level& L = level(k);
  const std::size_t u = L.representative.at(x);
  const auto cell = static_cast<std::size_t>(
      std::upper_bound(L.offsets.begin(), L.offsets.end(), u) - L.offsets.begin() - 1);
  return "[" + std::to_string(cell) + "]" + cells_[cell]->describe(k, u - L.offsets[cell]);
}

}  // namespace cyclotome
