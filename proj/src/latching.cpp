#include "cyclotome/latching.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "cyclotome/error.hpp"

namespace cyclotome {

namespace {

std::vector<ElementId> sorted_unique(std::vector<ElementId> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<ElementId> intersect(const std::vector<ElementId>& a, const std::vector<ElementId>& b) {
  std::vector<ElementId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string mask_string(std::uint32_t s, int n) {
  std::string out = "{";
  for (int i = 0; i <= n; ++i) {
    if (s & (1u << i)) {
      if (out.size() > 1) out += ",";
      out += std::to_string(i);
    }
  }
  return out + "}";
}

}  // namespace

LambdaMor rounding_down(int n, std::uint32_t subset) {
  if (n < 0 || n > 30) throw InputError("rounding down needs 0 <= n <= 30");
  const std::uint32_t full = (1u << (n + 1)) - 1;
  if (subset == 0 || (subset & ~full) != 0) throw InputError("rounding down needs a non-empty subset of {0..n}");
  const int k = std::popcount(subset);
  std::vector<std::int64_t> s;
  int seen = 0;
  for (int x = 0; x <= n; ++x) {
    if (subset & (1u << x)) ++seen;
    s.push_back(seen - 1);
  }
  s.push_back(s.front() + k);
  return normal_form(n, k - 1, s);
}

LambdaMor collapse_onto_predecessor(int n, int i) {
  if (i < 0 || i > n) throw InputError("collapse index out of range");
  std::vector<std::int64_t> s;
  for (int x = 0; x <= n; ++x) s.push_back(x == i ? x - 1 : x);
  s.push_back(s.front() + n + 1);
  return normal_form(n, n, s);
}

std::vector<ElementId> x_minus_one(const CyclicSet& X) {
  X.require_level(1);
  std::vector<ElementId> out;
  for (ElementId x : X.elements(0)) {
    if (X.degeneracy(0, 0, x) == X.extra_degeneracy(0, x)) out.push_back(x);
  }
  return out;
}

LatchingData latching(const CyclicSet& X, int n) {
  if (n < 0) throw InputError("latching level must be non-negative");
  X.require_level(std::max(n, 1));
  LatchingData D;
  D.n = n;
  D.x_minus_one = x_minus_one(X);
  if (n == 0) {
    D.cyclic = D.x_minus_one;
  } else {
    std::vector<ElementId> simp, cyc;
    for (ElementId y : X.elements(n - 1)) {
      for (int i = 0; i < n; ++i) simp.push_back(X.degeneracy(n - 1, i, y));
      cyc.push_back(X.extra_degeneracy(n - 1, y));
    }
    D.simplicial = sorted_unique(simp);
    cyc.insert(cyc.end(), D.simplicial.begin(), D.simplicial.end());
    D.cyclic = sorted_unique(cyc);
  }

  const std::uint32_t full = (1u << (n + 1)) - 1;
  const LambdaMor to_top = LambdaMor::from_delta(DeltaMor::terminal(n));
  for (std::uint32_t S = 0; S < full; ++S) {
    LatchingData::CubeEntry e;
    e.subset = S;
    if (S == 0) {
      for (ElementId x : D.x_minus_one) e.elements.push_back(act(X, to_top, x));
    } else {
      const LambdaMor rho = rounding_down(n, S);
      for (ElementId y : X.elements(rho.target)) e.elements.push_back(act(X, rho, y));
    }
    e.elements = sorted_unique(std::move(e.elements));
    D.cube.push_back(std::move(e));
  }
  return D;
}

CheckResult check_latching(const CyclicSet& X, int n) {
  CheckResult res;
  const LatchingData D = latching(X, n);
  res.evidence["level"] = n;
  res.evidence["level_size"] = X.level_size(n);
  res.evidence["simplicial_latching"] = D.simplicial.size();
  res.evidence["cyclic_latching"] = D.cyclic.size();
  res.evidence["x_minus_one"] = D.x_minus_one.size();

  res.expect(std::includes(D.cyclic.begin(), D.cyclic.end(), D.simplicial.begin(), D.simplicial.end()),
             "L_n is not contained in L_n^cyc");

  // t-closure of L_n (for n = 0 the closure starts from X_{-1}, which t fixes).
  std::set<ElementId> closure(D.simplicial.begin(), D.simplicial.end());
  if (n == 0) closure.insert(D.x_minus_one.begin(), D.x_minus_one.end());
  std::vector<ElementId> frontier(closure.begin(), closure.end());
  while (!frontier.empty()) {
    const ElementId x = frontier.back();
    frontier.pop_back();
    const ElementId y = X.cycle(n, x);
    if (closure.insert(y).second) frontier.push_back(y);
  }
  res.expect(std::vector<ElementId>(closure.begin(), closure.end()) == D.cyclic,
             "the t-closure of L_n differs from L_n^cyc");

  const auto& cube = D.cube;
  for (const auto& a : cube) {
    for (const auto& b : cube) {
      if (b.subset <= a.subset) continue;
      res.expect(intersect(a.elements, b.elements) == cube[a.subset & b.subset].elements,
                 "X_S cap X_T != X_{S cap T} for S = " + mask_string(a.subset, n) +
                     ", T = " + mask_string(b.subset, n));
    }
  }

  // Colimit of the cube by gluing each (S, x) to (T, x) for S inside T.
  std::vector<std::size_t> offset(cube.size() + 1, 0);
  for (std::size_t s = 0; s < cube.size(); ++s) offset[s + 1] = offset[s] + cube[s].elements.size();
  std::vector<std::size_t> parent(offset.back());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&parent](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t s = 0; s < cube.size(); ++s) {
    for (std::size_t t = 0; t < cube.size(); ++t) {
      if (s == t || (cube[s].subset & ~cube[t].subset) != 0) continue;
      for (std::size_t j = 0; j < cube[s].elements.size(); ++j) {
        const auto& te = cube[t].elements;
        auto it = std::lower_bound(te.begin(), te.end(), cube[s].elements[j]);
        if (it == te.end() || *it != cube[s].elements[j]) {
          res.fail("cube map X_S -> X_T is not an inclusion");
          continue;
        }
        const std::size_t u = find(offset[s] + j);
        const std::size_t v = find(offset[t] + static_cast<std::size_t>(it - te.begin()));
        if (u != v) parent[std::max(u, v)] = std::min(u, v);
      }
    }
  }
  std::size_t classes = 0;
  for (std::size_t x = 0; x < parent.size(); ++x) classes += find(x) == x;

  std::vector<ElementId> all, with_zero;
  for (const auto& e : cube) {
    all.insert(all.end(), e.elements.begin(), e.elements.end());
    if (e.subset & 1u) with_zero.insert(with_zero.end(), e.elements.begin(), e.elements.end());
  }
  all = sorted_unique(std::move(all));
  with_zero = sorted_unique(std::move(with_zero));
  res.evidence["cube_colimit"] = classes;
  res.expect(classes == all.size(), "the colimit of the cube is not its union");
  res.expect(all == D.cyclic, "the union of the cube differs from L_n^cyc");
  if (n > 0) res.expect(with_zero == D.simplicial, "the subsets containing 0 do not give L_n");

  // X_S is the set of points fixed by every collapse map D_i with i outside S.
  // At n = 0 the only collapse map is tau_0 = id, so this applies from n = 1.
  if (n == 0) return res;
  const auto level = X.elements(n);
  std::vector<std::vector<ElementId>> collapsed(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    const LambdaMor Di = collapse_onto_predecessor(n, i);
    for (ElementId x : level) collapsed[static_cast<std::size_t>(i)].push_back(act(X, Di, x));
  }
  for (const auto& e : cube) {
    std::vector<ElementId> fixed;
    for (std::size_t idx = 0; idx < level.size(); ++idx) {
      bool ok = true;
      for (int i = 0; i <= n && ok; ++i) {
        if (!(e.subset & (1u << i))) ok = collapsed[static_cast<std::size_t>(i)][idx] == level[idx];
      }
      if (ok) fixed.push_back(level[idx]);
    }
    res.expect(fixed == e.elements, "X_S is not the fixed set of the collapse maps for S = " + mask_string(e.subset, n));
  }
  return res;
}

}  // namespace cyclotome
