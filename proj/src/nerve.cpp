#include "cyclotome/nerve.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>

#include "cyclotome/error.hpp"

namespace cyclotome {

// --- FiniteMonoid ----------------------------------------------------------------------

void FiniteMonoid::validate() const {
  const int n = static_cast<int>(elements.size());
  if (n == 0) throw InputError("monoid has no elements");
  if (static_cast<int>(table.size()) != n) throw InputError("monoid table must have one row per element");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw InputError("monoid table rows must have one entry per element");
    for (int v : row) {
      if (v < 0 || v >= n) throw InputError("monoid table entry out of range");
    }
  }
  if (identity < 0 || identity >= n) throw InputError("identity index out of range");
  for (int a = 0; a < n; ++a) {
    if (table[identity][a] != a || table[a][identity] != a) {
      throw InputError("unit law fails at element " + elements[a]);
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          throw InputError("associativity fails at (" + elements[a] + ", " + elements[b] + ", " + elements[c] + ")");
        }
      }
    }
  }
}

FiniteMonoid FiniteMonoid::trivial() { return FiniteMonoid{{"e"}, {{0}}, 0}; }

FiniteMonoid FiniteMonoid::cyclic(int n) {
  FiniteMonoid M;
  for (int i = 0; i < n; ++i) {
    M.elements.push_back(i == 0 ? "e" : "g" + std::to_string(i));
    std::vector<int> row;
    for (int j = 0; j < n; ++j) row.push_back((i + j) % n);
    M.table.push_back(row);
  }
  M.identity = 0;
  return M;
}

FiniteMonoid FiniteMonoid::symmetric3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  FiniteMonoid M;
  for (const auto& q : perms) M.elements.push_back(std::to_string(q[0]) + std::to_string(q[1]) + std::to_string(q[2]));
  for (const auto& a : perms) {
    std::vector<int> row;
    for (const auto& b : perms) {
      std::array<int, 3> ab{b[a[0]], b[a[1]], b[a[2]]};
      row.push_back(static_cast<int>(std::find(perms.begin(), perms.end(), ab) - perms.begin()));
    }
    M.table.push_back(row);
  }
  M.identity = 0;
  return M;
}

// --- FiniteCategory --------------------------------------------------------------------

void FiniteCategory::validate() const {
  const int A = static_cast<int>(arrows.size());
  const int O = static_cast<int>(objects.size());
  if (O == 0) throw InputError("category has no objects");
  if (static_cast<int>(source.size()) != A || static_cast<int>(target.size()) != A) {
    throw InputError("every arrow needs a source and a target");
  }
  for (int f = 0; f < A; ++f) {
    if (source[f] < 0 || source[f] >= O || target[f] < 0 || target[f] >= O) {
      throw InputError("arrow " + arrows[f] + " has an endpoint out of range");
    }
  }
  if (static_cast<int>(identities.size()) != O) throw InputError("need one identity arrow per object");
  for (int c = 0; c < O; ++c) {
    const int id = identities[c];
    if (id < 0 || id >= A || source[id] != c || target[id] != c) {
      throw InputError("identity of object " + objects[c] + " is not an endomorphism of it");
    }
  }
  if (static_cast<int>(compose.size()) != A) throw InputError("composition table needs one row per arrow");
  for (int f = 0; f < A; ++f) {
    if (static_cast<int>(compose[f].size()) != A) throw InputError("composition rows need one entry per arrow");
    for (int g = 0; g < A; ++g) {
      const int h = compose[f][g];
      if (target[f] != source[g]) {
        if (h != -1) throw InputError("non-composable pair (" + arrows[f] + ", " + arrows[g] + ") has a composite");
        continue;
      }
      if (h < 0 || h >= A) throw InputError("composite of (" + arrows[f] + ", " + arrows[g] + ") missing");
      if (source[h] != source[f] || target[h] != target[g]) {
        throw InputError("composite of (" + arrows[f] + ", " + arrows[g] + ") has wrong endpoints");
      }
    }
  }
  for (int f = 0; f < A; ++f) {
    if (compose[identities[source[f]]][f] != f || compose[f][identities[target[f]]] != f) {
      throw InputError("unit law fails at arrow " + arrows[f]);
    }
  }
  for (int f = 0; f < A; ++f) {
    for (int g = 0; g < A; ++g) {
      if (target[f] != source[g]) continue;
      for (int h = 0; h < A; ++h) {
        if (target[g] != source[h]) continue;
        if (compose[compose[f][g]][h] != compose[f][compose[g][h]]) {
          throw InputError("associativity fails at (" + arrows[f] + ", " + arrows[g] + ", " + arrows[h] + ")");
        }
      }
    }
  }
}

FiniteCategory FiniteCategory::from_monoid(const FiniteMonoid& M) {
  M.validate();
  FiniteCategory C;
  C.objects = {"*"};
  C.arrows = M.elements;
  C.source.assign(M.size(), 0);
  C.target.assign(M.size(), 0);
  C.identities = {M.identity};
  C.compose = M.table;
  return C;
}

FiniteCategory FiniteCategory::discrete(int n) {
  FiniteCategory C;
  for (int i = 0; i < n; ++i) {
    C.objects.push_back("c" + std::to_string(i));
    C.arrows.push_back("id" + std::to_string(i));
    C.source.push_back(i);
    C.target.push_back(i);
    C.identities.push_back(i);
  }
  C.compose.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
  for (int i = 0; i < n; ++i) C.compose[i][i] = i;
  return C;
}

// --- CyclicNerve -----------------------------------------------------------------------

CyclicNerve::CyclicNerve(FiniteCategory C, int truncation) : C_(std::move(C)), truncation_(truncation) {
  C_.validate();
  if (truncation < 0) throw InputError("truncation must be non-negative");
}

CyclicNerve::CyclicNerve(const FiniteMonoid& M, int truncation)
    : CyclicNerve(FiniteCategory::from_monoid(M), truncation) {}

void CyclicNerve::check_encodable(int n) const {
  require_level(n);
  const long double bits = (n + 1) * std::log2(static_cast<long double>(std::max<std::size_t>(C_.arrow_count(), 2)));
  if (bits >= 63.0L) {
    throw ResourceLimitError("nerve level " + std::to_string(n) + " does not fit 64-bit element ids");
  }
}

std::vector<int> CyclicNerve::decode(int n, ElementId x) const {
  const ElementId base = C_.arrow_count();
  std::vector<int> t(static_cast<std::size_t>(n) + 1);
  for (int i = n; i >= 0; --i) {
    t[static_cast<std::size_t>(i)] = static_cast<int>(x % base);
    x /= base;
  }
  return t;
}

ElementId CyclicNerve::encode(const std::vector<int>& tuple) const {
  const ElementId base = C_.arrow_count();
  ElementId x = 0;
  for (int a : tuple) x = x * base + static_cast<ElementId>(a);
  return x;
}

bool CyclicNerve::is_loop(const std::vector<int>& t) const {
  const std::size_t len = t.size();
  for (std::size_t i = 0; i < len; ++i) {
    if (t[i] < 0 || t[i] >= static_cast<int>(C_.arrow_count())) return false;
  }
  for (std::size_t i = 0; i < len; ++i) {
    if (C_.target[t[i]] != C_.source[t[(i + 1) % len]]) return false;
  }
  return true;
}

std::uint64_t CyclicNerve::level_size(int n) const {
  // trace of the (n+1)-st power of the object adjacency matrix
  const std::size_t O = C_.objects.size();
  using u128 = unsigned __int128;
  std::vector<std::vector<u128>> adj(O, std::vector<u128>(O, 0));
  for (std::size_t f = 0; f < C_.arrow_count(); ++f) adj[C_.source[f]][C_.target[f]] += 1;
  auto power = adj;
  const u128 cap = std::numeric_limits<std::uint64_t>::max();
  for (int k = 0; k < n; ++k) {
    std::vector<std::vector<u128>> next(O, std::vector<u128>(O, 0));
    for (std::size_t i = 0; i < O; ++i) {
      for (std::size_t j = 0; j < O; ++j) {
        u128 s = 0;
        for (std::size_t l = 0; l < O; ++l) s += power[i][l] * adj[l][j];
        next[i][j] = std::min(s, cap);
      }
    }
    power = std::move(next);
  }
  u128 tr = 0;
  for (std::size_t i = 0; i < O; ++i) tr += power[i][i];
  return static_cast<std::uint64_t>(std::min(tr, cap));
}

std::vector<ElementId> CyclicNerve::elements(int n) const {
  check_encodable(n);
  const std::size_t A = C_.arrow_count();
  std::vector<ElementId> out;
  std::vector<int> t(static_cast<std::size_t>(n) + 1, 0);
  // depth-first in lexicographic order of (a_0, ..., a_n)
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == t.size()) {
      if (C_.target[t.back()] == C_.source[t.front()]) out.push_back(encode(t));
      return;
    }
    for (std::size_t a = 0; a < A; ++a) {
      if (pos > 0 && C_.target[t[pos - 1]] != C_.source[a]) continue;
      t[pos] = static_cast<int>(a);
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return out;
}

bool CyclicNerve::contains(int n, ElementId x) const {
  if (!has_level(n)) return false;
  const long double bits = (n + 1) * std::log2(static_cast<long double>(std::max<std::size_t>(C_.arrow_count(), 2)));
  if (bits >= 63.0L) return false;
  long double bound = std::pow(static_cast<long double>(C_.arrow_count()), n + 1);
  if (static_cast<long double>(x) >= bound) return false;
  return is_loop(decode(n, x));
}

ElementId CyclicNerve::face(int n, int i, ElementId x) const {
  auto t = decode(n, x);
  std::vector<int> out;
  out.reserve(t.size() - 1);
  if (i < n) {
    for (int k = 0; k < i; ++k) out.push_back(t[k]);
    out.push_back(C_.compose[t[i]][t[i + 1]]);
    for (int k = i + 2; k <= n; ++k) out.push_back(t[k]);
  } else {
    out.push_back(C_.compose[t[n]][t[0]]);
    for (int k = 1; k < n; ++k) out.push_back(t[k]);
  }
  return encode(out);
}

ElementId CyclicNerve::degeneracy(int n, int i, ElementId x) const {
  auto t = decode(n, x);
  t.insert(t.begin() + i + 1, C_.identities[C_.target[t[i]]]);
  return encode(t);
}

ElementId CyclicNerve::cycle(int n, ElementId x) const {
  auto t = decode(n, x);
  std::rotate(t.rbegin(), t.rbegin() + 1, t.rend());
  return encode(t);
}

ElementId CyclicNerve::cycle_inverse(int n, ElementId x) const {
  auto t = decode(n, x);
  std::rotate(t.begin(), t.begin() + 1, t.end());
  return encode(t);
}

std::string CyclicNerve::describe(int n, ElementId x) const {
  auto t = decode(n, x);
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + C_.arrows[t[i]];
  return s + ")";
}

ElementId CyclicNerve::act_direct(const LambdaMor& f, ElementId x) const {
  const int k = f.source;
  const int n = f.target;
  const auto a = decode(n, x);
  const auto slot = [n](std::int64_t v) { return static_cast<std::size_t>(floor_mod(v, n + 1)); };
  std::vector<int> out(static_cast<std::size_t>(k) + 1);
  for (int j = 0; j <= k; ++j) {
    const std::int64_t from = f.eval(j - 1);
    const std::int64_t to = f.eval(j);
    if (from == to) {
      out[static_cast<std::size_t>(j)] = C_.identities[C_.target[a[slot(to)]]];
      continue;
    }
    int acc = a[slot(from + 1)];
    for (std::int64_t y = from + 1; y < to; ++y) acc = C_.compose[acc][a[slot(y + 1)]];
    out[static_cast<std::size_t>(j)] = acc;
  }
  return encode(out);
}

std::vector<ElementId> CyclicNerve::fixed_by_cycle_power(int n, int power, std::size_t cap) const {
  check_encodable(n);
  const int len = n + 1;
  // t^power sends slot j to slot j + power; a fixed tuple is constant on the
  // orbits of that slot permutation.
  std::vector<int> rep(static_cast<std::size_t>(len));
  std::iota(rep.begin(), rep.end(), 0);
  const int g = std::gcd(len, static_cast<int>(floor_mod(power, len)));
  for (int j = 0; j < len; ++j) rep[static_cast<std::size_t>(j)] = j % g;
  std::vector<int> t(static_cast<std::size_t>(len), -1);
  std::vector<ElementId> out;
  const std::size_t A = C_.arrow_count();
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == len) {
      if (C_.target[t[static_cast<std::size_t>(len) - 1]] != C_.source[t[0]]) return;
      const ElementId x = encode(t);
      ElementId y = x;
      for (int k = 0; k < power; ++k) y = cycle(n, y);
      if (y == x) {
        if (out.size() >= cap) throw ResourceLimitError("fixed-point set exceeds cap");
        out.push_back(x);
      }
      return;
    }
    const int r = rep[static_cast<std::size_t>(pos)];
    if (r < pos) {
      t[static_cast<std::size_t>(pos)] = t[static_cast<std::size_t>(r)];
      if (pos > 0 && C_.target[t[static_cast<std::size_t>(pos) - 1]] != C_.source[t[static_cast<std::size_t>(pos)]]) return;
      self(self, pos + 1);
      return;
    }
    for (std::size_t a = 0; a < A; ++a) {
      if (pos > 0 && C_.target[t[static_cast<std::size_t>(pos) - 1]] != C_.source[a]) continue;
      t[static_cast<std::size_t>(pos)] = static_cast<int>(a);
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return out;
}

ElementId CyclicNerve::repeat(int n, ElementId x, int r) const {
  const auto t = decode(n, x);
  std::vector<int> out;
  out.reserve(t.size() * static_cast<std::size_t>(r));
  for (int k = 0; k < r; ++k) out.insert(out.end(), t.begin(), t.end());
  return encode(out);
}

}  // namespace cyclotome
