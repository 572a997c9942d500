#include "cyclotome/algebra.hpp"

#include <algorithm>
#include <map>

#include "cyclotome/error.hpp"

namespace cyclotome {

namespace {

using Vec = std::map<int, mpq_class>;

void accumulate(Vec& v, int k, const mpq_class& c) {
  auto& x = v[k];
  x += c;
  if (x == 0) v.erase(k);
}

}  // namespace

bool GradedAlgebra::connective_gap() const {
  for (std::size_t i = 0; i < dim(); ++i) {
    if (static_cast<int>(i) != unit && degrees[i] < 2) return false;
  }
  return true;
}

void GradedAlgebra::add_product(int i, int j, int k, const mpq_class& c) {
  const auto n = static_cast<int>(dim());
  if (i < 0 || j < 0 || k < 0 || i >= n || j >= n || k >= n) throw InputError("product index out of range");
  if (mult.size() != dim()) mult.assign(dim(), std::vector<std::vector<Term>>(dim()));
  auto& terms = mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  auto it = std::lower_bound(terms.begin(), terms.end(), k, [](const Term& t, int key) { return t.first < key; });
  if (it != terms.end() && it->first == k) {
    it->second = field.reduce(it->second + c);
    if (it->second == 0) terms.erase(it);
  } else {
    const mpq_class r = field.reduce(c);
    if (r != 0) terms.insert(it, {k, r});
  }
}

void GradedAlgebra::validate() const {
  const std::size_t n = dim();
  if (n == 0) throw InputError("algebra has an empty basis");
  if (degrees.size() != n) throw InputError("one degree per basis element is required");
  if (field.kind == Ring::Kind::Z) throw InputError("algebras are defined over Q or F_p");
  if (unit < 0 || static_cast<std::size_t>(unit) >= n) throw InputError("unit index out of range");
  if (degrees[static_cast<std::size_t>(unit)] != 0) throw InputError("the unit must have degree 0");
  for (int d : degrees) {
    if (d < 0) throw InputError("internal degrees must be non-negative");
  }
  if (mult.size() != n) throw InputError("multiplication table has the wrong size");
  auto name = [this](std::size_t i) { return names[i]; };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [k, c] : mult[i][j]) {
        if (degrees[static_cast<std::size_t>(k)] != degrees[i] + degrees[j]) {
          throw InputError("degree violation: " + name(i) + " * " + name(j) + " has a term in " +
                           name(static_cast<std::size_t>(k)));
        }
      }
    }
    const Vec expect{{static_cast<int>(i), mpq_class(1)}};
    const auto& left = mult[static_cast<std::size_t>(unit)][i];
    const auto& right = mult[i][static_cast<std::size_t>(unit)];
    if (Vec(left.begin(), left.end()) != expect || Vec(right.begin(), right.end()) != expect) {
      throw InputError("unit law fails for " + name(i));
    }
  }
  auto product = [&](const Vec& v, std::size_t j, bool left_factor) {
    Vec out;
    for (const auto& [a, c] : v) {
      const auto& terms = left_factor ? mult[j][static_cast<std::size_t>(a)] : mult[static_cast<std::size_t>(a)][j];
      for (const auto& [k, d] : terms) accumulate(out, k, field.reduce(c * d));
    }
    return out;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vec ij(mult[i][j].begin(), mult[i][j].end());
      for (std::size_t k = 0; k < n; ++k) {
        const Vec left = product(ij, k, false);  // (e_i e_j) e_k
        const Vec jk(mult[j][k].begin(), mult[j][k].end());
        const Vec right = product(jk, i, true);  // e_i (e_j e_k)
        if (left != right) {
          throw InputError("not associative on (" + name(i) + ", " + name(j) + ", " + name(k) + ")");
        }
      }
    }
  }
  if (commutative) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const int sign = (degrees[i] % 2 != 0 && degrees[j] % 2 != 0) ? -1 : 1;
        Vec a(mult[i][j].begin(), mult[i][j].end());
        Vec b;
        for (const auto& [k, c] : mult[j][i]) accumulate(b, k, field.reduce(sign * c));
        if (a != b) throw InputError("not graded-commutative on (" + name(i) + ", " + name(j) + ")");
      }
    }
  }
}

GradedAlgebra GradedAlgebra::ground_field(const Ring& field) {
  GradedAlgebra A;
  A.field = field;
  A.names = {"1"};
  A.degrees = {0};
  A.commutative = true;
  A.add_product(0, 0, 0, 1);
  return A;
}

GradedAlgebra GradedAlgebra::monoid_algebra(const FiniteMonoid& M, const Ring& field) {
  M.validate();
  GradedAlgebra A;
  A.field = field;
  A.names = M.elements;
  A.degrees.assign(M.size(), 0);
  A.unit = M.identity;
  A.commutative = true;
  for (std::size_t a = 0; a < M.size(); ++a) {
    for (std::size_t b = 0; b < M.size(); ++b) {
      A.add_product(static_cast<int>(a), static_cast<int>(b), M.table[a][b], 1);
      if (M.table[a][b] != M.table[b][a]) A.commutative = false;
    }
  }
  return A;
}

GradedAlgebra GradedAlgebra::exterior(int degree, const Ring& field) {
  if (degree <= 0 || degree % 2 == 0) throw InputError("the exterior generator needs positive odd degree");
  return square_zero(degree, field);
}

GradedAlgebra GradedAlgebra::square_zero(int degree, const Ring& field) {
  if (degree <= 0) throw InputError("the generator needs positive degree");
  GradedAlgebra A;
  A.field = field;
  A.names = {"1", "x"};
  A.degrees = {0, degree};
  A.commutative = true;
  A.add_product(0, 0, 0, 1);
  A.add_product(0, 1, 1, 1);
  A.add_product(1, 0, 1, 1);
  return A;
}

GradedAlgebra GradedAlgebra::sphere_model(int n, bool odd) {
  if (n < 1) throw InputError("sphere models need n >= 1");
  return odd ? exterior(2 * n + 1) : square_zero(2 * n);
}

}  // namespace cyclotome
