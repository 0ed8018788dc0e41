// Shared generators and brute-force oracles for the test suites.
#pragma once

#include <functional>
#include <random>
#include <set>
#include <vector>

#include "nilalg/catalog.hpp"
#include "nilalg/linalg.hpp"

namespace testsupport {

using namespace nilalg;

struct Rng {
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  std::mt19937_64 gen;

  int below(int n) { return static_cast<int>(std::uniform_int_distribution<int>(0, n - 1)(gen)); }
  Elem elem(const Field& f) { return static_cast<Elem>(below(f.q())); }
  Elem nonzero(const Field& f) { return static_cast<Elem>(1 + below(f.q() - 1)); }
  Vec vec(const Field& f, int n) {
    Vec v(n);
    for (auto& x : v) x = elem(f);
    return v;
  }
  Matrix matrix(const Field& f, int r, int c) {
    Matrix m(f, r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m(i, j) = elem(f);
    return m;
  }
  Matrix invertible(const Field& f, int n) {
    while (true) {
      Matrix m = matrix(f, n, n);
      if (rank(m) == n) return m;
    }
  }
  Subspace subspace(const Field& f, int d, int s) {
    while (true) {
      std::vector<Vec> rows;
      for (int i = 0; i < s; ++i) rows.push_back(vec(f, d));
      Subspace w = Subspace::span(f, d, rows);
      if (w.dim() == s) return w;
    }
  }
};

/// Calls visit on every vector of F^n in odometer order.
inline void for_each_vector(const Field& f, int n, const std::function<void(const Vec&)>& visit) {
  Vec v(n, 0);
  while (true) {
    visit(v);
    int k = n - 1;
    while (k >= 0 && v[k] + 1 == f.q()) v[k--] = 0;
    if (k < 0) return;
    ++v[k];
  }
}

/// Every n x n matrix over f.
inline void for_each_matrix(const Field& f, int n, const std::function<void(const Matrix&)>& visit) {
  for_each_vector(f, n * n, [&](const Vec& v) { visit(Matrix::unflatten(f, n, v)); });
}

/// GL_n(F) by exhaustive scan.
inline std::vector<Matrix> brute_gl(const Field& f, int n) {
  std::vector<Matrix> out;
  for_each_matrix(f, n, [&](const Matrix& m) {
    if (rank(m) == n) out.push_back(m);
  });
  return out;
}

/// Product of x and y straight from the structure constants.
inline Vec raw_product(const Algebra& a, const Vec& x, const Vec& y) {
  const Field& f = a.field();
  const int n = a.dim();
  Vec out(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Elem xy = f.mul(x[i], y[j]);
      if (xy == 0) continue;
      for (int k = 0; k < n; ++k) out[k] = f.add(out[k], f.mul(xy, a.constant(i, j, k)));
    }
  return out;
}

/// Column-wise image P x.
inline Vec image_of(const Matrix& p, const Vec& x) {
  const Field& f = p.field();
  Vec out(p.rows(), 0);
  for (int r = 0; r < p.rows(); ++r)
    for (int c = 0; c < p.cols(); ++c) out[r] = f.add(out[r], f.mul(p(r, c), x[c]));
  return out;
}

inline Vec unit(int n, int i) {
  Vec e(n, 0);
  e[i] = 1;
  return e;
}

/// P(e_i e_j) = P(e_i) P(e_j) for all basis pairs, evaluated directly.
inline bool brute_is_hom(const Algebra& a, const Algebra& b, const Matrix& p) {
  const int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (image_of(p, raw_product(a, unit(n, i), unit(n, j))) !=
          raw_product(b, image_of(p, unit(n, i)), image_of(p, unit(n, j))))
        return false;
  return true;
}

/// Isomorphism by scanning a precomputed GL_n.
inline bool brute_isomorphic(const Algebra& a, const Algebra& b, const std::vector<Matrix>& gl) {
  if (a.dim() != b.dim()) return false;
  for (const Matrix& p : gl)
    if (brute_is_hom(a, b, p)) return true;
  return false;
}

/// Number of oracle classes among the algebras, using brute_isomorphic.
inline int brute_class_count(const std::vector<Algebra>& algs, const std::vector<Matrix>& gl) {
  std::vector<const Algebra*> reps;
  for (const auto& a : algs) {
    bool found = false;
    for (const Algebra* r : reps)
      if (brute_isomorphic(*r, a, gl)) {
        found = true;
        break;
      }
    if (!found) reps.push_back(&a);
  }
  return static_cast<int>(reps.size());
}

/// Set of all vectors of a subspace spanned by rows; independent of RREF.
inline std::set<Vec> brute_span(const Field& f, int d, const std::vector<Vec>& rows) {
  std::set<Vec> out;
  for_each_vector(f, static_cast<int>(rows.size()), [&](const Vec& c) {
    Vec v(d, 0);
    for (size_t t = 0; t < rows.size(); ++t)
      for (int k = 0; k < d; ++k) v[k] = f.add(v[k], f.mul(c[t], rows[t][k]));
    out.insert(v);
  });
  return out;
}

/// v with v T = 0 and T v^T = 0 for every T.
inline bool brute_in_radical(const Field& f, const std::vector<Matrix>& thetas, const Vec& v) {
  const int n = static_cast<int>(v.size());
  for (const Matrix& t : thetas)
    for (int j = 0; j < n; ++j) {
      Elem left = 0, right = 0;
      for (int i = 0; i < n; ++i) {
        left = f.add(left, f.mul(v[i], t(i, j)));
        right = f.add(right, f.mul(t(j, i), v[i]));
      }
      if (left != 0 || right != 0) return false;
    }
  return true;
}

/// All catalog instances of dims 1..4 over f (every admissible parameter).
inline std::vector<CatalogInstance> all_catalog(const Field& f) {
  std::vector<CatalogInstance> out;
  for (int d = 1; d <= 4; ++d)
    for (auto& inst : catalog_instances(f, d)) out.push_back(std::move(inst));
  return out;
}

/// One instance per catalog name, first admissible parameters.
inline std::vector<CatalogInstance> catalog_sample(const Field& f) {
  std::vector<CatalogInstance> out;
  std::set<std::string> seen;
  for (auto& inst : all_catalog(f))
    if (seen.insert(inst.name).second) out.push_back(std::move(inst));
  return out;
}

}  // namespace testsupport
