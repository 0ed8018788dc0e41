#include "nilalg/algebra.hpp"

#include <sstream>

namespace nilalg {

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "e" + std::to_string(i));
  return out;
}

Algebra::Algebra(Field f, int n, std::vector<std::string> labels)
    : Algebra(f, n, std::vector<Elem>(static_cast<size_t>(n) * n * n, 0), std::move(labels)) {}

Algebra::Algebra(Field f, int n, std::vector<Elem> constants, std::vector<std::string> labels)
    : field_(std::move(f)), n_(n), sc_(std::move(constants)), labels_(std::move(labels)) {
  if (n < 0) throw InputError("negative algebra dimension");
  if (sc_.size() != static_cast<size_t>(n) * n * n) throw InputError("structure constant tensor has wrong size");
  for (Elem x : sc_) field_.checked(x);
  if (labels_.empty()) labels_ = default_labels(n);
  if (static_cast<int>(labels_.size()) != n) throw InputError("label count does not match dimension");
}

Algebra Algebra::from_products(const Field& f, int n, const std::vector<Product>& products,
                               std::vector<std::string> labels) {
  std::vector<Elem> sc(static_cast<size_t>(n) * n * n, 0);
  for (const auto& p : products) {
    if (p.i < 0 || p.i >= n || p.j < 0 || p.j >= n) throw InputError("product index out of range");
    if (static_cast<int>(p.value.size()) != n) throw InputError("product vector has wrong length");
    for (int k = 0; k < n; ++k) sc[(static_cast<size_t>(p.i) * n + p.j) * n + k] = p.value[k];
  }
  return Algebra(f, n, std::move(sc), std::move(labels));
}

Vec Algebra::basis_product(int i, int j) const {
  const size_t off = (static_cast<size_t>(i) * n_ + j) * n_;
  return Vec(sc_.begin() + off, sc_.begin() + off + n_);
}

Vec Algebra::multiply(const Vec& x, const Vec& y) const {
  if (static_cast<int>(x.size()) != n_ || static_cast<int>(y.size()) != n_) throw InputError("operand length mismatch");
  Vec out(n_, 0);
  for (int i = 0; i < n_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < n_; ++j) {
      if (y[j] == 0) continue;
      const Elem s = field_.mul(x[i], y[j]);
      const size_t off = (static_cast<size_t>(i) * n_ + j) * n_;
      for (int k = 0; k < n_; ++k) out[k] = field_.add(out[k], field_.mul(s, sc_[off + k]));
    }
  }
  return out;
}

bool Algebra::is_zero_algebra() const {
  for (Elem x : sc_)
    if (x != 0) return false;
  return true;
}

Vec multiply(const Algebra& a, const Vec& x, const Vec& y) { return a.multiply(x, y); }

namespace {
Vec unit(int n, int i) {
  Vec v(n, 0);
  v[i] = 1;
  return v;
}
}  // namespace

bool is_associative(const Algebra& a) {
  const int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vec ij = a.basis_product(i, j);
      for (int k = 0; k < n; ++k)
        if (a.multiply(ij, unit(n, k)) != a.multiply(unit(n, i), a.basis_product(j, k))) return false;
    }
  return true;
}

bool is_commutative(const Algebra& a) {
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i + 1; j < a.dim(); ++j)
      if (a.basis_product(i, j) != a.basis_product(j, i)) return false;
  return true;
}

std::vector<Subspace> power_subspaces(const Algebra& a) {
  const int n = a.dim();
  std::vector<Subspace> chain{Subspace::full(a.field(), n)};
  while (true) {
    const Subspace& last = chain.back();
    std::vector<Vec> gens;
    for (const Vec& x : last.basis_vectors())
      for (int j = 0; j < n; ++j) gens.push_back(a.multiply(x, unit(n, j)));
    Subspace next = Subspace::span(a.field(), n, gens);
    if (next == last) break;
    chain.push_back(std::move(next));
    if (chain.back().dim() == 0) break;
  }
  return chain;
}

bool is_nilpotent(const Algebra& a) { return power_subspaces(a).back().dim() == 0; }

Subspace product_space(const Algebra& a) {
  std::vector<Vec> gens;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) gens.push_back(a.basis_product(i, j));
  return Subspace::span(a.field(), a.dim(), gens);
}

Subspace multiplication_kernel(const Algebra& a) {
  const int n = a.dim();
  // Rows: coefficient of e_k in v e_j, then in e_j v; columns: coordinates of v.
  Matrix m(a.field(), 2 * n * n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i) {
        m(j * n + k, i) = a.constant(i, j, k);
        m(n * n + j * n + k, i) = a.constant(j, i, k);
      }
  return kernel(m);
}

bool is_ideal(const Algebra& a, const Subspace& s) {
  const int n = a.dim();
  for (const Vec& v : s.basis_vectors())
    for (int j = 0; j < n; ++j)
      if (!s.contains(a.multiply(v, unit(n, j))) || !s.contains(a.multiply(unit(n, j), v))) return false;
  return true;
}

Quotient quotient(const Algebra& a, const Subspace& ideal) {
  if (ideal.field() != a.field() || ideal.ambient() != a.dim()) throw InputError("ideal does not live in the algebra");
  if (!is_ideal(a, ideal)) throw InputError("subspace is not a two-sided ideal");
  const int n = a.dim();
  std::vector<bool> pivot(n, false);
  for (int c : ideal.pivots()) pivot[c] = true;
  std::vector<int> kept;
  for (int c = 0; c < n; ++c)
    if (!pivot[c]) kept.push_back(c);
  const int m = static_cast<int>(kept.size());

  std::vector<Elem> sc(static_cast<size_t>(m) * m * m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const Vec red = ideal.reduce(a.basis_product(kept[i], kept[j]));
      for (int k = 0; k < m; ++k) sc[(static_cast<size_t>(i) * m + j) * m + k] = red[kept[k]];
    }
  Matrix proj(a.field(), m, n);
  for (int c = 0; c < n; ++c) {
    const Vec red = ideal.reduce(unit(n, c));
    for (int k = 0; k < m; ++k) proj(k, c) = red[kept[k]];
  }
  std::vector<std::string> labels;
  for (int c : kept) labels.push_back(a.labels()[c]);
  return {Algebra(a.field(), m, std::move(sc), std::move(labels)), std::move(proj), std::move(kept)};
}

Algebra direct_sum(const Algebra& a, const Algebra& b) {
  if (a.field() != b.field()) throw InputError("direct sum across fields");
  const int n = a.dim() + b.dim();
  const int na = a.dim();
  std::vector<Elem> sc(static_cast<size_t>(n) * n * n, 0);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j)
      for (int k = 0; k < na; ++k) sc[(static_cast<size_t>(i) * n + j) * n + k] = a.constant(i, j, k);
  for (int i = 0; i < b.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j)
      for (int k = 0; k < b.dim(); ++k)
        sc[(static_cast<size_t>(na + i) * n + na + j) * n + na + k] = b.constant(i, j, k);
  return Algebra(a.field(), n, std::move(sc));
}

bool has_central_component(const Algebra& a) {
  return !product_space(a).contains(multiplication_kernel(a));
}

Algebra change_basis(const Algebra& a, const Matrix& p) {
  const int n = a.dim();
  if (p.rows() != n || p.cols() != n) throw InputError("basis change matrix has wrong shape");
  auto inv = inverse(p);
  if (!inv) throw InputError("basis change matrix is singular");
  std::vector<Vec> cols;
  for (int c = 0; c < n; ++c) cols.push_back(p.col_vec(c));
  std::vector<Elem> sc(static_cast<size_t>(n) * n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vec y = mat_vec(*inv, a.multiply(cols[i], cols[j]));
      for (int k = 0; k < n; ++k) sc[(static_cast<size_t>(i) * n + j) * n + k] = y[k];
    }
  return Algebra(a.field(), n, std::move(sc), a.labels());
}

std::string multiplication_table(const Algebra& a) {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      const Vec v = a.basis_product(i, j);
      if (is_zero(v)) continue;
      if (!first) out << ", ";
      first = false;
      out << a.labels()[i] << "*" << a.labels()[j] << " =";
      bool first_term = true;
      for (int k = 0; k < a.dim(); ++k) {
        if (v[k] == 0) continue;
        out << (first_term ? " " : " + ");
        first_term = false;
        if (v[k] != 1) out << static_cast<int>(v[k]);
        out << a.labels()[k];
      }
    }
  if (first) return "0";
  return out.str();
}

}  // namespace nilalg
