#include "nilalg/linalg.hpp"

#include <algorithm>

namespace nilalg {

Matrix::Matrix(Field f, int rows, int cols)
    : field_(std::move(f)), rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, 0) {
  if (rows < 0 || cols < 0) throw InputError("negative matrix dimension");
}

Matrix Matrix::identity(const Field& f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const Field& f, int cols, const std::vector<Vec>& rows) {
  Matrix m(f, static_cast<int>(rows.size()), cols);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (static_cast<int>(rows[r].size()) != cols) throw InputError("row length mismatch");
    for (int c = 0; c < cols; ++c) m(static_cast<int>(r), c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::unflatten(const Field& f, int n, std::span<const Elem> flat) {
  if (flat.size() != static_cast<size_t>(n) * n) throw InputError("flattened matrix has wrong length");
  Matrix m(f, n, n);
  std::copy(flat.begin(), flat.end(), m.data_.begin());
  return m;
}

Vec Matrix::col_vec(int c) const {
  Vec v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw InputError("matrix product dimension mismatch");
  if (field_ != o.field_) throw InputError("matrix product across fields");
  Matrix out(field_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Elem a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) out(i, j) = field_.add(out(i, j), field_.mul(a, o(k, j)));
    }
  return out;
}

Matrix Matrix::scaled(Elem s) const {
  Matrix out = *this;
  for (auto& x : out.data_) x = field_.mul(s, x);
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix sum dimension mismatch");
  Matrix out = *this;
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.add(data_[i], o.data_[i]);
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Elem x) { return x == 0; });
}

std::vector<std::vector<int>> Matrix::to_nested() const {
  std::vector<std::vector<int>> out(rows_, std::vector<int>(cols_));
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c);
  return out;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; });
}

Vec add(const Field& f, const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
  return out;
}

Vec scale(const Field& f, Elem s, const Vec& a) {
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = f.mul(s, a[i]);
  return out;
}

void axpy(const Field& f, Elem s, std::span<const Elem> x, Vec& y) {
  if (s == 0) return;
  for (size_t i = 0; i < y.size(); ++i) y[i] = f.add(y[i], f.mul(s, x[i]));
}

Vec vec_mat(const Vec& v, const Matrix& m) {
  const Field& f = m.field();
  Vec out(m.cols(), 0);
  for (int r = 0; r < m.rows(); ++r) axpy(f, v[r], m.row(r), out);
  return out;
}

Vec mat_vec(const Matrix& m, const Vec& v) {
  const Field& f = m.field();
  Vec out(m.rows(), 0);
  for (int r = 0; r < m.rows(); ++r) {
    Elem acc = 0;
    for (int c = 0; c < m.cols(); ++c) acc = f.add(acc, f.mul(m(r, c), v[c]));
    out[r] = acc;
  }
  return out;
}

std::vector<int> rref_in_place(Matrix& m) {
  const Field& f = m.field();
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int sel = -1;
    for (int r = row; r < m.rows(); ++r)
      if (m(r, col) != 0) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    const Elem inv = f.inv(m(row, col));
    for (int c = 0; c < m.cols(); ++c) m(row, c) = f.mul(inv, m(row, c));
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Elem factor = f.neg(m(r, col));
      for (int c = 0; c < m.cols(); ++c) m(r, c) = f.add(m(r, c), f.mul(factor, m(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

Matrix rref(const Matrix& m) {
  Matrix out = m;
  rref_in_place(out);
  return out;
}

int rank(const Matrix& m) {
  Matrix tmp = m;
  return static_cast<int>(rref_in_place(tmp).size());
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const int n = m.rows();
  if (n == 0) return m;
  Matrix aug(m.field(), n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  auto piv = rref_in_place(aug);
  if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) return std::nullopt;
  Matrix out(m.field(), n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out(r, c) = aug(r, n + c);
  return out;
}

std::optional<Vec> solve_left(const Matrix& rows, const Vec& v) {
  const Field& f = rows.field();
  const int k = rows.rows(), n = rows.cols();
  // Columns 0..k-1 carry rows^T, the last column carries v.
  Matrix aug(f, n, k + 1);
  for (int t = 0; t < k; ++t)
    for (int c = 0; c < n; ++c) aug(c, t) = rows(t, c);
  for (int c = 0; c < n; ++c) aug(c, k) = v[c];
  auto piv = rref_in_place(aug);
  Vec sol(k, 0);
  for (size_t r = 0; r < piv.size(); ++r) {
    if (piv[r] == k) return std::nullopt;
    sol[piv[r]] = aug(static_cast<int>(r), k);
  }
  return sol;
}

Subspace Subspace::zero(const Field& f, int ambient) { return Subspace(Matrix(f, 0, ambient), {}); }

Subspace Subspace::full(const Field& f, int ambient) {
  std::vector<int> piv(ambient);
  for (int i = 0; i < ambient; ++i) piv[i] = i;
  return Subspace(Matrix::identity(f, ambient), piv);
}

Subspace Subspace::row_space(const Matrix& m) {
  Matrix r = m;
  auto piv = rref_in_place(r);
  Matrix basis(m.field(), static_cast<int>(piv.size()), m.cols());
  for (int i = 0; i < basis.rows(); ++i)
    for (int c = 0; c < m.cols(); ++c) basis(i, c) = r(i, c);
  return Subspace(std::move(basis), std::move(piv));
}

Subspace Subspace::span(const Field& f, int ambient, const std::vector<Vec>& vectors) {
  return row_space(Matrix::from_rows(f, ambient, vectors));
}

std::vector<Vec> Subspace::basis_vectors() const {
  std::vector<Vec> out;
  for (int r = 0; r < dim(); ++r) out.push_back(basis_.row_vec(r));
  return out;
}

Vec Subspace::reduce(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient()) throw InputError("vector length does not match ambient dimension");
  const Field& f = field();
  Vec out = v;
  for (int r = 0; r < dim(); ++r) {
    const Elem c = out[pivots_[r]];
    if (c != 0) axpy(f, f.neg(c), basis_.row(r), out);
  }
  return out;
}

bool Subspace::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient() != ambient()) throw InputError("ambient dimension mismatch");
  for (int r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_.row_vec(r))) return false;
  return true;
}

Vec Subspace::coordinates(const Vec& v) const {
  Vec c(dim());
  for (int r = 0; r < dim(); ++r) c[r] = v[pivots_[r]];
  if (combine(c) != v) throw InputError("vector does not lie in the subspace");
  return c;
}

Vec Subspace::combine(const Vec& coords) const {
  Vec out(ambient(), 0);
  for (int r = 0; r < dim(); ++r) axpy(field(), coords[r], basis_.row(r), out);
  return out;
}

Subspace Subspace::annihilator() const { return kernel(basis_); }

std::string Subspace::encoding() const {
  std::string s;
  s.reserve(basis_.data().size() + 2);
  s.push_back(static_cast<char>(ambient()));
  s.push_back(static_cast<char>(dim()));
  for (Elem x : basis_.data()) s.push_back(static_cast<char>(x));
  return s;
}

bool Subspace::operator<(const Subspace& o) const {
  if (ambient() != o.ambient()) return ambient() < o.ambient();
  if (dim() != o.dim()) return dim() < o.dim();
  return basis_.data() < o.basis_.data();
}

Subspace kernel(const Matrix& m) {
  const Field& f = m.field();
  Matrix r = m;
  auto piv = rref_in_place(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : piv) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols(), 0);
    v[free] = 1;
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = f.neg(r(static_cast<int>(i), free));
    basis.push_back(std::move(v));
  }
  return Subspace::span(f, m.cols(), basis);
}

Subspace sum(const Subspace& u, const Subspace& w) {
  if (u.ambient() != w.ambient()) throw InputError("ambient dimension mismatch");
  auto rows = u.basis_vectors();
  auto more = w.basis_vectors();
  rows.insert(rows.end(), more.begin(), more.end());
  return Subspace::span(u.field(), u.ambient(), rows);
}

Subspace intersect(const Subspace& u, const Subspace& w) {
  if (u.ambient() != w.ambient()) throw InputError("ambient dimension mismatch");
  return sum(u.annihilator(), w.annihilator()).annihilator();
}

bool contains(const Subspace& u, const Vec& v) { return u.contains(v); }

Vec reduce_mod(const Vec& v, const Subspace& w) { return w.reduce(v); }

unsigned long long gaussian_binomial(int d, int s, int q) {
  if (s < 0 || s > d) return 0;
  unsigned long long num = 1, den = 1;
  auto qp = [q](int e) {
    unsigned long long r = 1;
    for (int i = 0; i < e; ++i) r *= static_cast<unsigned long long>(q);
    return r;
  };
  for (int i = 0; i < s; ++i) {
    num *= qp(d - i) - 1;
    den *= qp(i + 1) - 1;
  }
  return num / den;
}

void for_each_subspace(const Field& f, int d, int s, const std::function<void(const Subspace&)>& visit) {
  if (s < 0 || s > d) throw InputError("subspace dimension out of range");
  const int q = f.q();
  std::vector<int> piv(s);
  for (int i = 0; i < s; ++i) piv[i] = i;
  while (true) {
    std::vector<bool> is_pivot(d, false);
    for (int c : piv) is_pivot[c] = true;
    std::vector<std::pair<int, int>> free;
    for (int r = 0; r < s; ++r)
      for (int c = piv[r] + 1; c < d; ++c)
        if (!is_pivot[c]) free.emplace_back(r, c);
    Matrix m(f, s, d);
    for (int r = 0; r < s; ++r) m(r, piv[r]) = 1;
    std::vector<int> digits(free.size(), 0);
    while (true) {
      for (size_t i = 0; i < free.size(); ++i) m(free[i].first, free[i].second) = static_cast<Elem>(digits[i]);
      visit(Subspace::row_space(m));
      size_t k = 0;
      while (k < digits.size() && ++digits[k] == q) digits[k++] = 0;
      if (k == digits.size()) break;
    }
    // next pivot combination
    int i = s - 1;
    while (i >= 0 && piv[i] == d - s + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (int j = i + 1; j < s; ++j) piv[j] = piv[j - 1] + 1;
  }
}

std::vector<Subspace> enumerate_subspaces(const Field& f, int d, int s) {
  std::vector<Subspace> out;
  for_each_subspace(f, d, s, [&](const Subspace& w) { out.push_back(w); });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace nilalg
