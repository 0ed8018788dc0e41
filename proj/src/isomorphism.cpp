#include "nilalg/isomorphism.hpp"

#include <array>

#include "nilalg/cohomology.hpp"

namespace nilalg {

InvariantVector invariant_vector(const Algebra& a) {
  InvariantVector v;
  v.dim = a.dim();
  const auto chain = power_subspaces(a);
  for (const auto& s : chain) v.power_dims.push_back(s.dim());
  const Subspace c = multiplication_kernel(a);
  v.kernel_dim = c.dim();
  v.kernel_in_square_dim = intersect(c, product_space(a)).dim();
  v.commutative = is_commutative(a);
  const CohomologySpaces h = h2(a);
  v.z2 = h.full.dim_z2();
  v.b2 = h.full.dim_b2();
  v.h2 = h.full.dim_h2();
  v.z2_sym = h.symmetric.dim_z2();
  v.b2_sym = h.symmetric.dim_b2();
  v.h2_sym = h.symmetric.dim_h2();
  return v;
}

bool is_homomorphism(const Algebra& a, const Algebra& b, const Matrix& p) {
  const int n = a.dim();
  if (p.rows() != b.dim() || p.cols() != n) throw InputError("map has wrong shape");
  std::vector<Vec> img;
  for (int i = 0; i < n; ++i) img.push_back(p.col_vec(i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (mat_vec(p, a.basis_product(i, j)) != b.multiply(img[i], img[j])) return false;
  return true;
}

namespace {

// Per-element data preserved by any isomorphism: ranks of left, right and
// two-sided multiplication, the depth in the power filtration and the
// exponent at which the element's powers vanish.
using Signature = std::array<int, 5>;

Signature signature(const Algebra& a, const std::vector<Subspace>& chain, const Vec& v) {
  const int n = a.dim();
  Matrix left(a.field(), n, n), right(a.field(), n, n), both(a.field(), 2 * n, n);
  for (int j = 0; j < n; ++j) {
    Vec e(n, 0);
    e[j] = 1;
    const Vec l = a.multiply(v, e);
    const Vec r = a.multiply(e, v);
    for (int k = 0; k < n; ++k) {
      left(j, k) = l[k];
      right(j, k) = r[k];
      both(j, k) = l[k];
      both(n + j, k) = r[k];
    }
  }
  int depth = 0;
  while (depth < static_cast<int>(chain.size()) && chain[depth].contains(v)) ++depth;
  int exponent = 1;
  Vec pw = v;
  while (!is_zero(pw) && exponent <= n + 1) {
    pw = a.multiply(pw, v);
    ++exponent;
  }
  return {rank(left), rank(right), rank(both), depth, exponent};
}

class IsoSearch {
 public:
  IsoSearch(const Algebra& a, const Algebra& b, unsigned long long limit)
      : a_(a), b_(b), f_(a.field()), n_(a.dim()), limit_(limit) {
    build_words();
    build_candidates();
  }

  unsigned long long run(const std::function<bool(const Matrix&)>& visit) {
    visit_ = &visit;
    images_.assign(words_.size(), Vec(n_, 0));
    stop_ = false;
    dfs(0, Subspace::zero(f_, n_));
    return nodes_;
  }

 private:
  struct Word {
    Vec vec;
    int left = -1, right = -1;  // product word when left >= 0
  };
  struct Check {
    int i, j;
    Vec coeffs;  // w_i w_j = sum coeffs[t] w_t
  };

  void build_words() {
    const auto chain = power_subspaces(a_);
    const Subspace square = chain.size() > 1 ? chain[1] : Subspace::zero(f_, n_);
    std::vector<bool> pivot(n_, false);
    for (int c : square.pivots()) pivot[c] = true;
    std::vector<int> gens;
    for (int c = 0; c < n_; ++c)
      if (!pivot[c]) gens.push_back(c);

    Subspace spanned = Subspace::zero(f_, n_);
    for (int g : gens) {
      const int start = static_cast<int>(words_.size());
      Vec e(n_, 0);
      e[g] = 1;
      if (spanned.contains(e)) throw InternalError("generator already in generated subalgebra");
      gen_word_.push_back(start);
      words_.push_back({e});
      spanned = sum(spanned, Subspace::span(f_, n_, {e}));
      bool grew = true;
      while (grew) {
        grew = false;
        const int cur = static_cast<int>(words_.size());
        for (int i = 0; i < cur; ++i)
          for (int j = 0; j < cur; ++j) {
            Vec p = a_.multiply(words_[i].vec, words_[j].vec);
            if (spanned.contains(p)) continue;
            spanned = sum(spanned, Subspace::span(f_, n_, {p}));
            words_.push_back({std::move(p), i, j});
            grew = true;
          }
      }
      const int end = static_cast<int>(words_.size());
      level_end_.push_back(end);
      std::vector<Vec> rows;
      for (int t = 0; t < end; ++t) rows.push_back(words_[t].vec);
      const Matrix wm = Matrix::from_rows(f_, n_, rows);
      std::vector<Check> checks;
      for (int i = 0; i < end; ++i)
        for (int j = 0; j < end; ++j) {
          if (i < start && j < start) continue;
          if (is_product_word(i, j)) continue;
          auto c = solve_left(wm, a_.multiply(words_[i].vec, words_[j].vec));
          if (!c) throw InternalError("word basis not closed under multiplication");
          checks.push_back({i, j, std::move(*c)});
        }
      checks_.push_back(std::move(checks));
    }
    if (static_cast<int>(words_.size()) != n_) throw InternalError("complement of A^2 does not generate the algebra");

    std::vector<Vec> rows;
    for (const auto& w : words_) rows.push_back(w.vec);
    const Matrix wm = Matrix::from_rows(f_, n_, rows);
    for (int i = 0; i < n_; ++i) {
      Vec e(n_, 0);
      e[i] = 1;
      unit_coords_.push_back(*solve_left(wm, e));
    }
  }

  bool is_product_word(int i, int j) const {
    for (const auto& w : words_)
      if (w.left == i && w.right == j) return true;
    return false;
  }

  void build_candidates() {
    const auto chain_a = power_subspaces(a_);
    const auto chain_b = power_subspaces(b_);
    const Subspace b_square = chain_b.size() > 1 ? chain_b[1] : Subspace::zero(f_, n_);
    std::vector<std::pair<Signature, Vec>> all;
    const int q = f_.q();
    Vec v(n_, 0);
    while (true) {
      if (!b_square.contains(v)) all.emplace_back(signature(b_, chain_b, v), v);
      int k = n_ - 1;
      while (k >= 0 && v[k] + 1 == q) v[k--] = 0;
      if (k < 0) break;
      ++v[k];
    }
    for (int g : gen_word_) {
      const Signature want = signature(a_, chain_a, words_[g].vec);
      std::vector<Vec> c;
      for (const auto& [sig, vec] : all)
        if (sig == want) c.push_back(vec);
      candidates_.push_back(std::move(c));
    }
  }

  void dfs(int level, const Subspace& image_span) {
    if (stop_) return;
    if (level == static_cast<int>(gen_word_.size())) {
      Matrix p(f_, n_, n_);
      for (int i = 0; i < n_; ++i) {
        Vec col(n_, 0);
        for (int t = 0; t < n_; ++t) axpy(f_, unit_coords_[i][t], images_[t], col);
        for (int r = 0; r < n_; ++r) p(r, i) = col[r];
      }
      if (!(*visit_)(p)) stop_ = true;
      return;
    }
    const int start = gen_word_[level];
    const int end = level_end_[level];
    for (const Vec& cand : candidates_[level]) {
      if (++nodes_ > limit_) throw GuardError("isomorphism search exceeded node limit");
      images_[start] = cand;
      for (int t = start + 1; t < end; ++t)
        images_[t] = b_.multiply(images_[words_[t].left], images_[words_[t].right]);
      std::vector<Vec> rows = image_span.basis_vectors();
      for (int t = start; t < end; ++t) rows.push_back(images_[t]);
      Subspace next = Subspace::span(f_, n_, rows);
      if (next.dim() != end) continue;
      bool ok = true;
      for (const auto& c : checks_[level]) {
        Vec rhs(n_, 0);
        for (int t = 0; t < end; ++t) axpy(f_, c.coeffs[t], images_[t], rhs);
        if (b_.multiply(images_[c.i], images_[c.j]) != rhs) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      dfs(level + 1, next);
      if (stop_) return;
    }
  }

  const Algebra& a_;
  const Algebra& b_;
  Field f_;
  int n_;
  unsigned long long limit_;
  unsigned long long nodes_ = 0;
  bool stop_ = false;
  const std::function<bool(const Matrix&)>* visit_ = nullptr;

  std::vector<Word> words_;
  std::vector<int> gen_word_;   // word index of each generator
  std::vector<int> level_end_;  // words known after each generator
  std::vector<std::vector<Check>> checks_;
  std::vector<Vec> unit_coords_;
  std::vector<std::vector<Vec>> candidates_;
  std::vector<Vec> images_;
};

}  // namespace

unsigned long long for_each_isomorphism(const Algebra& a, const Algebra& b,
                                        const std::function<bool(const Matrix&)>& visit,
                                        unsigned long long node_limit) {
  if (a.field() != b.field()) throw InputError("algebras are defined over different fields");
  if (a.dim() != b.dim()) return 0;
  if (a.dim() == 0) {
    visit(Matrix(a.field(), 0, 0));
    return 0;
  }
  if (!is_nilpotent(a) || !is_nilpotent(b))
    throw InputError("isomorphism search requires nilpotent algebras");
  IsoSearch search(a, b, node_limit);
  return search.run(visit);
}

std::optional<Matrix> are_isomorphic(const Algebra& a, const Algebra& b, const IsoOptions& opts) {
  if (a.field() != b.field()) throw InputError("algebras are defined over different fields");
  if (a.dim() != b.dim()) return std::nullopt;
  const bool same_invariants = invariant_vector(a) == invariant_vector(b);
  if (!same_invariants && !opts.cross_check_prefilter) return std::nullopt;

  std::optional<Matrix> found;
  for_each_isomorphism(
      a, b,
      [&](const Matrix& p) {
        found = p;
        return false;
      },
      opts.node_limit);
  if (found) {
    if (!same_invariants) throw InternalError("isomorphism found between algebras with different invariants");
    if (!inverse(*found) || !is_homomorphism(a, b, *found)) throw InternalError("isomorphism witness failed verification");
  }
  return found;
}

}  // namespace nilalg
