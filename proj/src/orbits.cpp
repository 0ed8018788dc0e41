#include "nilalg/orbits.hpp"

#include <deque>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "nilalg/isomorphism.hpp"

namespace nilalg {

namespace {

std::string key(const Matrix& m) { return std::string(m.data().begin(), m.data().end()); }

}  // namespace

bool is_automorphism(const Algebra& a, const Matrix& p) {
  return p.rows() == a.dim() && p.cols() == a.dim() && inverse(p).has_value() && is_homomorphism(a, a, p);
}

unsigned long long gl_order(int n, int q) {
  unsigned long long qn = 1;
  for (int i = 0; i < n; ++i) qn *= static_cast<unsigned long long>(q);
  unsigned long long order = 1, qi = 1;
  for (int i = 0; i < n; ++i) {
    order *= qn - qi;
    qi *= static_cast<unsigned long long>(q);
  }
  return order;
}

std::vector<Matrix> gl_generators(const Field& f, int n) {
  std::vector<Matrix> gens;
  int t = 1;
  for (int k = 0; k < f.m(); ++k, t *= f.p())
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        Matrix m = Matrix::identity(f, n);
        m(i, j) = static_cast<Elem>(t);
        gens.push_back(std::move(m));
      }
  if (n > 0 && f.primitive_element() != 1) {
    Matrix d = Matrix::identity(f, n);
    d(0, 0) = f.primitive_element();
    gens.push_back(std::move(d));
  }
  return gens;
}

std::vector<Matrix> group_closure(const Field& f, int n, const std::vector<Matrix>& generators) {
  std::vector<Matrix> out{Matrix::identity(f, n)};
  std::unordered_set<std::string> seen{key(out[0])};
  for (size_t i = 0; i < out.size(); ++i)
    for (const Matrix& g : generators) {
      Matrix prod = out[i] * g;
      if (seen.insert(key(prod)).second) out.push_back(std::move(prod));
    }
  return out;
}

AutGroup automorphism_group(const Algebra& a, unsigned long long node_limit) {
  const Field& f = a.field();
  const int n = a.dim();
  if (a.is_zero_algebra()) return {a, gl_generators(f, n), std::nullopt, gl_order(n, f.q())};

  std::vector<Matrix> elements;
  for_each_isomorphism(
      a, a,
      [&](const Matrix& p) {
        if (!is_automorphism(a, p)) throw InternalError("enumerated map is not an automorphism");
        elements.push_back(p);
        return true;
      },
      node_limit);

  // Greedy generating set: add each element not yet generated.
  std::vector<Matrix> gens;
  std::unordered_set<std::string> generated{key(Matrix::identity(f, n))};
  for (const Matrix& e : elements) {
    if (generated.contains(key(e))) continue;
    gens.push_back(e);
    generated.clear();
    for (const Matrix& m : group_closure(f, n, gens)) generated.insert(key(m));
  }
  if (generated.size() != elements.size()) throw InternalError("automorphism list is not closed under composition");
  const auto order = static_cast<unsigned long long>(elements.size());
  return {a, std::move(gens), std::move(elements), order};
}

Matrix act_on_cocycle(const Matrix& phi, const Matrix& theta) { return phi.transpose() * theta * phi; }

std::vector<Matrix> lift_subspace(const Subspace& omega, const H2Space& h, int n) {
  std::vector<Matrix> out;
  for (const Vec& c : omega.basis_vectors()) out.push_back(Matrix::unflatten(h.reps.field(), n, h.lift(c)));
  return out;
}

Subspace act_on_h2_subspace(const Matrix& phi, const Subspace& omega, const H2Space& h, int n) {
  std::vector<Vec> rows;
  for (const Matrix& theta : lift_subspace(omega, h, n))
    rows.push_back(h.class_coordinates(flatten(act_on_cocycle(phi, theta))));
  return Subspace::span(omega.field(), omega.ambient(), rows);
}

bool is_useful(const Algebra& a, std::span<const Matrix> cocycles) {
  return intersect(radical(a.field(), a.dim(), cocycles), multiplication_kernel(a)).dim() == 0;
}

std::vector<Subspace> useful_subspaces(const Algebra& a, const CohomologySpaces& h, int s, bool symmetric) {
  if (s < 1) throw InputError("extension dimension must be positive");
  const H2Space& space = h.variant(symmetric);
  std::vector<Subspace> out;
  if (s > space.dim_h2()) return out;
  const Subspace kern = multiplication_kernel(a);
  for_each_subspace(a.field(), space.dim_h2(), s, [&](const Subspace& omega) {
    const auto thetas = lift_subspace(omega, space, a.dim());
    if (intersect(radical(a.field(), a.dim(), thetas), kern).dim() == 0) out.push_back(omega);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Orbit> orbit_representatives(const Algebra& a, const AutGroup& aut, const CohomologySpaces& h, int s,
                                         bool symmetric) {
  const H2Space& space = h.variant(symmetric);
  const auto useful = useful_subspaces(a, h, s, symmetric);
  std::unordered_map<std::string, size_t> index;
  for (size_t i = 0; i < useful.size(); ++i) index.emplace(useful[i].encoding(), i);

  std::vector<bool> seen(useful.size(), false);
  std::vector<Orbit> orbits;
  for (size_t start = 0; start < useful.size(); ++start) {
    if (seen[start]) continue;
    seen[start] = true;
    std::deque<size_t> queue{start};
    size_t size = 0;
    while (!queue.empty()) {
      const size_t cur = queue.front();
      queue.pop_front();
      ++size;
      for (const Matrix& g : aut.generators) {
        const Subspace image = act_on_h2_subspace(g, useful[cur], space, a.dim());
        auto it = index.find(image.encoding());
        if (it == index.end()) throw InternalError("automorphism moved a useful subspace outside the useful set");
        if (!seen[it->second]) {
          seen[it->second] = true;
          queue.push_back(it->second);
        }
      }
    }
    // start is the smallest unvisited subspace, hence the orbit minimum.
    orbits.push_back({useful[start], size});
  }
  return orbits;
}

std::vector<Orbit> orbit_representatives(const Algebra& a, int s, bool symmetric) {
  return orbit_representatives(a, automorphism_group(a), h2(a), s, symmetric);
}

Algebra extend_unchecked(const Algebra& a, std::span<const Matrix> maps) {
  const int n = a.dim();
  const int s = static_cast<int>(maps.size());
  const int N = n + s;
  std::vector<Elem> sc(static_cast<size_t>(N) * N * N, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) sc[(static_cast<size_t>(i) * N + j) * N + k] = a.constant(i, j, k);
      for (int t = 0; t < s; ++t) {
        if (maps[t].rows() != n || maps[t].cols() != n) throw InputError("bilinear map has wrong shape");
        sc[(static_cast<size_t>(i) * N + j) * N + n + t] = maps[t](i, j);
      }
    }
  return Algebra(a.field(), N, std::move(sc));
}

Algebra central_extension(const Algebra& a, std::span<const Matrix> cocycles) {
  for (const Matrix& t : cocycles)
    if (!is_cocycle(a, t)) throw InputError("bilinear map is not a cocycle");
  const Subspace b2 = coboundary_space(a);
  std::vector<Vec> rows = b2.basis_vectors();
  for (const Matrix& t : cocycles) rows.push_back(flatten(t));
  if (Subspace::span(a.field(), a.dim() * a.dim(), rows).dim() != b2.dim() + static_cast<int>(cocycles.size()))
    throw InputError("cocycles are linearly dependent modulo coboundaries");
  return extend_unchecked(a, cocycles);
}

KernelSplit split_off_kernel(const Algebra& b) {
  const Subspace c = multiplication_kernel(b);
  Quotient q = quotient(b, c);
  const int m = q.algebra.dim();
  std::vector<Matrix> cocycles;
  for (int t = 0; t < c.dim(); ++t) {
    Matrix theta(b.field(), m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) theta(i, j) = b.basis_product(q.kept[i], q.kept[j])[c.pivots()[t]];
    cocycles.push_back(std::move(theta));
  }
  return {std::move(q), std::move(cocycles)};
}

}  // namespace nilalg
