#include "mcat/short.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

namespace mcat {

namespace {

std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

long long checked_product(const std::vector<int>& dims) {
  long long p = 1;
  for (int d : dims) {
    if (d < 0) throw ShortError("negative dimension");
    p *= d;
    if (p > (1LL << 40)) throw SizeBound("tensor too large");
  }
  return p;
}

}  // namespace

std::string show(const ExtRat& v) {
  return v.infinite ? "inf" : rat_str(v.value);
}

// ---------------------------------------------------------------------------
// Matrices

Mat mat(int rows, int cols, std::vector<Rat> entries) {
  if (rows < 0 || cols < 0 ||
      entries.size() != static_cast<size_t>(rows) * static_cast<size_t>(cols))
    throw ShortError("matrix entries do not match the shape");
  return Mat{rows, cols, std::move(entries)};
}

Mat mat_zero(int rows, int cols) {
  return Mat{rows, cols,
             std::vector<Rat>(static_cast<size_t>(rows) * cols, Rat(0))};
}

Mat mat_identity(int n) {
  Mat m = mat_zero(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat mat_mul(const Mat& x, const Mat& y) {
  if (x.cols != y.rows) throw ShortError("matrix product shape mismatch");
  Mat out = mat_zero(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (x.at(i, k) == 0) continue;
      for (int j = 0; j < y.cols; ++j) out.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return out;
}

std::vector<Rat> mat_vec(const Mat& m, const std::vector<Rat>& v) {
  if (v.size() != static_cast<size_t>(m.cols))
    throw ShortError("matrix-vector shape mismatch");
  std::vector<Rat> out(static_cast<size_t>(m.rows), Rat(0));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out[i] += m.at(i, j) * v[j];
  return out;
}

namespace {

struct Rref {
  Mat m;
  std::vector<int> pivots;  // pivot column per pivot row
};

Rref rref(Mat m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int p = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    const Rat lead = m.at(r, c);
    for (int j = 0; j < m.cols; ++j) m.at(r, j) /= lead;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      const Rat factor = m.at(i, c);
      for (int j = 0; j < m.cols; ++j) m.at(i, j) -= factor * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return Rref{std::move(m), std::move(pivots)};
}

Mat hcat(const Mat& x, const Mat& y) {
  if (x.rows != y.rows) throw ShortError("hcat shape mismatch");
  Mat out = mat_zero(x.rows, x.cols + y.cols);
  for (int i = 0; i < x.rows; ++i) {
    for (int j = 0; j < x.cols; ++j) out.at(i, j) = x.at(i, j);
    for (int j = 0; j < y.cols; ++j) out.at(i, x.cols + j) = y.at(i, j);
  }
  return out;
}

Mat transpose(const Mat& m) {
  Mat out = mat_zero(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out.at(j, i) = m.at(i, j);
  return out;
}

Mat columns_of(const Mat& m, const std::vector<int>& idx) {
  Mat out = mat_zero(m.rows, static_cast<int>(idx.size()));
  for (size_t j = 0; j < idx.size(); ++j)
    for (int i = 0; i < m.rows; ++i) out.at(i, static_cast<int>(j)) = m.at(i, idx[j]);
  return out;
}

}  // namespace

int rank(Mat m) { return static_cast<int>(rref(std::move(m)).pivots.size()); }

Mat column_basis(const Mat& m) {
  return columns_of(m, rref(m).pivots);
}

Mat null_space(const Mat& m) {
  const Rref r = rref(m);
  std::vector<bool> is_pivot(static_cast<size_t>(m.cols), false);
  for (int c : r.pivots) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < m.cols; ++c)
    if (!is_pivot[static_cast<size_t>(c)]) free_cols.push_back(c);
  Mat out = mat_zero(m.cols, static_cast<int>(free_cols.size()));
  for (size_t f = 0; f < free_cols.size(); ++f) {
    out.at(free_cols[f], static_cast<int>(f)) = 1;
    for (size_t pr = 0; pr < r.pivots.size(); ++pr)
      out.at(r.pivots[pr], static_cast<int>(f)) =
          -r.m.at(static_cast<int>(pr), free_cols[f]);
  }
  return out;
}

std::optional<std::vector<Rat>> solve(const Mat& m, const std::vector<Rat>& b) {
  if (b.size() != static_cast<size_t>(m.rows))
    throw ShortError("solve: right-hand side shape mismatch");
  Mat aug = mat_zero(m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i];
  }
  const Rref r = rref(std::move(aug));
  for (int c : r.pivots)
    if (c == m.cols) return std::nullopt;  // inconsistent
  std::vector<Rat> x(static_cast<size_t>(m.cols), Rat(0));
  for (size_t pr = 0; pr < r.pivots.size(); ++pr)
    x[static_cast<size_t>(r.pivots[pr])] = r.m.at(static_cast<int>(pr), m.cols);
  return x;
}

bool same_column_space(const Mat& x, const Mat& y) {
  if (x.rows != y.rows) return false;
  const int rx = rank(x), ry = rank(y);
  return rx == ry && rank(hcat(x, y)) == rx;
}

// ---------------------------------------------------------------------------
// Two-phase primal simplex with Bland's rule, exact over the rationals.

LpResult lp_minimize(const Mat& A, const std::vector<Rat>& b,
                     const std::vector<Rat>& c) {
  const int m = A.rows, n = A.cols;
  if (b.size() != static_cast<size_t>(m) || c.size() != static_cast<size_t>(n))
    throw ShortError("lp_minimize: shape mismatch");

  // tableau columns: n structural + m artificial + rhs
  Mat T = mat_zero(m, n + m + 1);
  for (int r = 0; r < m; ++r) {
    const bool neg = b[r] < 0;
    for (int j = 0; j < n; ++j) T.at(r, j) = neg ? Rat(-A.at(r, j)) : A.at(r, j);
    T.at(r, n + r) = 1;
    T.at(r, n + m) = neg ? Rat(-b[r]) : b[r];
  }
  std::vector<int> basis(static_cast<size_t>(m));
  for (int r = 0; r < m; ++r) basis[r] = n + r;

  const auto pivot = [&](int pr, int pc) {
    const Rat lead = T.at(pr, pc);
    for (int j = 0; j <= n + m; ++j) T.at(pr, j) /= lead;
    for (int r = 0; r < m; ++r) {
      if (r == pr || T.at(r, pc) == 0) continue;
      const Rat factor = T.at(r, pc);
      for (int j = 0; j <= n + m; ++j) T.at(r, j) -= factor * T.at(pr, j);
    }
    basis[pr] = pc;
  };

  // minimize `cost` over columns < allowed; Bland's rule throughout
  const auto run = [&](const std::vector<Rat>& cost, int allowed) {
    while (true) {
      int enter = -1;
      for (int j = 0; j < allowed && enter < 0; ++j) {
        bool basic = false;
        for (int r = 0; r < m; ++r) basic = basic || basis[r] == j;
        if (basic) continue;
        Rat reduced = cost[static_cast<size_t>(j)];
        for (int r = 0; r < m; ++r)
          reduced -= cost[static_cast<size_t>(basis[r])] * T.at(r, j);
        if (reduced < 0) enter = j;
      }
      if (enter < 0) return;
      int leave = -1;
      Rat best = 0;
      for (int r = 0; r < m; ++r) {
        if (T.at(r, enter) <= 0) continue;
        const Rat ratio = T.at(r, n + m) / T.at(r, enter);
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[r] < basis[leave]))
          leave = r, best = ratio;
      }
      if (leave < 0)
        throw std::logic_error("lp_minimize: objective unbounded below");
      pivot(leave, enter);
    }
  };

  // phase 1: drive the artificial variables to zero
  std::vector<Rat> cost1(static_cast<size_t>(n + m), Rat(0));
  for (int j = n; j < n + m; ++j) cost1[static_cast<size_t>(j)] = 1;
  run(cost1, n + m);
  Rat phase1 = 0;
  for (int r = 0; r < m; ++r)
    if (basis[r] >= n) phase1 += T.at(r, n + m);
  if (phase1 != 0) return LpResult{false, 0, {}};
  for (int r = 0; r < m; ++r) {
    if (basis[r] < n) continue;
    for (int j = 0; j < n; ++j)
      if (T.at(r, j) != 0) {
        pivot(r, j);
        break;
      }
  }

  // phase 2 over structural columns only
  std::vector<Rat> cost2(static_cast<size_t>(n + m), Rat(0));
  for (int j = 0; j < n; ++j) cost2[static_cast<size_t>(j)] = c[static_cast<size_t>(j)];
  run(cost2, n);

  LpResult out;
  out.feasible = true;
  out.solution.assign(static_cast<size_t>(n), Rat(0));
  for (int r = 0; r < m; ++r)
    if (basis[r] < n) out.solution[static_cast<size_t>(basis[r])] = T.at(r, n + m);
  for (int j = 0; j < n; ++j)
    out.value += c[static_cast<size_t>(j)] * out.solution[static_cast<size_t>(j)];
  return out;
}

// ---------------------------------------------------------------------------
// Polyhedral seminorms

PolySeminorm poly_seminorm(int dim, Mat w, Mat functionals) {
  if (dim < 0 || w.rows != dim)
    throw ShortError("poly_seminorm: subspace matrix has wrong height");
  if (functionals.cols != w.cols)
    throw ShortError("poly_seminorm: functionals act on subspace coordinates");
  // well-definedness: functionals must vanish on the kernel of w
  const Mat ker = null_space(w);
  for (int j = 0; j < ker.cols; ++j) {
    std::vector<Rat> z(static_cast<size_t>(ker.rows));
    for (int i = 0; i < ker.rows; ++i) z[static_cast<size_t>(i)] = ker.at(i, j);
    for (const Rat& v : mat_vec(functionals, z))
      if (v != 0)
        throw ShortError(
            "poly_seminorm: functionals disagree on dependent columns");
  }
  if (ker.cols == 0) return PolySeminorm{dim, std::move(w), std::move(functionals)};
  // canonicalize to an independent column set
  const std::vector<int> keep = rref(w).pivots;
  Mat fun2 = mat_zero(functionals.rows, static_cast<int>(keep.size()));
  for (int i = 0; i < functionals.rows; ++i)
    for (size_t j = 0; j < keep.size(); ++j)
      fun2.at(i, static_cast<int>(j)) = functionals.at(i, keep[j]);
  return PolySeminorm{dim, columns_of(w, keep), std::move(fun2)};
}

PolySeminorm poly_full(int dim, Mat ambient_functionals) {
  return poly_seminorm(dim, mat_identity(dim), std::move(ambient_functionals));
}

ExtRat seminorm_value(const PolySeminorm& s, const std::vector<Rat>& x) {
  if (x.size() != static_cast<size_t>(s.dim))
    throw ShortError("seminorm_value: dimension mismatch");
  const auto coords = solve(s.w, x);
  if (!coords) return ext_inf();
  Rat best = 0;
  for (const Rat& v : mat_vec(s.functionals, *coords))
    best = std::max(best, rat_abs(v));
  return ext(best);
}

std::vector<std::vector<Rat>> ball_vertices(const PolySeminorm& s) {
  const int k = s.w.cols;
  const int mrows = s.functionals.rows;
  if (k > 4) throw SizeBound("ball_vertices: subspace dimension above 4");
  if (mrows > 8) throw SizeBound("ball_vertices: more than 8 functionals");
  if (k == 0) return {std::vector<Rat>(static_cast<size_t>(s.dim), Rat(0))};
  if (rank(s.functionals) < k)
    throw NormBallUnbounded("unit ball is unbounded on the finite part");

  std::set<std::vector<Rat>> seen;
  std::vector<std::vector<Rat>> out;
  std::vector<int> pick(static_cast<size_t>(k));
  // all k-subsets of functionals, all sign patterns
  const auto try_subset = [&](const std::vector<int>& rows) {
    for (int signs = 0; signs < (1 << k); ++signs) {
      Mat sq = mat_zero(k, k);
      std::vector<Rat> rhs(static_cast<size_t>(k));
      for (int r = 0; r < k; ++r) {
        for (int cc = 0; cc < k; ++cc) sq.at(r, cc) = s.functionals.at(rows[r], cc);
        rhs[static_cast<size_t>(r)] = (signs >> r) & 1 ? Rat(-1) : Rat(1);
      }
      if (rank(sq) < k) return;  // same rows for every sign pattern
      const auto c = solve(sq, rhs);
      if (!c) continue;
      bool inside = true;
      for (const Rat& v : mat_vec(s.functionals, *c))
        inside = inside && rat_abs(v) <= 1;
      if (!inside) continue;
      if (seen.insert(*c).second) out.push_back(mat_vec(s.w, *c));
    }
  };
  const auto rec = [&](auto&& self, int start, int depth) -> void {
    if (depth == k) {
      std::vector<int> rows(pick.begin(), pick.end());
      try_subset(rows);
      return;
    }
    for (int r = start; r < mrows; ++r) {
      pick[static_cast<size_t>(depth)] = r;
      self(self, r + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

PolySeminorm poly_pullback(const PolySeminorm& s, const Mat& t) {
  if (t.rows != s.dim) throw ShortError("poly_pullback: shape mismatch");
  // {u : t u lies in span w}: project the null space of [t | -w] onto u
  Mat stacked = hcat(t, s.w);
  for (int i = 0; i < stacked.rows; ++i)
    for (int j = t.cols; j < stacked.cols; ++j)
      stacked.at(i, j) = -stacked.at(i, j);
  const Mat ns = null_space(stacked);
  Mat uparts = mat_zero(t.cols, ns.cols);
  for (int i = 0; i < t.cols; ++i)
    for (int j = 0; j < ns.cols; ++j) uparts.at(i, j) = ns.at(i, j);
  const Mat wnew = column_basis(uparts);
  // w-coordinates of the images of the new basis columns
  Mat coords = mat_zero(s.w.cols, wnew.cols);
  for (int j = 0; j < wnew.cols; ++j) {
    std::vector<Rat> col(static_cast<size_t>(wnew.rows));
    for (int i = 0; i < wnew.rows; ++i) col[static_cast<size_t>(i)] = wnew.at(i, j);
    const auto c = solve(s.w, mat_vec(t, col));
    if (!c) throw ShortError("poly_pullback: internal inconsistency");
    for (int i = 0; i < s.w.cols; ++i) coords.at(i, j) = (*c)[static_cast<size_t>(i)];
  }
  return poly_seminorm(t.cols, wnew, mat_mul(s.functionals, coords));
}

ExtRat minkowski(const std::vector<std::vector<Rat>>& points,
                 const std::vector<Rat>& x) {
  const int d = static_cast<int>(x.size());
  for (const auto& p : points)
    if (p.size() != x.size())
      throw ShortError("minkowski: point dimension mismatch");
  const int n = static_cast<int>(points.size());
  Mat A = mat_zero(d, 2 * n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < d; ++i) {
      A.at(i, j) = points[static_cast<size_t>(j)][static_cast<size_t>(i)];
      A.at(i, n + j) = -A.at(i, j);
    }
  const auto lp = lp_minimize(A, x, std::vector<Rat>(static_cast<size_t>(2 * n), Rat(1)));
  return lp.feasible ? ext(lp.value) : ext_inf();
}

// ---------------------------------------------------------------------------
// Short spaces

ShortSpace short_space(int dim, LevelWindow window,
                       std::vector<PolySeminorm> levels) {
  if (window.hi < window.lo) throw ShortError("short_space: empty window");
  if (levels.size() != static_cast<size_t>(window.size()))
    throw ShortError("short_space: one seminorm per window level required");
  for (const auto& s : levels)
    if (s.dim != dim) throw ShortError("short_space: level dimension mismatch");
  if (rank(levels.front().w) != dim)
    throw ShortError(
        "short_space: lowest level must be finite on the whole space");
  return ShortSpace{dim, window, std::move(levels)};
}

ShortSpace trivial_space(PolySeminorm s) {
  const int dim = s.dim;
  return short_space(dim, LevelWindow{0, 0}, {std::move(s)});
}

ExtRat seminorm_eval(const ShortSpace& s, const std::vector<Rat>& x,
                     long long l) {
  return seminorm_value(s.at_level(l), x);
}

// ---------------------------------------------------------------------------
// Multilinear maps

ShortMultiMap short_map(std::vector<ShortSpace> sources, ShortSpace target,
                        std::vector<Rat> coeff) {
  std::vector<int> dims;
  for (const auto& s : sources) {
    dims.push_back(s.dim);
    if (s.window != target.window)
      throw ShortError("short_map: all spaces must share one level window");
  }
  dims.push_back(target.dim);
  if (coeff.size() != static_cast<size_t>(checked_product(dims)))
    throw ShortError("short_map: coefficient tensor has wrong size");
  return ShortMultiMap{std::move(sources), std::move(target), std::move(coeff)};
}

ShortMultiMap short_identity(const ShortSpace& s) {
  std::vector<Rat> coeff(static_cast<size_t>(s.dim) * s.dim, Rat(0));
  for (int i = 0; i < s.dim; ++i)
    coeff[static_cast<size_t>(i) * s.dim + i] = 1;
  return short_map({s}, s, std::move(coeff));
}

ShortMultiMap short_zero(std::vector<ShortSpace> sources, ShortSpace target) {
  std::vector<int> dims;
  for (const auto& s : sources) dims.push_back(s.dim);
  dims.push_back(target.dim);
  return short_map(std::move(sources), std::move(target),
                   std::vector<Rat>(static_cast<size_t>(checked_product(dims)), Rat(0)));
}

std::vector<Rat> short_apply(const ShortMultiMap& f,
                             const std::vector<std::vector<Rat>>& args) {
  const size_t n = f.sources.size();
  if (args.size() != n)
    throw ShortError("short_apply: argument count mismatch");
  for (size_t i = 0; i < n; ++i)
    if (args[i].size() != static_cast<size_t>(f.sources[i].dim))
      throw ShortError("short_apply: argument dimension mismatch");
  const int dt = f.target.dim;
  std::vector<Rat> out(static_cast<size_t>(dt), Rat(0));
  for (const auto& s : f.sources)
    if (s.dim == 0) return out;
  std::vector<int> idx(n, 0);
  size_t flat = 0;
  while (true) {
    Rat prod = 1;
    for (size_t i = 0; i < n && prod != 0; ++i)
      prod *= args[i][static_cast<size_t>(idx[i])];
    if (prod != 0)
      for (int t = 0; t < dt; ++t)
        out[static_cast<size_t>(t)] += prod * f.coeff[flat * dt + t];
    // odometer over source indices, last fastest
    size_t p = n;
    while (p > 0 && idx[p - 1] + 1 == f.sources[p - 1].dim) idx[--p] = 0;
    if (p == 0) break;
    ++idx[p - 1];
    flat = 0;
    for (size_t i = 0; i < n; ++i)
      flat = flat * f.sources[i].dim + static_cast<size_t>(idx[i]);
  }
  return out;
}

ShortMultiMap partial_apply(const ShortMultiMap& f, int k,
                            const std::vector<Rat>& x) {
  const int n = static_cast<int>(f.sources.size());
  if (k < 1 || k > n) throw ShortError("partial_apply: argument out of range");
  if (x.size() != static_cast<size_t>(f.sources[static_cast<size_t>(k - 1)].dim))
    throw ShortError("partial_apply: vector dimension mismatch");
  std::vector<ShortSpace> rest;
  for (int i = 0; i < n; ++i)
    if (i != k - 1) rest.push_back(f.sources[static_cast<size_t>(i)]);
  auto out = short_zero(rest, f.target);
  for (const auto& s : f.sources)
    if (s.dim == 0) return out;
  const int dt = f.target.dim;
  // walk the full tensor once, scattering into the reduced one
  std::vector<int> idx(static_cast<size_t>(n), 0);
  while (true) {
    size_t full = 0, reduced = 0;
    for (int i = 0; i < n; ++i) {
      full = full * f.sources[static_cast<size_t>(i)].dim + static_cast<size_t>(idx[static_cast<size_t>(i)]);
      if (i != k - 1)
        reduced = reduced * f.sources[static_cast<size_t>(i)].dim + static_cast<size_t>(idx[static_cast<size_t>(i)]);
    }
    const Rat& weight = x[static_cast<size_t>(idx[static_cast<size_t>(k - 1)])];
    if (weight != 0)
      for (int t = 0; t < dt; ++t)
        out.coeff[reduced * dt + t] += weight * f.coeff[full * dt + t];
    int p = n;
    while (p > 0 && idx[static_cast<size_t>(p - 1)] + 1 ==
                        f.sources[static_cast<size_t>(p - 1)].dim)
      idx[static_cast<size_t>(--p)] = 0;
    if (p == 0) break;
    ++idx[static_cast<size_t>(p - 1)];
  }
  return out;
}

ShortMultiMap short_scale(const ShortMultiMap& f, const Rat& c) {
  auto out = f;
  for (auto& v : out.coeff) v *= c;
  return out;
}

ShortMultiMap short_sub(const ShortMultiMap& f, const ShortMultiMap& g) {
  if (f.sources != g.sources || !(f.target == g.target))
    throw SignatureMismatch("short_sub: signatures differ");
  auto out = f;
  for (size_t i = 0; i < out.coeff.size(); ++i) out.coeff[i] -= g.coeff[i];
  return out;
}

ShortMultiMap short_compose(const OrdMap& phi,
                            const std::vector<ShortMultiMap>& gs,
                            const ShortMultiMap& f) {
  const int J = phi.target;
  if (static_cast<int>(gs.size()) != J ||
      static_cast<int>(f.sources.size()) != J)
    throw SignatureMismatch("short_compose: index map does not match");
  for (int j = 0; j < J; ++j)
    if (!(gs[static_cast<size_t>(j)].target == f.sources[static_cast<size_t>(j)]))
      throw SignatureMismatch("short_compose: middle spaces do not match");
  // result sources: distribute along the fibers of phi
  std::vector<ShortSpace> sources(static_cast<size_t>(phi.source));
  std::vector<int> used(static_cast<size_t>(J), 0);
  for (int i = 0; i < phi.source; ++i) {
    const int j = phi.values[static_cast<size_t>(i)];
    const auto& g = gs[static_cast<size_t>(j - 1)];
    if (used[static_cast<size_t>(j - 1)] >= static_cast<int>(g.sources.size()))
      throw SignatureMismatch("short_compose: fiber arity mismatch");
    sources[static_cast<size_t>(i)] =
        g.sources[static_cast<size_t>(used[static_cast<size_t>(j - 1)]++)];
  }
  for (int j = 0; j < J; ++j)
    if (used[static_cast<size_t>(j)] !=
        static_cast<int>(gs[static_cast<size_t>(j)].sources.size()))
      throw SignatureMismatch("short_compose: fiber arity mismatch");

  auto out = short_zero(sources, f.target);
  for (const auto& s : sources)
    if (s.dim == 0) return out;
  const int dt = f.target.dim;
  const int I = phi.source;
  std::vector<std::vector<int>> fibers(static_cast<size_t>(J));
  for (int j = 1; j <= J; ++j) fibers[static_cast<size_t>(j - 1)] = fiber(phi, j);

  std::vector<int> idx(static_cast<size_t>(I), 0);
  while (true) {
    // inner coefficient columns of each g at this multi-index
    std::vector<std::vector<Rat>> ys(static_cast<size_t>(J));
    for (int j = 0; j < J; ++j) {
      const auto& g = gs[static_cast<size_t>(j)];
      size_t flat = 0;
      for (size_t p = 0; p < fibers[static_cast<size_t>(j)].size(); ++p) {
        const int i = fibers[static_cast<size_t>(j)][p];
        flat = flat * g.sources[p].dim + static_cast<size_t>(idx[static_cast<size_t>(i - 1)]);
      }
      const int dy = g.target.dim;
      ys[static_cast<size_t>(j)].assign(static_cast<size_t>(dy), Rat(0));
      for (int t = 0; t < dy; ++t)
        ys[static_cast<size_t>(j)][static_cast<size_t>(t)] = g.coeff[flat * dy + t];
    }
    const auto val = short_apply(f, ys);
    size_t flat_out = 0;
    for (int i = 0; i < I; ++i)
      flat_out = flat_out * sources[static_cast<size_t>(i)].dim + static_cast<size_t>(idx[static_cast<size_t>(i)]);
    for (int t = 0; t < dt; ++t)
      out.coeff[flat_out * dt + t] = val[static_cast<size_t>(t)];
    int p = I;
    while (p > 0 && idx[static_cast<size_t>(p - 1)] + 1 ==
                        sources[static_cast<size_t>(p - 1)].dim)
      idx[static_cast<size_t>(--p)] = 0;
    if (p == 0) break;
    ++idx[static_cast<size_t>(p - 1)];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Operator seminorms

namespace {

struct NormSweep {
  ExtRat best = ext(Rat(0));
  std::optional<ShortWitness> argmax;
};

// shared worker: max over window level tuples and ball vertex tuples
NormSweep hom_seminorm_sweep(const ShortMultiMap& f, long long l) {
  const int n = static_cast<int>(f.sources.size());
  const LevelWindow win = f.target.window;
  // vertices per (source, window level)
  std::vector<std::vector<std::vector<std::vector<Rat>>>> verts(
      static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    verts[static_cast<size_t>(i)].resize(static_cast<size_t>(win.size()));
    for (int lv = win.lo; lv <= win.hi; ++lv)
      verts[static_cast<size_t>(i)][static_cast<size_t>(lv - win.lo)] =
          ball_vertices(f.sources[static_cast<size_t>(i)].at_level(lv));
  }

  NormSweep sweep;
  std::vector<int> lam(static_cast<size_t>(n), win.lo);
  while (true) {
    long long sum = l;
    for (int v : lam) sum += v;
    const auto& target_norm = f.target.at_level(sum);

    std::vector<size_t> vi(static_cast<size_t>(n), 0);
    bool any_empty = false;
    for (int i = 0; i < n; ++i)
      any_empty = any_empty ||
                  verts[static_cast<size_t>(i)][static_cast<size_t>(lam[static_cast<size_t>(i)] - win.lo)].empty();
    if (!any_empty) {
      while (true) {
        std::vector<std::vector<Rat>> args(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
          args[static_cast<size_t>(i)] =
              verts[static_cast<size_t>(i)][static_cast<size_t>(lam[static_cast<size_t>(i)] - win.lo)][vi[static_cast<size_t>(i)]];
        const ExtRat value =
            seminorm_value(target_norm, short_apply(f, args));
        if (sweep.best < value) {
          sweep.best = value;
          ShortWitness w;
          for (int v : lam) w.lambda.push_back(v);
          w.vertices = args;
          w.value = value;
          sweep.argmax = std::move(w);
        }
        int p = n;
        while (p > 0 &&
               vi[static_cast<size_t>(p - 1)] + 1 ==
                   verts[static_cast<size_t>(p - 1)][static_cast<size_t>(lam[static_cast<size_t>(p - 1)] - win.lo)].size())
          vi[static_cast<size_t>(--p)] = 0;
        if (p == 0) break;
        ++vi[static_cast<size_t>(p - 1)];
      }
    }
    int p = n;
    while (p > 0 && lam[static_cast<size_t>(p - 1)] == win.hi)
      lam[static_cast<size_t>(--p)] = win.lo;
    if (p == 0) break;
    ++lam[static_cast<size_t>(p - 1)];
  }
  return sweep;
}

}  // namespace

ExtRat hom_seminorm(const ShortMultiMap& f, long long l) {
  return hom_seminorm_sweep(f, l).best;
}

ShortCheck check_short(const ShortMultiMap& f) {
  const auto sweep = hom_seminorm_sweep(f, 0);
  ShortCheck out;
  out.norm = sweep.best;
  out.is_short = sweep.best <= ext(Rat(1));
  if (!out.is_short) out.witness = sweep.argmax;
  return out;
}

// ---------------------------------------------------------------------------
// Products, kernels

ShortSpace short_product(const std::vector<ShortSpace>& spaces) {
  LevelWindow win = spaces.empty() ? LevelWindow{0, 0} : spaces.front().window;
  int dim = 0;
  for (const auto& s : spaces) {
    if (s.window != win)
      throw ShortError("short_product: level windows must agree");
    dim += s.dim;
  }
  std::vector<PolySeminorm> levels;
  for (int lv = win.lo; lv <= win.hi; ++lv) {
    int wcols = 0, frows = 0;
    for (const auto& s : spaces) {
      wcols += s.at_level(lv).w.cols;
      frows += s.at_level(lv).functionals.rows;
    }
    Mat w = mat_zero(dim, wcols);
    Mat fun = mat_zero(frows, wcols);
    int roff = 0, coff = 0, foff = 0;
    for (const auto& s : spaces) {
      const auto& p = s.at_level(lv);
      for (int i = 0; i < p.w.rows; ++i)
        for (int j = 0; j < p.w.cols; ++j) w.at(roff + i, coff + j) = p.w.at(i, j);
      for (int i = 0; i < p.functionals.rows; ++i)
        for (int j = 0; j < p.functionals.cols; ++j)
          fun.at(foff + i, coff + j) = p.functionals.at(i, j);
      roff += s.dim;
      coff += p.w.cols;
      foff += p.functionals.rows;
    }
    levels.push_back(poly_seminorm(dim, std::move(w), std::move(fun)));
  }
  return short_space(dim, win, std::move(levels));
}

ShortMultiMap short_projection(const std::vector<ShortSpace>& spaces, int k) {
  if (k < 1 || k > static_cast<int>(spaces.size()))
    throw ShortError("short_projection: index out of range");
  const ShortSpace prod = short_product(spaces);
  const ShortSpace& tgt = spaces[static_cast<size_t>(k - 1)];
  int offset = 0;
  for (int i = 0; i < k - 1; ++i) offset += spaces[static_cast<size_t>(i)].dim;
  std::vector<Rat> coeff(static_cast<size_t>(prod.dim) * tgt.dim, Rat(0));
  for (int t = 0; t < tgt.dim; ++t)
    coeff[static_cast<size_t>(offset + t) * tgt.dim + t] = 1;
  return short_map({prod}, tgt, std::move(coeff));
}

ShortMultiMap short_tuple(const std::vector<ShortSpace>& sources,
                          const std::vector<ShortMultiMap>& hs) {
  std::vector<ShortSpace> targets;
  for (const auto& h : hs) {
    if (h.sources != sources)
      throw SignatureMismatch("short_tuple: components must share the source list");
    targets.push_back(h.target);
  }
  const ShortSpace prod = short_product(targets);
  auto out = short_zero(sources, prod);
  long long src_size = 1;
  for (const auto& s : sources) src_size *= s.dim;
  int offset = 0;
  for (const auto& h : hs) {
    const int dt = h.target.dim;
    for (long long kflat = 0; kflat < src_size; ++kflat)
      for (int t = 0; t < dt; ++t)
        out.coeff[static_cast<size_t>(kflat) * prod.dim + offset + t] =
            h.coeff[static_cast<size_t>(kflat) * dt + t];
    offset += dt;
  }
  return out;
}

ShortSubspace short_kernel(const ShortMultiMap& h) {
  if (h.sources.size() != 1)
    throw ShortError("short_kernel: the map must be unary");
  const ShortSpace& B = h.sources[0];
  const int dB = B.dim, dA = h.target.dim;
  // kernel of x |-> x^T M, i.e. null space of M^T
  Mat M = mat_zero(dB, dA);
  for (int i = 0; i < dB; ++i)
    for (int t = 0; t < dA; ++t) M.at(i, t) = h.coeff[static_cast<size_t>(i) * dA + t];
  const Mat N = null_space(transpose(M));  // dB × kdim
  const int kdim = N.cols;
  std::vector<PolySeminorm> levels;
  for (int lv = B.window.lo; lv <= B.window.hi; ++lv)
    levels.push_back(poly_pullback(B.at_level(lv), N));
  ShortSpace K = short_space(kdim, B.window, std::move(levels));
  std::vector<Rat> incl(static_cast<size_t>(kdim) * dB, Rat(0));
  for (int u = 0; u < kdim; ++u)
    for (int t = 0; t < dB; ++t) incl[static_cast<size_t>(u) * dB + t] = N.at(t, u);
  return ShortSubspace{K, short_map({K}, B, std::move(incl))};
}

ShortSubspace short_equalizer(const ShortMultiMap& f, const ShortMultiMap& g) {
  if (f.sources.size() != 1 || g.sources.size() != 1)
    throw ShortError("short_equalizer: maps must be unary");
  return short_kernel(short_sub(f, g));
}

ShortMultiMap factor_through_subspace(const ShortSubspace& sub,
                                      const ShortMultiMap& j) {
  if (!(j.target == sub.include.target))
    throw SignatureMismatch("factor_through_subspace: wrong ambient space");
  const int dB = sub.include.target.dim;
  const int kdim = sub.space.dim;
  Mat N = mat_zero(dB, kdim);
  for (int u = 0; u < kdim; ++u)
    for (int t = 0; t < dB; ++t) N.at(t, u) = sub.include.coeff[static_cast<size_t>(u) * dB + t];
  auto out = short_zero(j.sources, sub.space);
  long long src_size = 1;
  for (const auto& s : j.sources) src_size *= s.dim;
  for (long long kflat = 0; kflat < src_size; ++kflat) {
    std::vector<Rat> v(static_cast<size_t>(dB));
    for (int t = 0; t < dB; ++t) v[static_cast<size_t>(t)] = j.coeff[static_cast<size_t>(kflat) * dB + t];
    const auto u = solve(N, v);
    if (!u)
      throw SignatureMismatch(
          "factor_through_subspace: map does not land in the subspace");
    for (int t = 0; t < kdim; ++t)
      out.coeff[static_cast<size_t>(kflat) * kdim + t] = (*u)[static_cast<size_t>(t)];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Projective norm

ExtRat projective_norm(const std::vector<Rat>& tensor,
                       const std::vector<PolySeminorm>& balls) {
  long long total = 1;
  for (const auto& b : balls) {
    total *= b.dim;
    if (total > 64) throw SizeBound("projective_norm: tensor dimension above 64");
  }
  if (static_cast<long long>(tensor.size()) != total)
    throw ShortError("projective_norm: tensor size mismatch");
  std::vector<std::vector<std::vector<Rat>>> verts;
  long long count = 1;
  for (const auto& b : balls) {
    verts.push_back(ball_vertices(b));
    count *= static_cast<long long>(verts.back().size());
    if (count > 4096) throw SizeBound("projective_norm: too many vertex products");
    if (verts.back().empty()) count = 0;
  }
  std::vector<std::vector<Rat>> points;
  if (count > 0) {
    std::vector<size_t> pick(balls.size(), 0);
    while (true) {
      // tensor product of the picked vertices, first factor most significant
      std::vector<Rat> acc{Rat(1)};
      for (size_t i = 0; i < balls.size(); ++i) {
        std::vector<Rat> next;
        next.reserve(acc.size() * verts[i][pick[i]].size());
        for (const Rat& a : acc)
          for (const Rat& v : verts[i][pick[i]]) next.push_back(a * v);
        acc = std::move(next);
      }
      points.push_back(std::move(acc));
      size_t q = balls.size();
      while (q > 0 && pick[q - 1] + 1 == verts[q - 1].size()) pick[--q] = 0;
      if (q == 0) break;
      ++pick[q - 1];
    }
  }
  return minkowski(points, tensor);
}

// ---------------------------------------------------------------------------
// Filtered spaces

ShortSpace filtered_embed(int dim, LevelWindow window,
                          const std::vector<Mat>& subspaces) {
  if (subspaces.size() != static_cast<size_t>(window.size()))
    throw ShortError("filtered_embed: one subspace per window level");
  for (const auto& f : subspaces)
    if (f.rows != dim) throw ShortError("filtered_embed: subspace height mismatch");
  if (rank(subspaces.front()) != dim)
    throw ShortError("filtered_embed: the filtration must start at the whole space");
  for (size_t i = 0; i + 1 < subspaces.size(); ++i) {
    const Mat& big = subspaces[i];
    const Mat& small = subspaces[i + 1];
    if (rank(big) != rank(hcat(big, small)))
      throw ShortError("filtered_embed: subspaces are not nested");
  }
  std::vector<PolySeminorm> levels;
  for (const auto& f : subspaces)
    levels.push_back(poly_seminorm(dim, column_basis(f), mat_zero(0, rank(f))));
  return short_space(dim, window, std::move(levels));
}

std::vector<Mat> filtered_extract(const ShortSpace& s) {
  std::vector<Mat> out;
  for (const auto& level : s.levels) {
    for (const Rat& v : level.functionals.a)
      if (v != 0)
        throw ShortError("filtered_extract: seminorm is not {0, inf}-valued");
    out.push_back(level.w);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Ground structure presentation

std::string ShortInstance::show_obj(const Obj& x) const {
  std::ostringstream os;
  os << "Short(dim=" << x.dim << ",window=[" << x.window.lo << ","
     << x.window.hi << "])";
  return os.str();
}

std::string ShortInstance::show_mor(const Mor& f) const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < f.sources.size(); ++i)
    os << (i ? "," : "") << f.sources[i].dim;
  os << "]->" << f.target.dim << "{";
  for (size_t i = 0; i < f.coeff.size() && i < 16; ++i)
    os << (i ? "," : "") << rat_str(f.coeff[i]);
  if (f.coeff.size() > 16) os << ",...";
  os << "}";
  return os.str();
}

}  // namespace mcat
