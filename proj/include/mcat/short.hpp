#pragma once

#include "mcat/multicat.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace mcat {

using Rat = boost::multiprecision::cpp_rational;

// Raised when a seminorm computation needs a bounded unit ball but the
// functionals do not pin one down.
struct NormBallUnbounded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised on malformed seminorm/space/map data.
struct ShortError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Extended rationals: values of generalized seminorms.

struct ExtRat {
  bool infinite = false;
  Rat value = 0;

  friend bool operator==(const ExtRat& a, const ExtRat& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
  friend bool operator<(const ExtRat& a, const ExtRat& b) {
    if (a.infinite) return false;
    if (b.infinite) return true;
    return a.value < b.value;
  }
  friend bool operator<=(const ExtRat& a, const ExtRat& b) {
    return a == b || a < b;
  }
  friend bool operator>(const ExtRat& a, const ExtRat& b) { return b < a; }
  friend bool operator>=(const ExtRat& a, const ExtRat& b) { return b <= a; }
  friend bool operator!=(const ExtRat& a, const ExtRat& b) { return !(a == b); }
};

inline ExtRat ext(Rat v) { return ExtRat{false, std::move(v)}; }
inline ExtRat ext_inf() { return ExtRat{true, 0}; }
std::string show(const ExtRat& v);

// ---------------------------------------------------------------------------
// Exact linear algebra over the rationals.

struct Mat {
  int rows = 0, cols = 0;
  std::vector<Rat> a;  // row-major

  Rat& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Rat& at(int r, int c) const {
    return a[static_cast<size_t>(r) * cols + c];
  }

  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
  friend bool operator<(const Mat& x, const Mat& y) {
    return std::tie(x.rows, x.cols, x.a) < std::tie(y.rows, y.cols, y.a);
  }
  friend bool operator>(const Mat& x, const Mat& y) { return y < x; }
  friend bool operator<=(const Mat& x, const Mat& y) { return !(y < x); }
  friend bool operator>=(const Mat& x, const Mat& y) { return !(x < y); }
};

Mat mat(int rows, int cols, std::vector<Rat> entries);
Mat mat_zero(int rows, int cols);
Mat mat_identity(int n);
Mat mat_mul(const Mat& x, const Mat& y);
std::vector<Rat> mat_vec(const Mat& m, const std::vector<Rat>& v);  // m · v
int rank(Mat m);
// columns spanning the column space (a subset of the input columns, reduced)
Mat column_basis(const Mat& m);
// columns spanning {v : m · v = 0}
Mat null_space(const Mat& m);
// one solution of m · v = b, if any
std::optional<std::vector<Rat>> solve(const Mat& m, const std::vector<Rat>& b);
bool same_column_space(const Mat& x, const Mat& y);

// Exact linear program min c·z subject to A z = b, z >= 0 (two-phase primal
// simplex with Bland's pivoting rule).
struct LpResult {
  bool feasible = false;
  Rat value = 0;
  std::vector<Rat> solution;
};
LpResult lp_minimize(const Mat& A, const std::vector<Rat>& b,
                     const std::vector<Rat>& c);

// ---------------------------------------------------------------------------
// Polyhedral generalized seminorms.
//
// value(x) = infinity off the column span of `w`; on it, max_i |f_i · c|
// where x = w · c.  Functionals act on w-coordinates.

struct PolySeminorm {
  int dim = 0;          // ambient dimension
  Mat w;                // dim × k, independent columns after validation
  Mat functionals;      // rows act on k-dimensional w-coordinates

  friend bool operator==(const PolySeminorm& a, const PolySeminorm& b) {
    return std::tie(a.dim, a.w, a.functionals) ==
           std::tie(b.dim, b.w, b.functionals);
  }
  friend bool operator<(const PolySeminorm& a, const PolySeminorm& b) {
    return std::tie(a.dim, a.w, a.functionals) <
           std::tie(b.dim, b.w, b.functionals);
  }
  friend bool operator>(const PolySeminorm& a, const PolySeminorm& b) {
    return b < a;
  }
  friend bool operator<=(const PolySeminorm& a, const PolySeminorm& b) {
    return !(b < a);
  }
  friend bool operator>=(const PolySeminorm& a, const PolySeminorm& b) {
    return !(a < b);
  }
};

PolySeminorm poly_seminorm(int dim, Mat w, Mat functionals);
// the everywhere-finite seminorm max_i |row_i · x| in ambient coordinates
PolySeminorm poly_full(int dim, Mat ambient_functionals);
ExtRat seminorm_value(const PolySeminorm& s, const std::vector<Rat>& x);
// vertices of {x in span w : value(x) <= 1}, in ambient coordinates;
// throws NormBallUnbounded when the ball is unbounded within span w
std::vector<std::vector<Rat>> ball_vertices(const PolySeminorm& s);
// seminorm of t(u) as a function of u (t maps u-space into s's ambient space)
PolySeminorm poly_pullback(const PolySeminorm& s, const Mat& t);
// Minkowski functional of the convex balanced hull of the given points
ExtRat minkowski(const std::vector<std::vector<Rat>>& points,
                 const std::vector<Rat>& x);

// ---------------------------------------------------------------------------
// Short spaces: a clamped window of levels, one polyhedral seminorm each.

struct LevelWindow {
  int lo = 0, hi = 0;

  int clamp(long long l) const {
    return static_cast<int>(l < lo ? lo : (l > hi ? hi : l));
  }
  int size() const { return hi - lo + 1; }

  friend bool operator==(const LevelWindow&, const LevelWindow&) = default;
  friend auto operator<=>(const LevelWindow&, const LevelWindow&) = default;
};

struct ShortSpace {
  int dim = 0;
  LevelWindow window;
  std::vector<PolySeminorm> levels;  // one per window level, lo first

  const PolySeminorm& at_level(long long l) const {
    return levels[static_cast<size_t>(window.clamp(l) - window.lo)];
  }

  friend bool operator==(const ShortSpace& a, const ShortSpace& b) {
    return std::tie(a.dim, a.window, a.levels) ==
           std::tie(b.dim, b.window, b.levels);
  }
  friend bool operator<(const ShortSpace& a, const ShortSpace& b) {
    return std::tie(a.dim, a.window, a.levels) <
           std::tie(b.dim, b.window, b.levels);
  }
  friend bool operator>(const ShortSpace& a, const ShortSpace& b) {
    return b < a;
  }
  friend bool operator<=(const ShortSpace& a, const ShortSpace& b) {
    return !(b < a);
  }
  friend bool operator>=(const ShortSpace& a, const ShortSpace& b) {
    return !(a < b);
  }
};

// validates per-level dimensions and that the lowest level is finite on the
// whole space (so every vector has a finite seminorm somewhere)
ShortSpace short_space(int dim, LevelWindow window,
                       std::vector<PolySeminorm> levels);
ShortSpace trivial_space(PolySeminorm s);  // window {0}
ExtRat seminorm_eval(const ShortSpace& s, const std::vector<Rat>& x,
                     long long l);

// ---------------------------------------------------------------------------
// Multilinear maps given by a dense coefficient tensor.  The entry layout is
// (k_1, ..., k_n, t) with the first source index most significant and the
// target coordinate fastest.

struct ShortMultiMap {
  std::vector<ShortSpace> sources;
  ShortSpace target;
  std::vector<Rat> coeff;

  friend bool operator==(const ShortMultiMap& a, const ShortMultiMap& b) {
    return std::tie(a.sources, a.target, a.coeff) ==
           std::tie(b.sources, b.target, b.coeff);
  }
  friend bool operator<(const ShortMultiMap& a, const ShortMultiMap& b) {
    return std::tie(a.sources, a.target, a.coeff) <
           std::tie(b.sources, b.target, b.coeff);
  }
  friend bool operator>(const ShortMultiMap& a, const ShortMultiMap& b) {
    return b < a;
  }
  friend bool operator<=(const ShortMultiMap& a, const ShortMultiMap& b) {
    return !(b < a);
  }
  friend bool operator>=(const ShortMultiMap& a, const ShortMultiMap& b) {
    return !(a < b);
  }
};

ShortMultiMap short_map(std::vector<ShortSpace> sources, ShortSpace target,
                        std::vector<Rat> coeff);
ShortMultiMap short_identity(const ShortSpace& s);
ShortMultiMap short_zero(std::vector<ShortSpace> sources, ShortSpace target);
std::vector<Rat> short_apply(const ShortMultiMap& f,
                             const std::vector<std::vector<Rat>>& args);
// freeze argument k (1-based) at the given vector
ShortMultiMap partial_apply(const ShortMultiMap& f, int k,
                            const std::vector<Rat>& x);
ShortMultiMap short_scale(const ShortMultiMap& f, const Rat& c);
ShortMultiMap short_sub(const ShortMultiMap& f, const ShortMultiMap& g);
ShortMultiMap short_compose(const OrdMap& phi,
                            const std::vector<ShortMultiMap>& gs,
                            const ShortMultiMap& f);

// ---------------------------------------------------------------------------
// Operator seminorms and shortness.

// sup over window level tuples and source-ball vertex tuples of the target
// seminorm of f(vertices) at the clamped level sum + l
ExtRat hom_seminorm(const ShortMultiMap& f, long long l);

struct ShortWitness {
  std::vector<long long> lambda;          // one level per entry
  std::vector<std::vector<Rat>> vertices;  // one source vector per entry
  ExtRat value;                            // target seminorm there
};

struct ShortCheck {
  bool is_short = false;
  ExtRat norm;
  std::optional<ShortWitness> witness;  // present when not short
};
ShortCheck check_short(const ShortMultiMap& f);

// ---------------------------------------------------------------------------
// Products, kernels, limits.

ShortSpace short_product(const std::vector<ShortSpace>& spaces);
ShortMultiMap short_projection(const std::vector<ShortSpace>& spaces, int k);
// multi-entry tupling: the hs share a source list; result lands in the product
ShortMultiMap short_tuple(const std::vector<ShortSpace>& sources,
                          const std::vector<ShortMultiMap>& hs);

struct ShortSubspace {
  ShortSpace space;
  ShortMultiMap include;  // unary inclusion into the ambient space
};

ShortSubspace short_kernel(const ShortMultiMap& h);  // h unary
ShortSubspace short_equalizer(const ShortMultiMap& f, const ShortMultiMap& g);
// unique n with n · include = j, for j (multi-entry) landing in the subspace
ShortMultiMap factor_through_subspace(const ShortSubspace& sub,
                                      const ShortMultiMap& j);

// ---------------------------------------------------------------------------
// Projective norm of a tensor (trivial window): Minkowski functional of the
// hull of vertex products of the unit balls.

ExtRat projective_norm(const std::vector<Rat>& tensor,
                       const std::vector<PolySeminorm>& balls);

// ---------------------------------------------------------------------------
// Filtered spaces as {0, infinity}-valued short spaces.

// subspaces[i] spans F^{window.lo + i}; they must be nested decreasing and
// start at the whole space
ShortSpace filtered_embed(int dim, LevelWindow window,
                          const std::vector<Mat>& subspaces);
std::vector<Mat> filtered_extract(const ShortSpace& s);

// ---------------------------------------------------------------------------
// The ground structure of short spaces and short multilinear maps.

struct ShortInstance {
  using Obj = ShortSpace;
  using Mor = ShortMultiMap;

  std::vector<Obj> source_of(const Mor& f) const { return f.sources; }
  Obj target_of(const Mor& f) const { return f.target; }
  Mor identity(const Obj& x) const { return short_identity(x); }
  Mor compose(const OrdMap& phi, const std::vector<Mor>& gs,
              const Mor& f) const {
    return short_compose(phi, gs, f);
  }
  std::string show_obj(const Obj& x) const;
  std::string show_mor(const Mor& f) const;

  Obj product(const std::vector<Obj>& xs) const { return short_product(xs); }
  Mor projection(const std::vector<Obj>& xs, int k) const {
    return short_projection(xs, k);
  }
  Mor tuple_into_product(const std::vector<Obj>& sources,
                         const std::vector<Mor>& hs) const {
    return short_tuple(sources, hs);
  }
  EqualizerData<ShortInstance> equalizer(const Mor& f, const Mor& g) const {
    auto sub = short_equalizer(f, g);
    return EqualizerData<ShortInstance>{std::move(sub.space),
                                        std::move(sub.include)};
  }
  Mor factor_through_equalizer(const EqualizerData<ShortInstance>& e,
                               const Mor& j) const {
    return factor_through_subspace(ShortSubspace{e.obj, e.include}, j);
  }
};

static_assert(Ground<ShortInstance>);
static_assert(CompleteGround<ShortInstance>);

}  // namespace mcat
