#include "mcat/vfinset.hpp"

#include <algorithm>
#include <numeric>

namespace mcat {

namespace {

long long checked_table_size(const std::vector<int>& sizes, long long cap) {
  long long p = 1;
  for (int s : sizes) {
    if (s == 0) return 0;
    if (p > cap / s) throw SizeBound("finite-set table exceeds the size cap");
    p *= s;
  }
  return p;
}

// Odometer over 1-based tuples with the FIRST position most significant.
// Returns false at the end (or immediately when some size is 0).
bool first_tuple(const std::vector<int>& sizes, std::vector<int>& t) {
  for (int s : sizes)
    if (s == 0) return false;
  t.assign(sizes.size(), 1);
  return true;
}

bool next_tuple(const std::vector<int>& sizes, std::vector<int>& t) {
  int i = static_cast<int>(sizes.size()) - 1;
  while (i >= 0 && t[i] == sizes[i]) t[i--] = 1;
  if (i < 0) return false;
  ++t[i];
  return true;
}

}  // namespace

int fs_apply(const MultiMap& f, const std::vector<int>& args) {
  if (args.size() != f.src_sizes.size())
    throw SignatureMismatch("fs_apply: argument count mismatch");
  long long idx = 0;
  for (size_t a = 0; a < args.size(); ++a) {
    if (args[a] < 1 || args[a] > f.src_sizes[a])
      throw SignatureMismatch("fs_apply: argument out of range");
    idx = idx * f.src_sizes[a] + (args[a] - 1);
  }
  return f.table[static_cast<size_t>(idx)];
}

MultiMap fs_map(std::vector<int> src_sizes, int tgt_size,
                std::vector<int> table) {
  long long p = 1;
  for (int s : src_sizes) {
    if (s < 0) throw SignatureMismatch("fs_map: negative source size");
    p *= s;
  }
  if (tgt_size < 0) throw SignatureMismatch("fs_map: negative target size");
  if (static_cast<long long>(table.size()) != p)
    throw SignatureMismatch("fs_map: table length does not match sources");
  for (int v : table)
    if (v < 1 || v > tgt_size)
      throw SignatureMismatch("fs_map: table value out of range");
  return MultiMap{std::move(src_sizes), tgt_size, std::move(table)};
}

std::vector<FinSetObj> FinSetInstance::source_of(const Mor& f) const {
  std::vector<Obj> out;
  out.reserve(f.src_sizes.size());
  for (int s : f.src_sizes) out.push_back(Obj{s});
  return out;
}

FinSetObj FinSetInstance::target_of(const Mor& f) const {
  return Obj{f.tgt_size};
}

MultiMap FinSetInstance::identity(const Obj& x) const {
  std::vector<int> t(static_cast<size_t>(x.size));
  std::iota(t.begin(), t.end(), 1);
  return MultiMap{{x.size}, x.size, std::move(t)};
}

MultiMap FinSetInstance::compose(const OrdMap& phi,
                                 const std::vector<Mor>& args,
                                 const Mor& outer) const {
  const int J = phi.target;
  if (static_cast<int>(args.size()) != J ||
      static_cast<int>(outer.src_sizes.size()) != J)
    throw SignatureMismatch("compose: argument count does not match the index map");
  for (int j = 0; j < J; ++j)
    if (args[j].tgt_size != outer.src_sizes[j])
      throw SignatureMismatch("compose: argument target does not match outer source");

  // slot_of[i] = (which argument, which input of it) for global input i
  const int I = phi.source;
  std::vector<std::pair<int, int>> slot_of(static_cast<size_t>(I));
  std::vector<int> seen(static_cast<size_t>(J), 0);
  for (int i = 0; i < I; ++i) {
    const int j = phi.values[i];
    slot_of[i] = {j - 1, seen[j - 1]++};
  }
  for (int j = 0; j < J; ++j)
    if (seen[j] != static_cast<int>(args[j].src_sizes.size()))
      throw SignatureMismatch("compose: argument arity does not match its fiber");

  std::vector<int> src_sizes(static_cast<size_t>(I));
  for (int i = 0; i < I; ++i)
    src_sizes[i] = args[slot_of[i].first].src_sizes[slot_of[i].second];

  const long long len = checked_table_size(src_sizes, size_cap);
  std::vector<int> table;
  table.reserve(static_cast<size_t>(len));

  std::vector<std::vector<int>> arg_in(static_cast<size_t>(J));
  for (int j = 0; j < J; ++j)
    arg_in[j].resize(args[j].src_sizes.size());
  std::vector<int> outer_in(static_cast<size_t>(J));

  std::vector<int> x;
  if (first_tuple(src_sizes, x)) {
    do {
      for (int i = 0; i < I; ++i)
        arg_in[slot_of[i].first][slot_of[i].second] = x[i];
      for (int j = 0; j < J; ++j)
        outer_in[j] = fs_apply(args[j], arg_in[j]);
      table.push_back(fs_apply(outer, outer_in));
    } while (next_tuple(src_sizes, x));
  }
  return MultiMap{std::move(src_sizes), outer.tgt_size, std::move(table)};
}

std::string FinSetInstance::show_obj(const Obj& x) const {
  return "[" + std::to_string(x.size) + "]";
}

std::string FinSetInstance::show_mor(const Mor& f) const {
  std::string out;
  for (size_t a = 0; a < f.src_sizes.size(); ++a) {
    if (a) out += "x";
    out += std::to_string(f.src_sizes[a]);
  }
  out += "->" + std::to_string(f.tgt_size) + "[";
  for (size_t i = 0; i < f.table.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(f.table[i]);
  }
  return out + "]";
}

unsigned long long FinSetInstance::hom_size(const std::vector<Obj>& xs,
                                            const Obj& y) const {
  unsigned long long p = 1;
  for (const Obj& x : xs)
    p = detail::sat_mul(p, static_cast<unsigned long long>(x.size));
  if (p == 0) return 1;  // empty domain: exactly the empty function
  if (p > 64) {
    // y^p: saturate without computing the exponent when it must overflow
    if (y.size == 0) return 0;
    if (y.size == 1) return 1;
    return std::numeric_limits<unsigned long long>::max();
  }
  return detail::sat_pow(static_cast<unsigned long long>(y.size),
                         static_cast<int>(p));
}

std::vector<MultiMap> FinSetInstance::enumerate_hom(const std::vector<Obj>& xs,
                                                    const Obj& y) const {
  const unsigned long long n = hom_size(xs, y);
  if (n > static_cast<unsigned long long>(size_cap))
    throw SizeBound("enumerate_hom: hom set exceeds the size cap");
  std::vector<int> src_sizes;
  for (const Obj& x : xs) src_sizes.push_back(x.size);
  long long p = 1;
  for (int s : src_sizes) p *= s;

  std::vector<Mor> out;
  out.reserve(static_cast<size_t>(n));
  std::vector<int> table(static_cast<size_t>(p), 1);
  if (p == 0) {
    out.push_back(MultiMap{src_sizes, y.size, {}});
    return out;
  }
  if (y.size == 0) return out;
  while (true) {
    out.push_back(MultiMap{src_sizes, y.size, table});
    int i = static_cast<int>(p) - 1;
    while (i >= 0 && table[i] == y.size) table[i--] = 1;
    if (i < 0) break;
    ++table[i];
  }
  return out;
}

std::optional<MultiMap> FinSetInstance::random_mor(const std::vector<Obj>& xs,
                                                   const Obj& y,
                                                   std::mt19937_64& rng) const {
  std::vector<int> src_sizes;
  long long p = 1;
  for (const Obj& x : xs) {
    src_sizes.push_back(x.size);
    p = x.size == 0 ? 0 : p * x.size;
    if (p > size_cap) return std::nullopt;
  }
  if (p > 0 && y.size == 0) return std::nullopt;
  std::vector<int> table(static_cast<size_t>(p));
  for (auto& v : table) v = static_cast<int>(rng() % y.size) + 1;
  return MultiMap{std::move(src_sizes), y.size, std::move(table)};
}

FinSetObj FinSetInstance::underhom(const std::vector<Obj>& xs,
                                   const Obj& z) const {
  const unsigned long long n = hom_size(xs, z);
  if (n > static_cast<unsigned long long>(size_cap))
    throw SizeBound("underhom: function set exceeds the size cap");
  return Obj{static_cast<int>(n)};
}

MultiMap FinSetInstance::ev(const std::vector<Obj>& xs, const Obj& z) const {
  const Obj uh = underhom(xs, z);
  std::vector<int> src_sizes;
  for (const Obj& x : xs) src_sizes.push_back(x.size);
  long long p = 1;
  for (int s : src_sizes) p *= s;
  src_sizes.push_back(uh.size);
  const long long len = checked_table_size(src_sizes, size_cap);

  // function h in [1, z^p] encodes its value table in base z, the value on
  // the first argument tuple in the most significant digit
  std::vector<long long> pow(static_cast<size_t>(p) + 1, 1);
  for (long long q = 1; q <= p; ++q) pow[q] = pow[q - 1] * z.size;

  std::vector<int> table;
  table.reserve(static_cast<size_t>(len));
  std::vector<int> t;
  if (first_tuple(src_sizes, t)) {
    do {
      long long q = 0;  // index of the argument tuple among the p tuples
      for (size_t a = 0; a + 1 < src_sizes.size(); ++a)
        q = q * src_sizes[a] + (t[a] - 1);
      const long long h = t.back() - 1;
      table.push_back(static_cast<int>(h / pow[p - 1 - q] % z.size) + 1);
    } while (next_tuple(src_sizes, t));
  }
  return MultiMap{std::move(src_sizes), z.size, std::move(table)};
}

MultiMap FinSetInstance::curry(const Mor& f, int n) const {
  if (n < 0 || n > static_cast<int>(f.src_sizes.size()))
    throw SignatureMismatch("curry: bad split point");
  const std::vector<int> inner(f.src_sizes.begin(), f.src_sizes.begin() + n);
  const std::vector<int> outer(f.src_sizes.begin() + n, f.src_sizes.end());
  std::vector<Obj> inner_objs;
  for (int s : inner) inner_objs.push_back(Obj{s});
  const Obj uh = underhom(inner_objs, Obj{f.tgt_size});

  const long long len = checked_table_size(outer, size_cap);
  std::vector<int> table;
  table.reserve(static_cast<size_t>(len));

  std::vector<int> y;
  std::vector<int> full(f.src_sizes.size());
  if (first_tuple(outer, y)) {
    do {
      for (size_t a = 0; a < y.size(); ++a) full[static_cast<size_t>(n) + a] = y[a];
      long long acc = 0;
      std::vector<int> x;
      if (first_tuple(inner, x)) {
        do {
          for (int a = 0; a < n; ++a) full[static_cast<size_t>(a)] = x[a];
          acc = acc * f.tgt_size + (fs_apply(f, full) - 1);
        } while (next_tuple(inner, x));
      }
      table.push_back(static_cast<int>(acc) + 1);
    } while (next_tuple(outer, y));
  }
  return MultiMap{outer, uh.size, std::move(table)};
}

FinSetObj FinSetInstance::product(const std::vector<Obj>& xs) const {
  std::vector<int> sizes;
  for (const Obj& x : xs) sizes.push_back(x.size);
  return Obj{static_cast<int>(checked_table_size(sizes, size_cap))};
}

MultiMap FinSetInstance::projection(const std::vector<Obj>& xs, int k) const {
  if (k < 1 || k > static_cast<int>(xs.size()))
    throw SignatureMismatch("projection: index out of range");
  const Obj P = product(xs);
  long long stride = 1;
  for (size_t a = static_cast<size_t>(k); a < xs.size(); ++a)
    stride *= xs[a].size;
  std::vector<int> table(static_cast<size_t>(P.size));
  for (long long e = 0; e < P.size; ++e)
    table[static_cast<size_t>(e)] =
        static_cast<int>(e / stride % xs[static_cast<size_t>(k) - 1].size) + 1;
  return MultiMap{{P.size}, xs[static_cast<size_t>(k) - 1].size,
                  std::move(table)};
}

MultiMap FinSetInstance::tuple_into_product(const std::vector<Obj>& sources,
                                            const std::vector<Mor>& hs) const {
  std::vector<int> src_sizes;
  for (const Obj& x : sources) src_sizes.push_back(x.size);
  std::vector<Obj> targets;
  for (const Mor& h : hs) {
    if (h.src_sizes != src_sizes)
      throw SignatureMismatch("tuple_into_product: components must share the source list");
    targets.push_back(Obj{h.tgt_size});
  }
  const Obj P = product(targets);
  const long long len = checked_table_size(src_sizes, size_cap);
  std::vector<int> table;
  table.reserve(static_cast<size_t>(len));
  std::vector<int> x;
  if (first_tuple(src_sizes, x)) {
    do {
      long long acc = 0;
      for (const Mor& h : hs) acc = acc * h.tgt_size + (fs_apply(h, x) - 1);
      table.push_back(static_cast<int>(acc) + 1);
    } while (next_tuple(src_sizes, x));
  }
  return MultiMap{std::move(src_sizes), P.size, std::move(table)};
}

EqualizerData<FinSetInstance> FinSetInstance::equalizer(const Mor& f,
                                                        const Mor& g) const {
  if (f.src_sizes.size() != 1 || g.src_sizes.size() != 1)
    throw SignatureMismatch("equalizer: both morphisms must be unary");
  if (f.src_sizes != g.src_sizes || f.tgt_size != g.tgt_size)
    throw SignatureMismatch("equalizer: the morphisms are not parallel");
  std::vector<int> members;
  for (int a = 1; a <= f.src_sizes[0]; ++a)
    if (f.table[a - 1] == g.table[a - 1]) members.push_back(a);
  const int n = static_cast<int>(members.size());
  return EqualizerData<FinSetInstance>{
      Obj{n}, MultiMap{{n}, f.src_sizes[0], std::move(members)}};
}

MultiMap FinSetInstance::factor_through_equalizer(
    const EqualizerData<FinSetInstance>& eq, const Mor& j) const {
  if (j.tgt_size != eq.include.tgt_size)
    throw SignatureMismatch("factor_through_equalizer: target mismatch");
  std::vector<int> table;
  table.reserve(j.table.size());
  for (int v : j.table) {
    const auto it =
        std::lower_bound(eq.include.table.begin(), eq.include.table.end(), v);
    if (it == eq.include.table.end() || *it != v)
      throw SignatureMismatch(
          "factor_through_equalizer: morphism does not land in the equalizer");
    table.push_back(static_cast<int>(it - eq.include.table.begin()) + 1);
  }
  return MultiMap{j.src_sizes, eq.obj.size, std::move(table)};
}

FinSetObj fs_underhom(const std::vector<FinSetObj>& xs, const FinSetObj& z) {
  return FinSetInstance{}.underhom(xs, z);
}

MultiMap fs_ev(const std::vector<FinSetObj>& xs, const FinSetObj& z) {
  return FinSetInstance{}.ev(xs, z);
}

FinSetObj fs_product(const std::vector<FinSetObj>& xs) {
  return FinSetInstance{}.product(xs);
}

EqualizerData<FinSetInstance> fs_equalizer(const MultiMap& f,
                                           const MultiMap& g) {
  return FinSetInstance{}.equalizer(f, g);
}

}  // namespace mcat
