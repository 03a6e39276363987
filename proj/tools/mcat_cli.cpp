// Command-line front end: load serialized structures, run the law checkers
// and constructions, and emit machine-readable reports.
//
// Exit codes: 0 all checks passed, 1 mathematical failure, 2 input error,
// 3 size bound exceeded.  Reports are JSON lines by default; pass
// --format text for a human rendering.

#include "CLI11.hpp"

#include "mcat/acceptance.hpp"
#include "mcat/homobj.hpp"
#include "mcat/json_io.hpp"
#include "mcat/prop.hpp"
#include "mcat/short.hpp"
#include "mcat/table_mc.hpp"
#include "mcat/vfinset.hpp"

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace mcat;
using FS = FinSetInstance;
using FsWord = Word<FS>;

constexpr int kPass = 0;
constexpr int kMathFailure = 1;
constexpr int kInputError = 2;
constexpr int kSizeBound = 3;

const FS fs;

struct GlobalOpts {
  long long bounds = 1000000;   // size guard and enumeration cap
  std::string format = "json";  // json | text
  std::uint64_t seed = 2026;
  std::string fixture_dir = "fixtures";
};

struct Stopwatch {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

double rounded(double s) { return static_cast<double>(static_cast<long long>(s * 1000.0)) / 1000.0; }

struct Reporter {
  bool json = true;

  void line(const Json& record, const std::string& text) const {
    if (json)
      std::cout << record.dump() << "\n";
    else
      std::cout << text << "\n";
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw JsonError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// content digest so reports pin their inputs (FNV-1a, 64-bit)
std::string digest_of(const std::string& raw) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : raw) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

void guard(long long measured, long long bound, const std::string& what) {
  if (measured > bound)
    throw SizeBound(what + " is " + std::to_string(measured) +
                    ", above --bounds " + std::to_string(bound));
}

long long category_workload(const VCategory<FS>& c) {
  long long total = 0;
  for (const auto& x : c.quiver.objects)
    for (const auto& y : c.quiver.objects) {
      const auto it = c.quiver.homobj.find({x, y});
      if (it == c.quiver.homobj.end()) continue;
      total = std::max(total, static_cast<long long>(it->second.size));
      for (const auto& z : c.quiver.objects) {
        const auto jt = c.quiver.homobj.find({y, z});
        if (jt != c.quiver.homobj.end())
          total = std::max(total, static_cast<long long>(it->second.size) *
                                      jt->second.size);
      }
    }
  return total;
}

Json extrat_to_json(const ExtRat& v) {
  return v.infinite ? Json("inf") : rat_to_json(v.value);
}

std::string extrat_text(const ExtRat& v) {
  return v.infinite ? "inf" : extrat_to_json(v).get<std::string>();
}

// --- verdict plumbing for `check` -------------------------------------------

struct CheckRun {
  const GlobalOpts& g;
  const Reporter& rep;
  std::string input;
  std::string digest;
  bool all_ok = true;

  void verdict(const std::string& what, bool ok, long long passed,
               long long skipped, const std::string& witness, double secs) {
    all_ok = all_ok && ok;
    Json r{{"command", "check"}, {"input", input},   {"digest", digest},
           {"check", what},      {"passed", ok},     {"instances", passed},
           {"skipped", skipped}, {"seconds", rounded(secs)}};
    r["witness"] = witness.empty() ? Json(nullptr) : Json(witness);
    std::ostringstream os;
    os << "check " << what << ": " << (ok ? "pass" : "FAIL") << " (" << passed
       << " instances";
    if (skipped > 0) os << ", " << skipped << " skipped";
    os << ")";
    if (!witness.empty()) os << " witness: " << witness;
    rep.line(r, os.str());
  }

  void report(const std::string& what, const CheckReport& r, double secs) {
    std::string witness;
    if (!r.failures.empty())
      witness = r.failures.front().law + ": " + r.failures.front().detail;
    verdict(what, r.ok(), r.total_passed(), r.skipped, witness, secs);
  }
};

// sampled seminorm laws for a serialized space: exact homogeneity and the
// triangle inequality at every level
CheckReport check_space(const ShortSpace& s, std::uint64_t seed) {
  CheckReport rep;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-8, 8), den(1, 8);
  const auto rand_vec = [&] {
    std::vector<Rat> v(static_cast<size_t>(s.dim));
    for (auto& x : v) x = Rat(num(rng)) / Rat(den(rng));
    return v;
  };
  const auto scale = [&](const std::vector<Rat>& v, const Rat& c) {
    auto out = v;
    for (auto& x : out) x *= c;
    return out;
  };
  const auto add = [&](const std::vector<Rat>& a, const std::vector<Rat>& b) {
    auto out = a;
    for (size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
  };
  for (int l = s.window.lo; l <= s.window.hi; ++l)
    for (int t = 0; t < 20; ++t) {
      const auto x = rand_vec();
      const auto y = rand_vec();
      const Rat c = Rat(num(rng)) / Rat(den(rng));
      const ExtRat nx = seminorm_eval(s, x, l);
      const ExtRat ny = seminorm_eval(s, y, l);
      const ExtRat ncx = seminorm_eval(s, scale(x, c), l);
      const bool hom = (c == 0)
                           ? (!ncx.infinite && ncx.value == 0)
                           : (ncx.infinite == nx.infinite &&
                              (nx.infinite ||
                               ncx.value == abs(c) * nx.value));
      rep.record(hom, "homogeneity",
                 [&] { return "level " + std::to_string(l); });
      const ExtRat nsum = seminorm_eval(s, add(x, y), l);
      const bool tri = nx.infinite || ny.infinite ||
                       (!nsum.infinite && nsum.value <= nx.value + ny.value);
      rep.record(tri, "triangle",
                 [&] { return "level " + std::to_string(l); });
    }
  return rep;
}

int run_check(const std::string& path, const GlobalOpts& g,
              const Reporter& rep) {
  const std::string raw = slurp(path);
  const Json j = Json::parse(raw, nullptr, true, true);
  CheckRun run{g, rep, path, digest_of(raw)};
  std::string kind;
  if (j.contains("kind") && j.at("kind").is_string())
    kind = j.at("kind").get<std::string>();
  Stopwatch total;

  if (kind == "instance") {
    const auto entries = [&](const char* key) -> long long {
      return j.contains(key) && j.at(key).is_array()
                 ? static_cast<long long>(j.at(key).size())
                 : 0;
    };
    guard(entries("mors") + entries("composites"), g.bounds, "table size");
    const TableInstance v = instance_from_json(j);
    AxiomBounds b;
    b.seed = g.seed;
    Stopwatch w1;
    run.report("multicategory-axioms", check_axioms(v, v.objects(), b),
               w1.seconds());
    Stopwatch w2;
    run.report("symmetric-action", check_symmetric_action(v, v.objects(), b),
               w2.seconds());
  } else if (kind == "category") {
    const auto c = category_from_json(j);
    guard(category_workload(c), g.bounds, "hom workload");
    Stopwatch w;
    run.report("category-laws", check_category(fs, c), w.seconds());
  } else if (kind == "functor") {
    const auto f = functor_from_json(j);
    for (const auto& s : f.sources)
      guard(category_workload(s), g.bounds, "hom workload");
    guard(category_workload(f.target), g.bounds, "hom workload");
    Stopwatch w;
    run.report("functor-laws", check_functor(fs, f), w.seconds());
  } else if (kind == "transformation") {
    const auto t = transformation_from_json(j);
    for (const auto& s : t.source.sources)
      guard(category_workload(s), g.bounds, "hom workload");
    guard(category_workload(t.source.target), g.bounds, "hom workload");
    Stopwatch w1;
    run.report("source-functor-laws", check_functor(fs, t.source),
               w1.seconds());
    Stopwatch w2;
    run.report("target-functor-laws", check_functor(fs, t.target),
               w2.seconds());
    Stopwatch w3;
    run.report("naturality", check_naturality(fs, t), w3.seconds());
  } else if (kind == "short-map") {
    const auto m = short_map_from_json(j);
    long long cells = 1;
    for (const auto& s : m.sources) cells *= std::max(s.dim, 1);
    guard(cells * std::max(m.target.dim, 1), g.bounds, "tensor size");
    Stopwatch w;
    const ShortCheck chk = check_short(m);
    std::string witness;
    if (chk.witness.has_value())
      witness = "seminorm " + extrat_text(chk.witness->value) +
                " at a unit-ball vertex tuple";
    run.verdict("shortness", chk.is_short, 1, 0, witness, w.seconds());
  } else if (kind == "short-space") {
    const auto s = space_from_json(j);
    guard(s.dim, g.bounds, "dimension");
    Stopwatch w;
    run.report("seminorm-laws", check_space(s, g.seed), w.seconds());
  } else if (kind == "prop-morphism") {
    Stopwatch w;
    prop_morphism_from_json(j);  // structural validation happens on load
    run.verdict("prop-structure", true, 1, 0, "", w.seconds());
  } else if (kind == "ordmap") {
    Stopwatch w;
    ordmap_from_json(j);
    run.verdict("ordmap-structure", true, 1, 0, "", w.seconds());
  } else if (kind == "multimap") {
    Stopwatch w;
    multimap_from_json(j);
    run.verdict("multimap-structure", true, 1, 0, "", w.seconds());
  } else {
    throw JsonError("unknown kind '" + kind + "' in " + path);
  }

  Json summary{{"command", "check"},
               {"input", path},
               {"digest", run.digest},
               {"ok", run.all_ok},
               {"seconds", rounded(total.seconds())}};
  rep.line(summary, std::string("check: ") + (run.all_ok ? "pass" : "FAIL"));
  return run.all_ok ? kPass : kMathFailure;
}

// --- `build` -----------------------------------------------------------------

void expect_paths(const std::vector<std::string>& paths, std::size_t n,
                  const std::string& kind) {
  if (paths.size() != n)
    throw JsonError("build " + kind + " expects " + std::to_string(n) +
                    " input file(s), got " + std::to_string(paths.size()));
}

FsWord word_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw JsonError(where + ": expected an array of sizes");
  FsWord w;
  for (const Json& v : j) {
    if (!v.is_number_integer() || v.get<long long>() < 0)
      throw JsonError(where + ": sizes must be nonnegative integers");
    w.push_back(FinSetObj{v.get<int>()});
  }
  return w;
}

int run_build(const std::string& kind, const std::vector<std::string>& paths,
              const std::string& out, const std::string& side, long long level,
              const GlobalOpts& g, const Reporter& rep) {
  Stopwatch watch;
  Json digests = Json::array();
  std::vector<Json> inputs;
  for (const auto& p : paths) {
    const std::string raw = slurp(p);
    digests.push_back(digest_of(raw));
    inputs.push_back(Json::parse(raw, nullptr, true, true));
  }

  Json artifact;
  Json result;
  std::string text;

  if (kind == "fv-hom") {
    expect_paths(paths, 1, kind);
    const Json& q = inputs[0];
    if (q.value("kind", "") != "word-pair")
      throw JsonError("build fv-hom expects a word-pair file");
    const FsWord x = word_from_json(q.at("source"), "word-pair source");
    const FsWord y = word_from_json(q.at("target"), "word-pair target");
    const unsigned long long size = fv_hom_size(fs, x, y);
    if (size > static_cast<unsigned long long>(g.bounds))
      throw SizeBound("free hom set is " + std::to_string(size) +
                      ", above --bounds " + std::to_string(g.bounds));
    Json mors = Json::array();
    for (const auto& m : fv_enumerate_hom(fs, x, y, g.bounds))
      mors.push_back(prop_morphism_to_json(m));
    artifact = Json{{"kind", "fv-hom"},
                    {"source", q.at("source")},
                    {"target", q.at("target")},
                    {"size", size},
                    {"morphisms", mors}};
    result = Json{{"size", size}};
    text = "fv-hom size " + std::to_string(size);
  } else if (kind == "end-hom") {
    expect_paths(paths, 2, kind);
    const auto f = functor_from_json(inputs[0]);
    const auto h = functor_from_json(inputs[1]);
    for (const auto* fn : {&f, &h}) {
      for (const auto& s : fn->sources)
        guard(category_workload(s), g.bounds, "hom workload");
      guard(category_workload(fn->target), g.bounds, "hom workload");
    }
    const auto e = end_hom(fs, f, h, g.bounds);
    Json tuples = Json::array();
    Json families = Json::array();
    for (const auto& t : e.tuples) tuples.push_back(t);
    for (const auto& p : fs.enumerate_hom({}, e.obj)) {
      Json fam = Json::array();
      for (const auto& t : e.tuples)
        fam.push_back(
            fs_apply(compose1(fs, p, end_projection(fs, e, t)), {}));
      families.push_back(fam);
    }
    artifact = Json{{"kind", "end-hom"},
                    {"size", e.obj.size},
                    {"tuples", tuples},
                    {"families", families}};
    result = Json{{"size", e.obj.size}};
    text = "end-hom size " + std::to_string(e.obj.size);
  } else if (kind == "hom-category") {
    expect_paths(paths, 2, kind);
    const auto b = category_from_json(inputs[0]);
    const auto c = category_from_json(inputs[1]);
    guard(category_workload(b), g.bounds, "hom workload");
    guard(category_workload(c), g.bounds, "hom workload");
    const auto hc = hom_category(fs, {b}, c, g.bounds, g.bounds);
    artifact = Json{{"kind", "hom-category"},
                    {"functors", hc.functors.size()},
                    {"category", category_to_json(hc.category)}};
    result = Json{{"functors", hc.functors.size()},
                  {"objects", hc.category.quiver.objects.size()}};
    text = "hom-category with " + std::to_string(hc.functors.size()) +
           " functors";
  } else if (kind == "vcat-product") {
    std::vector<VCategory<FS>> cats;
    for (const auto& in : inputs) {
      cats.push_back(category_from_json(in));
      guard(category_workload(cats.back()), g.bounds, "hom workload");
    }
    long long objects = 1;
    for (const auto& c : cats)
      objects *= static_cast<long long>(c.quiver.objects.size());
    guard(objects, g.bounds, "product object count");
    const auto prod = vcat_product(fs, cats);
    artifact = category_to_json(prod.category);
    result = Json{{"objects", prod.category.quiver.objects.size()}};
    text = "vcat-product with " +
           std::to_string(prod.category.quiver.objects.size()) + " objects";
  } else if (kind == "vcat-equalizer") {
    expect_paths(paths, 2, kind);
    const auto f = functor_from_json(inputs[0]);
    const auto h = functor_from_json(inputs[1]);
    for (const auto* fn : {&f, &h}) {
      for (const auto& s : fn->sources)
        guard(category_workload(s), g.bounds, "hom workload");
      guard(category_workload(fn->target), g.bounds, "hom workload");
    }
    const auto eqz = vcat_equalizer(fs, f, h);
    artifact = Json{{"kind", "vcat-equalizer"},
                    {"category", category_to_json(eqz.category)},
                    {"include", functor_to_json(eqz.include)}};
    result = Json{{"objects", eqz.category.quiver.objects.size()}};
    text = "vcat-equalizer with " +
           std::to_string(eqz.category.quiver.objects.size()) + " objects";
  } else if (kind == "whisker") {
    expect_paths(paths, 2, kind);
    const auto f = functor_from_json(inputs[0]);
    if (f.sources.size() != 1)
      throw JsonError("build whisker expects a unary functor");
    const auto c = category_from_json(inputs[1]);
    for (const auto& cat : {f.sources[0], f.target, c})
      guard(category_workload(cat), g.bounds, "hom workload");
    MultiEntryFunctor<FS> w;
    if (side == "left") {
      // plug F : A -> B into the source: Hom(B; C) -> Hom(A; C)
      const auto outer = hom_category(fs, {f.target}, c, g.bounds, g.bounds);
      const auto image = hom_category(fs, {f.sources[0]}, c, g.bounds,
                                      g.bounds);
      w = left_whisker(fs, identity_map(1), {f}, outer, image);
    } else {
      // compose with H : C -> D after the target: Hom(B; C) -> Hom(B; D)
      const auto inner = hom_category(fs, {c}, f.sources[0], g.bounds,
                                      g.bounds);
      const auto image = hom_category(fs, {c}, f.target, g.bounds, g.bounds);
      w = right_whisker(fs, identity_map(1), f, {inner}, image);
    }
    artifact = functor_to_json(w);
    result = Json{{"objects", w.obj_map.size()}};
    text = std::string(side) + " whisker on " +
           std::to_string(w.obj_map.size()) + " objects";
  } else if (kind == "short-norm") {
    expect_paths(paths, 1, kind);
    const auto m = short_map_from_json(inputs[0]);
    const ExtRat v = hom_seminorm(m, level);
    artifact = Json{{"kind", "short-norm"},
                    {"level", level},
                    {"value", extrat_to_json(v)}};
    result = Json{{"value", extrat_to_json(v)}};
    text = "short-norm " + extrat_text(v) + " at level " +
           std::to_string(level);
  } else if (kind == "projective-norm") {
    expect_paths(paths, 1, kind);
    const Json& q = inputs[0];
    if (q.value("kind", "") != "projective-query")
      throw JsonError("build projective-norm expects a projective-query file");
    std::vector<PolySeminorm> balls;
    long long cells = 1;
    for (const Json& sj : q.at("spaces")) {
      const ShortSpace s = space_from_json(sj);
      balls.push_back(s.at_level(level));
      cells *= std::max(s.dim, 1);
    }
    guard(cells, g.bounds, "tensor size");
    std::vector<Rat> tensor;
    for (const Json& e : q.at("tensor")) tensor.push_back(rat_from_json(e));
    const ExtRat v = projective_norm(tensor, balls);
    artifact = Json{{"kind", "projective-norm"},
                    {"level", level},
                    {"value", extrat_to_json(v)}};
    result = Json{{"value", extrat_to_json(v)}};
    text = "projective-norm " + extrat_text(v);
  } else {
    throw JsonError("unknown build kind '" + kind + "'");
  }

  if (!out.empty()) save_json_file(out, artifact);
  Json record{{"command", "build"},   {"kind", kind},
              {"inputs", paths},      {"digests", digests},
              {"result", result},     {"seconds", rounded(watch.seconds())}};
  if (!out.empty())
    record["out"] = out;
  else
    record["artifact"] = artifact;
  rep.line(record, text + (out.empty() ? "" : " -> " + out));
  return kPass;
}

// --- `acceptance` -------------------------------------------------------------

int run_acceptance_cmd(const GlobalOpts& g, const Reporter& rep) {
  AcceptanceOptions opt;
  opt.seed = g.seed;
  opt.candidate_cap = g.bounds;
  opt.tuple_cap = g.bounds;
  const auto results = run_acceptance(opt);
  int passed = 0, failed = 0, skipped = 0;
  for (const auto& r : results) {
    const std::string verdict =
        r.skipped ? "skip" : (r.passed ? "pass" : "fail");
    (r.skipped ? skipped : (r.passed ? passed : failed)) += 1;
    Json record{{"command", "acceptance"}, {"criterion", r.number},
                {"name", r.name},          {"verdict", verdict},
                {"seconds", rounded(r.seconds)}, {"detail", r.detail}};
    std::ostringstream os;
    os << "criterion " << r.number << " [" << r.name << "] ";
    os << (r.skipped ? "SKIP" : (r.passed ? "PASS" : "FAIL"));
    os << " (" << rounded(r.seconds) << "s) " << r.detail;
    rep.line(record, os.str());
  }
  Json summary{{"command", "acceptance"},
               {"passed", passed},
               {"failed", failed},
               {"skipped", skipped},
               {"ok", failed == 0 && skipped == 0}};
  std::ostringstream os;
  os << "acceptance: " << passed << " passed, " << failed << " failed, "
     << skipped << " skipped";
  rep.line(summary, os.str());
  if (failed > 0) return kMathFailure;
  if (skipped > 0) return kSizeBound;
  return kPass;
}

// --- `fixtures` ----------------------------------------------------------------

VCategory<FS> make_fixture_category(
    std::vector<std::string> obs,
    const std::function<int(const std::string&, const std::string&)>& hsize,
    const std::function<int(const std::string&, const std::string&,
                            const std::string&, int, int)>& comp,
    int unit) {
  VCategory<FS> c;
  c.quiver.objects = std::move(obs);
  for (const auto& x : c.quiver.objects)
    for (const auto& y : c.quiver.objects)
      c.quiver.homobj[{x, y}] = FinSetObj{hsize(x, y)};
  for (const auto& x : c.quiver.objects)
    for (const auto& y : c.quiver.objects)
      for (const auto& z : c.quiver.objects) {
        const int nxy = hsize(x, y), nyz = hsize(y, z), nxz = hsize(x, z);
        std::vector<int> table;
        for (int f = 1; f <= nxy; ++f)
          for (int h = 1; h <= nyz; ++h) table.push_back(comp(x, y, z, f, h));
        c.kappa[{x, y, z}] = fs_map({nxy, nyz}, nxz, table);
      }
  for (const auto& x : c.quiver.objects)
    c.ident[x] = fs_map({}, hsize(x, x), {unit});
  return c;
}

VCategory<FS> two_chain_cat() {
  return make_fixture_category(
      {"x", "y"},
      [](const std::string& a, const std::string& b) { return a <= b; },
      [](const std::string&, const std::string&, const std::string&, int,
         int) { return 1; },
      1);
}

VCategory<FS> z2_cat() {
  return make_fixture_category(
      {"e"}, [](const std::string&, const std::string&) { return 2; },
      [](const std::string&, const std::string&, const std::string&, int f,
         int h) { return (f - 1 + h - 1) % 2 + 1; },
      1);
}

int run_fixtures(const GlobalOpts& g, const Reporter& rep) {
  namespace sfs = std::filesystem;
  sfs::create_directories(g.fixture_dir);
  const auto put = [&](const std::string& name, const Json& j) {
    const std::string path =
        (sfs::path(g.fixture_dir) / name).string();
    save_json_file(path, j);
    rep.line(Json{{"command", "fixtures"}, {"wrote", path}},
             "wrote " + path);
  };

  put("torsor.json", instance_to_json(make_torsor_v()));
  put("torsor_corrupted.json", instance_to_json(make_corrupted_torsor_v()));

  const auto c2 = two_chain_cat();
  const auto z2 = z2_cat();
  put("two_chain.json", category_to_json(c2));
  put("z2.json", category_to_json(z2));
  put("two_chain_id_functor.json",
      functor_to_json(identity_functor(fs, c2)));
  put("z2_id_transformation.json",
      transformation_to_json(
          identity_transformation(fs, identity_functor(fs, z2))));

  // a structurally valid category whose declared hom sizes blow the default
  // size guard; checking it must stop with the size-bound exit code
  put("oversized.json", Json{{"kind", "category"},
                             {"objects", Json::array({"x"})},
                             {"homs", Json::array({Json{{"from", "x"},
                                                        {"to", "x"},
                                                        {"size", 9999999}}})},
                             {"kappa", Json::array()},
                             {"idents", Json::array()}});

  const ShortSpace line = trivial_space(poly_full(1, mat(1, 1, {Rat(1)})));
  const auto ident = short_identity(line);
  put("line_space.json", space_to_json(line));
  put("short_identity.json", short_map_to_json(ident));
  put("short_twice.json", short_map_to_json(short_scale(ident, 2)));
  put("short_mult.json",
      short_map_to_json(short_map({line, line}, line, {Rat(1)})));

  put("word_pair.json", Json{{"kind", "word-pair"},
                             {"source", Json::array({1, 2})},
                             {"target", Json::array({2, 1})}});
  put("projective_query.json",
      Json{{"kind", "projective-query"},
           {"spaces", Json::array({space_to_json(line), space_to_json(line)})},
           {"tensor", Json::array({"1"})}});
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "category machinery over finite sets, table grounds and seminormed "
      "spaces"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--bounds", g.bounds, "size guard and enumeration cap")
      ->capture_default_str();
  app.add_option("--format", g.format, "report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--seed", g.seed, "seed for sampled checks")
      ->capture_default_str();
  app.add_option("--fixture-dir", g.fixture_dir, "fixture directory")
      ->capture_default_str();

  auto* check = app.add_subcommand(
      "check", "run the law checkers on a serialized structure");
  check->fallthrough();
  std::string check_path;
  check->add_option("path", check_path, "JSON input")->required();

  auto* build =
      app.add_subcommand("build", "run a construction and emit the result");
  build->fallthrough();
  std::string build_kind;
  std::vector<std::string> build_paths;
  std::string build_out;
  std::string build_side = "left";
  long long build_level = 0;
  build->add_option("kind", build_kind, "construction kind")
      ->required()
      ->check(CLI::IsMember({"fv-hom", "end-hom", "hom-category",
                             "vcat-product", "vcat-equalizer", "whisker",
                             "short-norm", "projective-norm"}));
  build->add_option("paths", build_paths, "JSON inputs");
  build->add_option("--out", build_out, "write the artifact here");
  build->add_option("--side", build_side, "whisker side")
      ->check(CLI::IsMember({"left", "right"}))
      ->capture_default_str();
  build->add_option("--level", build_level, "seminorm level")
      ->capture_default_str();

  auto* acc = app.add_subcommand("acceptance", "run the acceptance suite");
  acc->fallthrough();
  auto* fix =
      app.add_subcommand("fixtures", "write the demo fixture set to disk");
  fix->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kInputError;
  }

  const Reporter rep{g.format == "json"};
  try {
    if (app.got_subcommand(check)) return run_check(check_path, g, rep);
    if (app.got_subcommand(build))
      return run_build(build_kind, build_paths, build_out, build_side,
                       build_level, g, rep);
    if (app.got_subcommand(acc)) return run_acceptance_cmd(g, rep);
    if (app.got_subcommand(fix)) return run_fixtures(g, rep);
  } catch (const SizeBound& e) {
    rep.line(Json{{"error", e.what()}, {"class", "size-bound"}},
             std::string("size bound: ") + e.what());
    return kSizeBound;
  } catch (const std::exception& e) {
    rep.line(Json{{"error", e.what()}, {"class", "input"}},
             std::string("input error: ") + e.what());
    return kInputError;
  }
  return kInputError;
}
