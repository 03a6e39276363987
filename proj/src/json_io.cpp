#include "mcat/json_io.hpp"

#include <fstream>
#include <sstream>
#include <utility>

namespace mcat {

namespace {

const Json& need(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key))
    throw JsonError(std::string(what) + ": missing key \"" + key + "\"");
  return j.at(key);
}

int need_int(const Json& j, const char* key, const char* what) {
  const Json& v = need(j, key, what);
  if (!v.is_number_integer())
    throw JsonError(std::string(what) + ": \"" + key +
                    "\" must be an integer");
  return v.get<int>();
}

std::string need_str(const Json& j, const char* key, const char* what) {
  const Json& v = need(j, key, what);
  if (!v.is_string())
    throw JsonError(std::string(what) + ": \"" + key + "\" must be a string");
  return v.get<std::string>();
}

const Json& need_array(const Json& j, const char* key, const char* what) {
  const Json& v = need(j, key, what);
  if (!v.is_array())
    throw JsonError(std::string(what) + ": \"" + key + "\" must be an array");
  return v;
}

std::vector<int> int_list(const Json& v, const char* what) {
  std::vector<int> out;
  for (const Json& e : v) {
    if (!e.is_number_integer())
      throw JsonError(std::string(what) + ": expected an integer list");
    out.push_back(e.get<int>());
  }
  return out;
}

std::vector<std::string> str_list(const Json& v, const char* what) {
  std::vector<std::string> out;
  for (const Json& e : v) {
    if (!e.is_string())
      throw JsonError(std::string(what) + ": expected a string list");
    out.push_back(e.get<std::string>());
  }
  return out;
}

void need_kind(const Json& j, const char* kind, const char* what) {
  if (need_str(j, "kind", what) != kind)
    throw JsonError(std::string(what) + ": expected kind \"" + kind + "\"");
}

}  // namespace

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw JsonError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw JsonError(path + ": " + e.what());
  }
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw JsonError("cannot write " + path);
  out << j.dump(2) << '\n';
}

Json ordmap_to_json(const OrdMap& f) {
  return Json{{"source", f.source},
              {"target", f.target},
              {"values", f.values}};
}

OrdMap ordmap_from_json(const Json& j) {
  const int s = need_int(j, "source", "ordinal map");
  const int t = need_int(j, "target", "ordinal map");
  auto values = int_list(need_array(j, "values", "ordinal map"),
                         "ordinal map values");
  try {
    return ord_map(s, t, std::move(values));
  } catch (const OrdError& e) {
    throw JsonError(std::string("ordinal map: ") + e.what());
  }
}

Json multimap_to_json(const MultiMap& m) {
  return Json{{"sources", m.src_sizes},
              {"target", m.tgt_size},
              {"table", m.table}};
}

MultiMap multimap_from_json(const Json& j) {
  auto sources =
      int_list(need_array(j, "sources", "multimap"), "multimap sources");
  const int target = need_int(j, "target", "multimap");
  auto table = int_list(need_array(j, "table", "multimap"), "multimap table");
  try {
    return fs_map(std::move(sources), target, std::move(table));
  } catch (const std::exception& e) {
    throw JsonError(std::string("multimap: ") + e.what());
  }
}

Json instance_to_json(const TableInstance& v) {
  const TableData& d = *v.data;
  const int colors = static_cast<int>(d.colors.size());
  for (int c = 1; c <= colors; ++c)
    if (d.identity_of[static_cast<std::size_t>(c) - 1] != c)
      throw JsonError(
          "instance: only builder-canonical layouts are serializable");
  Json generators = Json::array();
  for (std::size_t id = static_cast<std::size_t>(colors); id < d.mors.size();
       ++id)
    generators.push_back(Json{{"name", d.mors[id].name},
                              {"sources", d.mors[id].sources},
                              {"target", d.mors[id].target}});
  Json composites = Json::array();
  for (const auto& [key, result] : d.composites)
    composites.push_back(Json{{"index", ordmap_to_json(key.phi)},
                              {"arguments", key.args},
                              {"outer", key.outer},
                              {"result", result}});
  return Json{{"kind", "instance"},
              {"colors", d.colors},
              {"generators", generators},
              {"composites", composites}};
}

TableInstance instance_from_json(const Json& j) {
  need_kind(j, "instance", "instance");
  TableBuilder b;
  for (const auto& name :
       str_list(need_array(j, "colors", "instance"), "instance colors"))
    b.add_color(name);
  for (const Json& g : need_array(j, "generators", "instance"))
    b.add_mor(need_str(g, "name", "generator"),
              int_list(need_array(g, "sources", "generator"),
                       "generator sources"),
              need_int(g, "target", "generator"));
  for (const Json& c : need_array(j, "composites", "instance"))
    b.set_compose(ordmap_from_json(need(c, "index", "composite")),
                  int_list(need_array(c, "arguments", "composite"),
                           "composite arguments"),
                  need_int(c, "outer", "composite"),
                  need_int(c, "result", "composite"));
  return b.build();
}

Json category_to_json(const VCategory<FinSetInstance>& c) {
  Json homs = Json::array();
  for (const auto& [key, obj] : c.quiver.homobj)
    homs.push_back(
        Json{{"from", key.first}, {"to", key.second}, {"size", obj.size}});
  Json kappa = Json::array();
  for (const auto& [key, map] : c.kappa)
    kappa.push_back(Json{{"x", std::get<0>(key)},
                         {"y", std::get<1>(key)},
                         {"z", std::get<2>(key)},
                         {"map", multimap_to_json(map)}});
  Json idents = Json::array();
  for (const auto& [name, map] : c.ident)
    idents.push_back(Json{{"at", name}, {"map", multimap_to_json(map)}});
  return Json{{"kind", "category"},
              {"objects", c.quiver.objects},
              {"homs", homs},
              {"kappa", kappa},
              {"idents", idents}};
}

VCategory<FinSetInstance> category_from_json(const Json& j) {
  need_kind(j, "category", "category");
  VCategory<FinSetInstance> c;
  c.quiver.objects =
      str_list(need_array(j, "objects", "category"), "category objects");
  for (const Json& h : need_array(j, "homs", "category")) {
    const int size = need_int(h, "size", "hom");
    if (size < 0) throw JsonError("hom: size must be nonnegative");
    c.quiver.homobj[{need_str(h, "from", "hom"), need_str(h, "to", "hom")}] =
        FinSetObj{size};
  }
  for (const Json& k : need_array(j, "kappa", "category"))
    c.kappa[{need_str(k, "x", "kappa"), need_str(k, "y", "kappa"),
             need_str(k, "z", "kappa")}] =
        multimap_from_json(need(k, "map", "kappa"));
  for (const Json& i : need_array(j, "idents", "category"))
    c.ident[need_str(i, "at", "ident")] =
        multimap_from_json(need(i, "map", "ident"));
  return c;
}

Json functor_to_json(const MultiEntryFunctor<FinSetInstance>& f) {
  Json sources = Json::array();
  for (const auto& s : f.sources) sources.push_back(category_to_json(s));
  Json objects = Json::array();
  for (const auto& [at, to] : f.obj_map)
    objects.push_back(Json{{"at", at}, {"to", to}});
  Json components = Json::array();
  for (const auto& [key, map] : f.components)
    components.push_back(Json{{"from", key.first},
                              {"to", key.second},
                              {"map", multimap_to_json(map)}});
  return Json{{"kind", "functor"},
              {"sources", sources},
              {"target", category_to_json(f.target)},
              {"objects", objects},
              {"components", components}};
}

MultiEntryFunctor<FinSetInstance> functor_from_json(const Json& j) {
  need_kind(j, "functor", "functor");
  MultiEntryFunctor<FinSetInstance> f;
  for (const Json& s : need_array(j, "sources", "functor"))
    f.sources.push_back(category_from_json(s));
  f.target = category_from_json(need(j, "target", "functor"));
  for (const Json& o : need_array(j, "objects", "functor"))
    f.obj_map[str_list(need_array(o, "at", "object entry"), "object entry")] =
        need_str(o, "to", "object entry");
  for (const Json& c : need_array(j, "components", "functor"))
    f.components[{str_list(need_array(c, "from", "component"), "component"),
                  str_list(need_array(c, "to", "component"), "component")}] =
        multimap_from_json(need(c, "map", "component"));
  return f;
}

Json transformation_to_json(const VNatTransformation<FinSetInstance>& t) {
  Json components = Json::array();
  for (const auto& [at, map] : t.components)
    components.push_back(Json{{"at", at}, {"map", multimap_to_json(map)}});
  return Json{{"kind", "transformation"},
              {"source", functor_to_json(t.source)},
              {"target", functor_to_json(t.target)},
              {"components", components}};
}

VNatTransformation<FinSetInstance> transformation_from_json(const Json& j) {
  need_kind(j, "transformation", "transformation");
  VNatTransformation<FinSetInstance> t;
  t.source = functor_from_json(need(j, "source", "transformation"));
  t.target = functor_from_json(need(j, "target", "transformation"));
  for (const Json& c : need_array(j, "components", "transformation"))
    t.components[str_list(need_array(c, "at", "component"), "component")] =
        multimap_from_json(need(c, "map", "component"));
  return t;
}

Json prop_morphism_to_json(const PropMorphism<FinSetInstance>& m) {
  Json source = Json::array(), target = Json::array();
  for (const auto& o : m.source) source.push_back(o.size);
  for (const auto& o : m.target) target.push_back(o.size);
  Json components = Json::array();
  for (const auto& c : m.components) components.push_back(multimap_to_json(c));
  return Json{{"kind", "prop-morphism"},
              {"source", source},
              {"target", target},
              {"index", ordmap_to_json(m.index)},
              {"components", components}};
}

PropMorphism<FinSetInstance> prop_morphism_from_json(const Json& j) {
  need_kind(j, "prop-morphism", "prop morphism");
  PropMorphism<FinSetInstance> m;
  for (int s :
       int_list(need_array(j, "source", "prop morphism"), "prop source"))
    m.source.push_back(FinSetObj{s});
  for (int t :
       int_list(need_array(j, "target", "prop morphism"), "prop target"))
    m.target.push_back(FinSetObj{t});
  m.index = ordmap_from_json(need(j, "index", "prop morphism"));
  for (const Json& c : need_array(j, "components", "prop morphism"))
    m.components.push_back(multimap_from_json(c));
  try {
    fv_validate(FinSetInstance{}, m);
  } catch (const std::exception& e) {
    throw JsonError(std::string("prop morphism: ") + e.what());
  }
  return m;
}

Json rat_to_json(const Rat& r) {
  std::ostringstream out;
  out << r;
  return Json(out.str());
}

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (!j.is_string())
    throw JsonError("rational: expected a \"p/q\" string or an integer");
  try {
    return Rat(j.get<std::string>());
  } catch (const std::exception&) {
    throw JsonError("rational: cannot parse \"" + j.get<std::string>() +
                    "\"");
  }
}

Json mat_to_json(const Mat& m) {
  Json entries = Json::array();
  for (const Rat& x : m.a) entries.push_back(rat_to_json(x));
  return Json{{"rows", m.rows}, {"cols", m.cols}, {"entries", entries}};
}

Mat mat_from_json(const Json& j) {
  const int rows = need_int(j, "rows", "matrix");
  const int cols = need_int(j, "cols", "matrix");
  std::vector<Rat> entries;
  for (const Json& e : need_array(j, "entries", "matrix"))
    entries.push_back(rat_from_json(e));
  try {
    return mat(rows, cols, std::move(entries));
  } catch (const std::exception& e) {
    throw JsonError(std::string("matrix: ") + e.what());
  }
}

Json space_to_json(const ShortSpace& s) {
  Json levels = Json::array();
  for (std::size_t i = 0; i < s.levels.size(); ++i)
    levels.push_back(Json{{"l", s.window.lo + static_cast<int>(i)},
                          {"W", mat_to_json(s.levels[i].w)},
                          {"functionals",
                           mat_to_json(s.levels[i].functionals)}});
  return Json{{"kind", "short-space"}, {"dim", s.dim}, {"levels", levels}};
}

ShortSpace space_from_json(const Json& j) {
  need_kind(j, "short-space", "short space");
  const int dim = need_int(j, "dim", "short space");
  const Json& levels = need_array(j, "levels", "short space");
  if (levels.empty()) throw JsonError("short space: needs at least one level");
  std::vector<PolySeminorm> norms;
  int lo = 0;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const int l = need_int(levels[i], "l", "level");
    if (i == 0)
      lo = l;
    else if (l != lo + static_cast<int>(i))
      throw JsonError("short space: levels must be consecutive ascending");
    try {
      norms.push_back(poly_seminorm(
          dim, mat_from_json(need(levels[i], "W", "level")),
          mat_from_json(need(levels[i], "functionals", "level"))));
    } catch (const ShortError& e) {
      throw JsonError(std::string("level: ") + e.what());
    }
  }
  try {
    return short_space(
        dim, LevelWindow{lo, lo + static_cast<int>(levels.size()) - 1},
        std::move(norms));
  } catch (const ShortError& e) {
    throw JsonError(std::string("short space: ") + e.what());
  }
}

Json short_map_to_json(const ShortMultiMap& f) {
  Json sources = Json::array();
  std::vector<int> shape;
  for (const auto& s : f.sources) {
    sources.push_back(space_to_json(s));
    shape.push_back(s.dim);
  }
  shape.push_back(f.target.dim);
  Json coeff = Json::array();
  for (const Rat& x : f.coeff) coeff.push_back(rat_to_json(x));
  return Json{{"kind", "short-map"},
              {"sources", sources},
              {"target", space_to_json(f.target)},
              {"shape", shape},
              {"coefficients", coeff}};
}

ShortMultiMap short_map_from_json(const Json& j) {
  need_kind(j, "short-map", "short map");
  std::vector<ShortSpace> sources;
  std::vector<int> shape;
  for (const Json& s : need_array(j, "sources", "short map")) {
    sources.push_back(space_from_json(s));
    shape.push_back(sources.back().dim);
  }
  ShortSpace target = space_from_json(need(j, "target", "short map"));
  shape.push_back(target.dim);
  if (int_list(need_array(j, "shape", "short map"), "short map shape") !=
      shape)
    throw JsonError("short map: shape does not match the listed spaces");
  std::vector<Rat> coeff;
  for (const Json& e : need_array(j, "coefficients", "short map"))
    coeff.push_back(rat_from_json(e));
  try {
    return short_map(std::move(sources), std::move(target), std::move(coeff));
  } catch (const std::exception& e) {
    throw JsonError(std::string("short map: ") + e.what());
  }
}

}  // namespace mcat
