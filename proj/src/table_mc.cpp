#include "mcat/table_mc.hpp"

#include <numeric>

namespace mcat {

namespace {

std::vector<int> composite_sources(const TableData& d, const OrdMap& phi,
                                   const std::vector<int>& args) {
  std::vector<int> out(static_cast<size_t>(phi.source));
  std::vector<int> used(static_cast<size_t>(phi.target), 0);
  for (int i = 0; i < phi.source; ++i) {
    const int j = phi.values[i];
    out[i] = d.mors[args[j - 1] - 1].sources[used[j - 1]++];
  }
  return out;
}

}  // namespace

std::vector<int> TableInstance::source_of(const Mor& f) const {
  return data->mors[f - 1].sources;
}

int TableInstance::target_of(const Mor& f) const {
  return data->mors[f - 1].target;
}

int TableInstance::identity(const Obj& x) const {
  return data->identity_of[x - 1];
}

int TableInstance::compose(const OrdMap& phi, const std::vector<Mor>& args,
                           const Mor& outer) const {
  const TableMorSig& out_sig = data->mors[outer - 1];
  if (static_cast<int>(args.size()) != phi.target ||
      static_cast<int>(out_sig.sources.size()) != phi.target)
    throw SignatureMismatch("table compose: argument count mismatch");
  std::vector<int> fiber_size(static_cast<size_t>(phi.target), 0);
  for (int v : phi.values) ++fiber_size[v - 1];
  for (int j = 0; j < phi.target; ++j) {
    const TableMorSig& a = data->mors[args[j] - 1];
    if (a.target != out_sig.sources[j])
      throw SignatureMismatch("table compose: argument target mismatch");
    if (static_cast<int>(a.sources.size()) != fiber_size[j])
      throw SignatureMismatch("table compose: argument arity mismatch");
  }
  const auto it = data->composites.find(ComposeKey{phi, args, outer});
  if (it == data->composites.end())
    throw TableError("table compose: composite not present in the table");
  return it->second;
}

std::string TableInstance::show_obj(const Obj& x) const {
  return data->colors[x - 1];
}

std::string TableInstance::show_mor(const Mor& f) const {
  return data->mors[f - 1].name;
}

unsigned long long TableInstance::hom_size(const std::vector<Obj>& xs,
                                           const Obj& y) const {
  return enumerate_hom(xs, y).size();
}

std::vector<int> TableInstance::enumerate_hom(const std::vector<Obj>& xs,
                                              const Obj& y) const {
  std::vector<int> out;
  for (size_t id = 1; id <= data->mors.size(); ++id)
    if (data->mors[id - 1].sources == xs && data->mors[id - 1].target == y)
      out.push_back(static_cast<int>(id));
  return out;
}

std::vector<int> TableInstance::objects() const {
  std::vector<int> out(data->colors.size());
  std::iota(out.begin(), out.end(), 1);
  return out;
}

int TableBuilder::add_color(const std::string& name) {
  data_.colors.push_back(name);
  const int color = static_cast<int>(data_.colors.size());
  data_.mors.push_back(TableMorSig{"1_" + name, {color}, color});
  data_.identity_of.push_back(static_cast<int>(data_.mors.size()));
  return color;
}

int TableBuilder::add_mor(const std::string& name, std::vector<int> sources,
                          int target) {
  for (int s : sources)
    if (s < 1 || s > static_cast<int>(data_.colors.size()))
      throw TableError("add_mor: unknown source color");
  if (target < 1 || target > static_cast<int>(data_.colors.size()))
    throw TableError("add_mor: unknown target color");
  data_.mors.push_back(TableMorSig{name, std::move(sources), target});
  return static_cast<int>(data_.mors.size());
}

int TableBuilder::identity_id(int color) const {
  return data_.identity_of[color - 1];
}

void TableBuilder::set_compose(const OrdMap& phi, std::vector<int> args,
                               int outer, int result) {
  const ComposeKey key{phi, std::move(args), outer};
  const auto it = data_.composites.find(key);
  if (it != data_.composites.end() && it->second != result)
    throw TableError("set_compose: conflicting entry");
  data_.composites.insert({key, result});
}

TableInstance TableBuilder::build() const {
  TableData d = data_;
  const int nmors = static_cast<int>(d.mors.size());

  // unit-law entries: identities plugged in, and plugging into an identity
  for (int f = 1; f <= nmors; ++f) {
    const TableMorSig& sig = d.mors[f - 1];
    const int arity = static_cast<int>(sig.sources.size());
    std::vector<int> ids;
    for (int s : sig.sources) ids.push_back(d.identity_of[s - 1]);
    d.composites.insert({ComposeKey{identity_map(arity), ids, f}, f});
    d.composites.insert(
        {ComposeKey{nabla(arity), {f}, d.identity_of[sig.target - 1]}, f});
  }

  // validate signatures of every installed entry
  for (const auto& [key, result] : d.composites) {
    const TableMorSig& out_sig = d.mors[key.outer - 1];
    const TableMorSig& res_sig = d.mors[result - 1];
    if (res_sig.target != out_sig.target)
      throw TableError("build: entry result has the wrong target");
    if (res_sig.sources != composite_sources(d, key.phi, key.args))
      throw TableError("build: entry result has the wrong sources");
  }

  // totality: every typechecking composition instance must have an entry
  for (int outer = 1; outer <= nmors; ++outer) {
    const TableMorSig& out_sig = d.mors[outer - 1];
    const int J = static_cast<int>(out_sig.sources.size());
    std::vector<std::vector<int>> slot_choices(static_cast<size_t>(J));
    for (int j = 0; j < J; ++j)
      for (int a = 1; a <= nmors; ++a)
        if (d.mors[a - 1].target == out_sig.sources[j])
          slot_choices[j].push_back(a);
    std::vector<size_t> pick(static_cast<size_t>(J), 0);
    bool any_empty = false;
    for (const auto& c : slot_choices) any_empty = any_empty || c.empty();
    if (any_empty) continue;
    while (true) {
      std::vector<int> args(static_cast<size_t>(J));
      std::vector<int> arities(static_cast<size_t>(J));
      int I = 0;
      for (int j = 0; j < J; ++j) {
        args[j] = slot_choices[j][pick[j]];
        arities[j] = static_cast<int>(d.mors[args[j] - 1].sources.size());
        I += arities[j];
      }
      if (I <= 10) {
        for (const OrdMap& phi : all_maps(I, J)) {
          bool fits = true;
          std::vector<int> fiber_size(static_cast<size_t>(J), 0);
          for (int v : phi.values) ++fiber_size[v - 1];
          for (int j = 0; j < J && fits; ++j)
            fits = fiber_size[j] == arities[j];
          if (fits && !d.composites.count(ComposeKey{phi, args, outer}))
            throw TableError("build: table is not total, missing composite over " +
                             d.mors[outer - 1].name);
        }
      }
      int j = J - 1;
      while (j >= 0 && pick[j] + 1 == slot_choices[j].size()) pick[j--] = 0;
      if (j < 0) break;
      ++pick[j];
    }
  }

  return TableInstance{std::make_shared<const TableData>(std::move(d))};
}

TableInstance make_torsor_v() {
  TableBuilder b;
  const int A = b.add_color("A");
  const int B = b.add_color("B");
  const int m = b.add_mor("m", {A, A}, B);
  const int mp = b.add_mor("m'", {A, A}, B);
  const int oneA = b.identity_id(A);
  const OrdMap swap = ord_map(2, 2, {2, 1});
  b.set_compose(swap, {oneA, oneA}, m, mp);
  b.set_compose(swap, {oneA, oneA}, mp, m);
  return b.build();
}

TableInstance make_corrupted_torsor_v() {
  TableBuilder b;
  const int A = b.add_color("A");
  const int B = b.add_color("B");
  const int m = b.add_mor("m", {A, A}, B);
  const int mp = b.add_mor("m'", {A, A}, B);
  const int oneA = b.identity_id(A);
  const OrdMap swap = ord_map(2, 2, {2, 1});
  b.set_compose(swap, {oneA, oneA}, m, m);  // should be m'
  b.set_compose(swap, {oneA, oneA}, mp, m);
  return b.build();
}

}  // namespace mcat
