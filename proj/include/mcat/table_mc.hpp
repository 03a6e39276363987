#pragma once

#include "mcat/multicat.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace mcat {

// Raised when a finitely presented table is incomplete or inconsistent.
struct TableError : std::logic_error {
  using std::logic_error::logic_error;
};

// Signature of a named generator (or identity) in a table-presented ground.
struct TableMorSig {
  std::string name;
  std::vector<int> sources;  // 1-based color ids
  int target = 0;            // 1-based color id
};

struct ComposeKey {
  OrdMap phi;
  std::vector<int> args;  // morphism ids
  int outer = 0;          // morphism id

  friend auto operator<=>(const ComposeKey&, const ComposeKey&) = default;
};

struct TableData {
  std::vector<std::string> colors;  // 1-based ids
  std::vector<TableMorSig> mors;    // 1-based ids, identities included
  std::vector<int> identity_of;     // color id -> morphism id
  std::map<ComposeKey, int> composites;
};

// A ground whose morphisms form a finite list and whose composition is an
// explicit lookup table.  Unit-law entries are installed by the builder; all
// other typechecking composites must be provided.
struct TableInstance {
  using Obj = int;  // color id
  using Mor = int;  // morphism id

  std::shared_ptr<const TableData> data;

  std::vector<Obj> source_of(const Mor& f) const;
  Obj target_of(const Mor& f) const;
  Mor identity(const Obj& x) const;
  Mor compose(const OrdMap& phi, const std::vector<Mor>& args,
              const Mor& outer) const;
  std::string show_obj(const Obj& x) const;
  std::string show_mor(const Mor& f) const;

  unsigned long long hom_size(const std::vector<Obj>& xs, const Obj& y) const;
  std::vector<Mor> enumerate_hom(const std::vector<Obj>& xs,
                                 const Obj& y) const;

  std::vector<Obj> objects() const;
};

static_assert(EnumerableGround<TableInstance>);

class TableBuilder {
 public:
  int add_color(const std::string& name);
  // returns the 1-based morphism id of a new generator
  int add_mor(const std::string& name, std::vector<int> sources, int target);
  // identity morphism ids become available after the first build-independent
  // call; they are allocated eagerly per color by add_color
  int identity_id(int color) const;
  // install one composite; the entry must typecheck
  void set_compose(const OrdMap& phi, std::vector<int> args, int outer,
                   int result);
  // finalize: installs unit-law entries and checks totality of the table over
  // all typechecking composition instances
  TableInstance build() const;

 private:
  TableData data_;
};

// Two colors A, B; generators m, m' : (A, A) -> B swapped by the transposition
// of inputs; all other composites forced by unit laws.
TableInstance make_torsor_v();

// Same table with one action entry redirected (the transposition fixes m), a
// deliberate associativity violation.
TableInstance make_corrupted_torsor_v();

}  // namespace mcat
