#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bcktop/algebra.hpp"
#include "bcktop/module.hpp"
#include "bcktop/morphisms.hpp"
#include "bcktop/topology.hpp"

namespace bcktop::io {

/// Malformed text, positioned at a 1-based line and column.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Well-formed text describing an object the core validators reject.
class ValidationError : public Error {
 public:
  ValidationError(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A name that does not resolve, or bad command-line arguments.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct ModuleDecl {
  std::string name;
  BckModule module;
  friend bool operator==(const ModuleDecl&, const ModuleDecl&) = default;
};

struct SubmoduleDecl {
  std::string name;
  std::string module;
  Submodule submodule;
  friend bool operator==(const SubmoduleDecl&, const SubmoduleDecl&) = default;
};

struct DssDecl {
  std::string name;
  std::string module;
  std::vector<std::string> chain;  // tokens as written: names or "{..}" literals
  Dss dss;
  friend bool operator==(const DssDecl& a, const DssDecl& b) {
    return a.name == b.name && a.module == b.module && a.chain == b.chain &&
           a.dss.chain() == b.dss.chain();
  }
};

struct HomDecl {
  std::string name;
  std::string source;
  std::string target;
  ModuleHom hom;
  friend bool operator==(const HomDecl&, const HomDecl&) = default;
};

struct CheckDecl {
  std::string name;
  std::string claim;
  std::map<std::string, std::string> bindings;
  std::size_t line = 0;
  friend bool operator==(const CheckDecl& a, const CheckDecl& b) {
    return a.name == b.name && a.claim == b.claim && a.bindings == b.bindings;
  }
};

/// A parsed and fully validated instance file.
///
///     # comment
///     [algebra]            chain = N   |   size, one, star rows
///     [module NAME]        group = cyclic N | klein, or add rows;
///                          action = scalar, or action rows;
///                          or construction = self
///     [group] / [action]   shorthand for a module named M
///     [submodule NAME]     module = NAME, elements = 0 2
///     [dss NAME]           module = NAME, chain = NAME {0,2} ...
///     [hom NAME]           source = NAME, target = NAME, map = 0 1 0 1
///     [check NAME]         claim = ID, plus hom/source_dss/target_dss/dss/submodule
///
/// A key with an empty value takes the integer rows on the following lines;
/// rows may also be given inline, separated by '/'.
struct InstanceFile {
  BckAlgebra algebra = chain_algebra(2);
  std::vector<ModuleDecl> modules;
  std::vector<SubmoduleDecl> submodules;
  std::vector<DssDecl> dss;
  std::vector<HomDecl> homs;
  std::vector<CheckDecl> checks;

  const ModuleDecl& module(const std::string& name) const;
  const SubmoduleDecl& submodule(const std::string& name) const;
  const DssDecl& chain(const std::string& name) const;
  const HomDecl& hom(const std::string& name) const;

  friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

/// Throws ParseError or ValidationError.
InstanceFile parse_instance(std::string_view text);
/// Canonical text form; parse_instance(serialize(x)) == x.
std::string serialize(const InstanceFile& instance);

InstanceFile load_instance(const std::string& path);

/// Every dss as a named space (id = dss name).
std::vector<NamedSpace> declared_spaces(const InstanceFile& instance);
/// Every hom paired with every source-side and target-side dss
/// (id = "hom:source_dss->target_dss").
std::vector<NamedHom> declared_homs(const InstanceFile& instance);

struct PropertyResult {
  bool holds = false;
  std::optional<std::string> witness;
};

/// One of compatible, strict, open, continuous, continuous-at-0, homeo,
/// alpha-epi. Throws UsageError for anything else.
PropertyResult check_property(const TopologizedHom& th, std::string_view property);
extern const std::vector<std::string> kMapProperties;

/// Runs each [check] block; one report per block (instance = block name).
std::vector<VerdictReport> run_checks(const InstanceFile& instance);

}  // namespace bcktop::io
