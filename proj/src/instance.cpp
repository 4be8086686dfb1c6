#include "bcktop/instance.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace bcktop::io {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

ValidationError::ValidationError(std::size_t line, const std::string& message)
    : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

const std::vector<std::string> kMapProperties = {"compatible", "strict",    "open",     "continuous",
                                                 "continuous-at-0", "homeo", "alpha-epi"};

namespace {

// ---------------------------------------------------------------------------
// Raw line structure

struct Cell {
  Index value;
  std::size_t column;
};

struct Row {
  std::size_t line;
  std::vector<Cell> cells;
};

struct Entry {
  std::string key;
  std::string value;
  std::size_t line = 0;
  std::size_t key_column = 0;
  std::size_t value_column = 0;
  std::vector<Row> rows;  // inline '/' rows or following lines
};

struct Section {
  std::string kind;
  std::string name;
  std::size_t line = 0;
  std::vector<Entry> entries;

  const Entry* find(const std::string& key) const {
    for (const auto& e : entries)
      if (e.key == key) return &e;
    return nullptr;
  }
};

const std::set<std::string> kNamedKinds = {"module", "submodule", "dss", "hom", "check"};
const std::set<std::string> kAnonymousKinds = {"algebra", "group", "action"};

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '\'';
  });
}

// Splits on whitespace, keeping 1-based columns relative to `base`.
std::vector<std::pair<std::string, std::size_t>> words(std::string_view text, std::size_t base) {
  std::vector<std::pair<std::string, std::size_t>> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) out.emplace_back(std::string(text.substr(start, i - start)), base + start);
  }
  return out;
}

Row parse_row(std::string_view text, std::size_t line, std::size_t base) {
  Row row{line, {}};
  for (const auto& [word, column] : words(text, base)) {
    if (!std::all_of(word.begin(), word.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError(line, column, "expected a non-negative integer, got '" + word + "'");
    if (word.size() > 9) throw ParseError(line, column, "integer too large");
    row.cells.push_back({static_cast<Index>(std::stoul(word)), column});
  }
  return row;
}

std::vector<Section> lex(std::string_view text) {
  std::vector<Section> sections;
  Entry* open_table = nullptr;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos) continue;
    const std::size_t col = first + 1;

    if (line[first] == '[') {
      const std::size_t close = line.find(']', first);
      if (close == std::string_view::npos) throw ParseError(line_no, col, "unterminated section header");
      if (line.find_first_not_of(" \t", close + 1) != std::string_view::npos)
        throw ParseError(line_no, close + 2, "unexpected text after section header");
      auto parts = words(line.substr(first + 1, close - first - 1), first + 2);
      if (parts.empty()) throw ParseError(line_no, col, "empty section header");
      Section s;
      s.kind = parts[0].first;
      s.line = line_no;
      if (kNamedKinds.count(s.kind)) {
        if (parts.size() != 2) throw ParseError(line_no, col, "[" + s.kind + "] needs exactly one name");
        if (!is_identifier(parts[1].first)) throw ParseError(line_no, parts[1].second, "invalid name '" + parts[1].first + "'");
        s.name = parts[1].first;
      } else if (kAnonymousKinds.count(s.kind)) {
        if (parts.size() != 1) throw ParseError(line_no, parts[1].second, "[" + s.kind + "] takes no name");
      } else {
        throw ParseError(line_no, parts[0].second, "unknown section '" + s.kind + "'");
      }
      sections.push_back(std::move(s));
      open_table = nullptr;
      continue;
    }

    if (sections.empty()) throw ParseError(line_no, col, "content before the first section header");

    if (const auto eq = line.find('='); eq != std::string_view::npos) {
      Entry e;
      std::string_view key = line.substr(first, eq - first);
      while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.remove_suffix(1);
      if (!is_identifier(key)) throw ParseError(line_no, col, "invalid key '" + std::string(key) + "'");
      e.key = std::string(key);
      e.line = line_no;
      e.key_column = col;
      std::string_view value = line.substr(eq + 1);
      const std::size_t vfirst = value.find_first_not_of(" \t");
      if (vfirst != std::string_view::npos) {
        value = value.substr(vfirst);
        while (!value.empty() && std::isspace(static_cast<unsigned char>(value.back()))) value.remove_suffix(1);
        e.value = std::string(value);
        e.value_column = eq + 2 + vfirst;
      } else {
        e.value_column = eq + 2;
      }
      if (sections.back().find(e.key)) throw ParseError(line_no, col, "duplicate key '" + e.key + "'");
      sections.back().entries.push_back(std::move(e));
      Entry& added = sections.back().entries.back();
      open_table = added.value.empty() ? &added : nullptr;
      continue;
    }

    if (!open_table && sections.back().kind == "action" && sections.back().entries.empty()) {
      Entry rows;
      rows.key = "rows";
      rows.line = line_no;
      rows.key_column = col;
      rows.value_column = col;
      sections.back().entries.push_back(std::move(rows));
      open_table = &sections.back().entries.back();
    }
    if (!open_table) throw ParseError(line_no, col, "expected 'key = value' or a section header");
    open_table->rows.push_back(parse_row(line, line_no, 1));
  }
  return sections;
}

// ---------------------------------------------------------------------------
// Interpretation helpers

[[noreturn]] void unknown_key(const Entry& e, const Section& s) {
  throw ParseError(e.line, e.key_column, "unknown key '" + e.key + "' in [" + s.kind + "]");
}

void allow_keys(const Section& s, std::initializer_list<const char*> keys) {
  for (const auto& e : s.entries) {
    const bool known = std::any_of(keys.begin(), keys.end(), [&](const char* k) { return e.key == k; });
    if (!known) unknown_key(e, s);
  }
}

const Entry& require(const Section& s, const std::string& key) {
  if (const Entry* e = s.find(key)) return *e;
  throw ParseError(s.line, 1, "[" + s.kind + (s.name.empty() ? "" : " " + s.name) + "] is missing '" + key + "'");
}

// Rows of a table entry: inline "a b / c d" or following lines.
std::vector<Row> rows_of(const Entry& e) {
  if (!e.rows.empty()) {
    if (!e.value.empty()) throw ParseError(e.line, e.value_column, "table given both inline and on following lines");
    return e.rows;
  }
  std::vector<Row> rows;
  std::size_t offset = 0;
  const std::string& v = e.value;
  while (offset <= v.size()) {
    std::size_t slash = v.find('/', offset);
    if (slash == std::string::npos) slash = v.size();
    rows.push_back(parse_row(std::string_view(v).substr(offset, slash - offset), e.line, e.value_column + offset));
    offset = slash + 1;
  }
  return rows;
}

Row single_row(const Entry& e) {
  auto rows = rows_of(e);
  if (rows.size() != 1) throw ParseError(e.line, e.value_column, "'" + e.key + "' takes a single row");
  return rows.front();
}

Index single_int(const Entry& e) {
  const Row r = single_row(e);
  if (r.cells.size() != 1) throw ParseError(e.line, e.value_column, "'" + e.key + "' takes one integer");
  return r.cells.front().value;
}

Table to_table(const Entry& e, std::size_t rows, std::size_t cols, std::size_t range) {
  const auto raw = rows_of(e);
  if (raw.size() != rows)
    throw ParseError(e.line, e.key_column,
                     "'" + e.key + "' needs " + std::to_string(rows) + " rows, got " + std::to_string(raw.size()));
  Table t;
  for (const auto& r : raw) {
    if (r.cells.size() != cols)
      throw ParseError(r.line, r.cells.empty() ? e.value_column : r.cells.front().column,
                       "row needs " + std::to_string(cols) + " entries, got " + std::to_string(r.cells.size()));
    std::vector<Index> row;
    for (const auto& c : r.cells) {
      if (c.value >= range)
        throw ParseError(r.line, c.column, "entry " + std::to_string(c.value) + " out of range (size " + std::to_string(range) + ")");
      row.push_back(c.value);
    }
    t.push_back(std::move(row));
  }
  return t;
}

ElementSet to_set(const Row& r, std::size_t universe) {
  ElementSet s(universe);
  for (const auto& c : r.cells) {
    if (c.value >= universe)
      throw ParseError(r.line, c.column, "element " + std::to_string(c.value) + " out of range (size " + std::to_string(universe) + ")");
    s.insert(c.value);
  }
  return s;
}

template <typename F>
auto validated(std::size_t line, F&& build) {
  try {
    return build();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ValidationError(line, e.what());
  }
}

template <typename Decl>
const Decl& lookup(const std::vector<Decl>& decls, const std::string& name, const char* what) {
  for (const auto& d : decls)
    if (d.name == name) return d;
  std::string available;
  for (const auto& d : decls) available += (available.empty() ? "" : ", ") + d.name;
  throw UsageError(std::string("unknown ") + what + " '" + name + "' (available: " +
                   (available.empty() ? "none" : available) + ")");
}

template <typename Decl>
void require_unique(const std::vector<Decl>& decls, const Section& s) {
  for (const auto& d : decls)
    if (d.name == s.name) throw ValidationError(s.line, "duplicate " + s.kind + " '" + s.name + "'");
}

std::set<std::string> space_claims() {
  return {claims::kTopologyAxioms, claims::kBaseSound, claims::kSubmoduleClopen,
          claims::kCharacteristicContinuous, claims::kProperChainDisconnected,
          claims::kNegationHomeomorphism, claims::kTranslationHomeomorphism,
          claims::kAdditionContinuous, claims::kScalarContinuous, claims::kInducedIsRelative,
          claims::kExactSequence};
}

std::set<std::string> hom_claims() {
  std::set<std::string> out = {claims::kContinuityAtZero, claims::kCosetImage, claims::kStrictCompatible,
                               claims::kStrictOpen, claims::kCompatibleContinuous, claims::kStrictContinuous,
                               claims::kStrictBijectionHomeo, claims::kQuotientSquare,
                               claims::kStrictIffAlphaEpi, claims::kAlphaEpiContinuousOpen};
  out.insert(kMapProperties.begin(), kMapProperties.end());
  return out;
}

class Interpreter {
 public:
  explicit Interpreter(std::vector<Section> sections) : sections_(std::move(sections)) {}

  InstanceFile run() {
    algebra();
    modules();
    for (const auto& s : sections_)
      if (s.kind == "submodule") submodule(s);
    for (const auto& s : sections_)
      if (s.kind == "dss") dss(s);
    for (const auto& s : sections_)
      if (s.kind == "hom") hom(s);
    for (const auto& s : sections_)
      if (s.kind == "check") check(s);
    return std::move(out_);
  }

 private:
  void algebra() {
    const Section* found = nullptr;
    for (const auto& s : sections_) {
      if (s.kind != "algebra") continue;
      if (found) throw ValidationError(s.line, "only one [algebra] section allowed");
      found = &s;
    }
    if (!found) return;
    const Section& s = *found;
    allow_keys(s, {"chain", "size", "one", "star"});
    if (const Entry* chain = s.find("chain")) {
      if (s.find("star") || s.find("size") || s.find("one"))
        throw ParseError(chain->line, chain->key_column, "'chain' excludes size/one/star");
      const Index n = single_int(*chain);
      out_.algebra = validated(s.line, [&] { return chain_algebra(n); });
      return;
    }
    const Entry& star = require(s, "star");
    const std::size_t size = s.find("size") ? single_int(*s.find("size")) : rows_of(star).size();
    if (size == 0) throw ParseError(s.find("size")->line, s.find("size")->value_column, "size must be positive");
    Table table = to_table(star, size, size, size);
    std::optional<Index> one;
    if (const Entry* e = s.find("one")) {
      one = single_int(*e);
      if (*one >= size) throw ParseError(e->line, e->value_column, "one = " + std::to_string(*one) + " out of range");
    }
    out_.algebra = validated(s.line, [&] { return BckAlgebra::from_table(std::move(table), one); });
  }

  void modules() {
    const Section* group = nullptr;
    const Section* action = nullptr;
    for (const auto& s : sections_) {
      if (s.kind == "group") {
        if (group) throw ValidationError(s.line, "only one [group] section allowed");
        group = &s;
      } else if (s.kind == "action") {
        if (action) throw ValidationError(s.line, "only one [action] section allowed");
        action = &s;
      } else if (s.kind == "module") {
        require_unique(out_.modules, s);
        allow_keys(s, {"size", "group", "add", "action", "construction"});
        out_.modules.push_back({s.name, build_module(s, s, &s)});
      }
    }
    if (group || action) {
      if (!group) throw ValidationError(action->line, "[action] without [group]");
      for (const auto& m : out_.modules)
        if (m.name == "M") throw ValidationError(group->line, "[group] defines module 'M', which already exists");
      allow_keys(*group, {"size", "group", "add", "cyclic", "klein"});
      if (action) allow_keys(*action, {"action", "rows"});
      out_.modules.push_back({"M", build_module(*group, *group, action)});
    }
  }

  // `where` locates errors; keys come from group_section and action_section.
  BckModule build_module(const Section& where, const Section& group_section, const Section* action_section) {
    const BckAlgebra& alg = out_.algebra;
    if (const Entry* c = group_section.find("construction")) {
      if (c->value != "self") throw ParseError(c->line, c->value_column, "unknown construction '" + c->value + "'");
      for (const char* k : {"group", "add", "action"})
        if (const Entry* e = group_section.find(k))
          throw ParseError(e->line, e->key_column, "'construction = self' excludes '" + std::string(k) + "'");
      return validated(where.line, [&] { return self_module(alg); });
    }

    std::optional<AbelianGroup> group;
    const Entry* g = group_section.find("group");
    if (!g) g = group_section.find("cyclic");
    if (const Entry* k = group_section.find("klein"); k && !g) g = k;
    if (g && group_section.find("add"))
      throw ParseError(g->line, g->key_column, "give either a group shorthand or an add table");
    if (g && g->key == "group") {
      auto parts = words(g->value, g->value_column);
      if (parts.size() == 2 && parts[0].first == "cyclic") {
        const Row r = parse_row(parts[1].first, g->line, parts[1].second);
        if (r.cells.front().value == 0) throw ParseError(g->line, parts[1].second, "cyclic order must be positive");
        group = AbelianGroup::cyclic(r.cells.front().value);
      } else if (parts.size() == 1 && parts[0].first == "klein") {
        group = AbelianGroup::klein();
      } else {
        throw ParseError(g->line, g->value_column, "expected 'cyclic N', 'klein' or an add table");
      }
    } else if (g && g->key == "cyclic") {
      group = AbelianGroup::cyclic(single_int(*g));
    } else if (g && g->key == "klein") {
      group = AbelianGroup::klein();
    } else {
      const Entry& add = require(group_section, "add");
      const std::size_t n = rows_of(add).size();
      Table table = to_table(add, n, n, n);
      group = validated(where.line, [&] { return AbelianGroup::from_table(std::move(table)); });
    }

    const std::size_t n = group->size();
    if (const Entry* size = group_section.find("size"); size && single_int(*size) != n)
      throw ValidationError(size->line, "size = " + std::to_string(single_int(*size)) + " but the group has " +
                                            std::to_string(n) + " elements");
    Table action(alg.size(), std::vector<Index>(n, 0));
    const Entry* a = action_section ? action_section->find("action") : nullptr;
    if (!a && action_section && action_section != &group_section) a = action_section->find("rows");
    if (!a || a->value == "scalar") {
      for (Index x = 1; x < alg.size(); ++x)
        for (Index m = 0; m < n; ++m) action[x][m] = m;
    } else {
      action = to_table(*a, alg.size(), n, n);
    }
    return validated(where.line, [&] { return module_from_tables(alg, *group, std::move(action)); });
  }

  const ModuleDecl& module_for(const Section& s) {
    if (const Entry* e = s.find("module")) {
      for (const auto& m : out_.modules)
        if (m.name == e->value) return m;
      throw ValidationError(e->line, "unknown module '" + e->value + "'");
    }
    if (out_.modules.size() == 1) return out_.modules.front();
    throw ValidationError(s.line, "[" + s.kind + " " + s.name + "] needs 'module = NAME'");
  }

  void submodule(const Section& s) {
    require_unique(out_.submodules, s);
    allow_keys(s, {"module", "elements"});
    const ModuleDecl& m = module_for(s);
    ElementSet elements = to_set(single_row(require(s, "elements")), m.module.size());
    Submodule sub = validated(s.line, [&] { return Submodule::of(m.module, std::move(elements)); });
    out_.submodules.push_back({s.name, m.name, std::move(sub)});
  }

  Submodule chain_entry(const ModuleDecl& m, const std::string& token, std::size_t line, std::size_t column) {
    if (token.front() == '{') {
      if (token.back() != '}') throw ParseError(line, column, "unterminated set literal");
      std::string inner = token.substr(1, token.size() - 2);
      std::replace(inner.begin(), inner.end(), ',', ' ');
      ElementSet s = to_set(parse_row(inner, line, column + 1), m.module.size());
      return validated(line, [&] { return Submodule::of(m.module, std::move(s)); });
    }
    if (token == m.name) return Submodule::whole(m.module);
    if (token == "0") return Submodule::zero(m.module);
    for (const auto& sd : out_.submodules)
      if (sd.name == token) {
        if (sd.module != m.name)
          throw ValidationError(line, "submodule '" + token + "' belongs to module '" + sd.module + "'");
        return sd.submodule;
      }
    throw ValidationError(line, "unknown submodule '" + token + "'");
  }

  void dss(const Section& s) {
    require_unique(out_.dss, s);
    allow_keys(s, {"module", "chain"});
    const ModuleDecl& m = module_for(s);
    const Entry& chain = require(s, "chain");
    std::vector<std::string> tokens;
    std::vector<Submodule> entries;
    for (const auto& [token, column] : words(chain.value, chain.value_column)) {
      entries.push_back(chain_entry(m, token, chain.line, column));
      tokens.push_back(token);
    }
    if (tokens.empty()) throw ParseError(chain.line, chain.value_column, "empty chain");
    Dss d = validated(s.line, [&] { return Dss::of(m.module, std::move(entries)); });
    out_.dss.push_back({s.name, m.name, std::move(tokens), std::move(d)});
  }

  void hom(const Section& s) {
    require_unique(out_.homs, s);
    allow_keys(s, {"source", "target", "map"});
    const Entry& src_entry = require(s, "source");
    const Entry& dst_entry = require(s, "target");
    const ModuleDecl& src = find_module(src_entry);
    const ModuleDecl& dst = find_module(dst_entry);
    const Row r = single_row(require(s, "map"));
    const Entry& map_entry = *s.find("map");
    if (r.cells.size() != src.module.size())
      throw ParseError(map_entry.line, map_entry.value_column,
                       "map needs " + std::to_string(src.module.size()) + " entries, got " + std::to_string(r.cells.size()));
    std::vector<Index> map;
    for (const auto& c : r.cells) {
      if (c.value >= dst.module.size()) throw ParseError(r.line, c.column, "entry " + std::to_string(c.value) + " out of range");
      map.push_back(c.value);
    }
    ModuleHom f = validated(s.line, [&] { return ModuleHom::from_map(src.module, dst.module, std::move(map)); });
    out_.homs.push_back({s.name, src.name, dst.name, std::move(f)});
  }

  const ModuleDecl& find_module(const Entry& e) {
    for (const auto& m : out_.modules)
      if (m.name == e.value) return m;
    throw ValidationError(e.line, "unknown module '" + e.value + "'");
  }

  void check(const Section& s) {
    require_unique(out_.checks, s);
    const Entry& claim = require(s, "claim");
    CheckDecl c{s.name, claim.value, {}, s.line};
    for (const auto& e : s.entries) {
      if (e.key == "claim") continue;
      if (e.key != "hom" && e.key != "source_dss" && e.key != "target_dss" && e.key != "dss" && e.key != "submodule")
        unknown_key(e, s);
      c.bindings[e.key] = e.value;
    }
    auto need = [&](const char* key) -> const std::string& {
      auto it = c.bindings.find(key);
      if (it == c.bindings.end()) throw ValidationError(s.line, "claim '" + c.claim + "' needs '" + key + "'");
      return it->second;
    };
    try {
      if (hom_claims().count(c.claim)) {
        const HomDecl& h = out_.hom(need("hom"));
        const DssDecl& a = out_.chain(need("source_dss"));
        const DssDecl& b = out_.chain(need("target_dss"));
        if (a.module != h.source || b.module != h.target)
          throw ValidationError(s.line, "chains do not match hom '" + h.name + "' (" + h.source + " -> " + h.target + ")");
      } else if (space_claims().count(c.claim)) {
        const DssDecl& d = out_.chain(need("dss"));
        if (c.claim == claims::kExactSequence) {
          const SubmoduleDecl& k = out_.submodule(need("submodule"));
          if (k.module != d.module) throw ValidationError(s.line, "submodule '" + k.name + "' is not in module '" + d.module + "'");
        }
      } else {
        throw ParseError(claim.line, claim.value_column, "unknown claim '" + c.claim + "'");
      }
    } catch (const UsageError& e) {
      throw ValidationError(s.line, e.what());
    }
    out_.checks.push_back(std::move(c));
  }

  std::vector<Section> sections_;
  InstanceFile out_;
};

void write_table(std::ostringstream& os, const char* key, const Table& t) {
  os << key << " =\n";
  for (const auto& row : t) {
    os << " ";
    for (Index v : row) os << ' ' << v;
    os << '\n';
  }
}

void write_row(std::ostringstream& os, const char* key, const std::vector<Index>& row) {
  os << key << " =";
  for (Index v : row) os << ' ' << v;
  os << '\n';
}

std::string describe_chain(const ChainWitness& w, const std::string& lhs, const std::string& rhs) {
  const std::string n = std::to_string(w.n);
  return "n=" + n + " " + lhs + n + ")=" + w.lhs.str() + " " + rhs + n + "=" + w.rhs.str();
}

}  // namespace

// ---------------------------------------------------------------------------

const ModuleDecl& InstanceFile::module(const std::string& name) const { return lookup(modules, name, "module"); }
const SubmoduleDecl& InstanceFile::submodule(const std::string& name) const {
  return lookup(submodules, name, "submodule");
}
const DssDecl& InstanceFile::chain(const std::string& name) const { return lookup(dss, name, "dss"); }
const HomDecl& InstanceFile::hom(const std::string& name) const { return lookup(homs, name, "hom"); }

InstanceFile parse_instance(std::string_view text) { return Interpreter(lex(text)).run(); }

InstanceFile load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

std::string serialize(const InstanceFile& inst) {
  std::ostringstream os;
  os << "[algebra]\n";
  os << "size = " << inst.algebra.size() << '\n';
  if (inst.algebra.one_declared()) os << "one = " << *inst.algebra.one() << '\n';
  write_table(os, "star", inst.algebra.table());
  for (const auto& m : inst.modules) {
    os << "\n[module " << m.name << "]\n";
    write_table(os, "add", m.module.group().table());
    write_table(os, "action", m.module.action_table());
  }
  for (const auto& s : inst.submodules) {
    os << "\n[submodule " << s.name << "]\n";
    os << "module = " << s.module << '\n';
    write_row(os, "elements", s.submodule.elements().elements());
  }
  for (const auto& d : inst.dss) {
    os << "\n[dss " << d.name << "]\n";
    os << "module = " << d.module << '\n';
    os << "chain =";
    for (const auto& t : d.chain) os << ' ' << t;
    os << '\n';
  }
  for (const auto& h : inst.homs) {
    os << "\n[hom " << h.name << "]\n";
    os << "source = " << h.source << '\n';
    os << "target = " << h.target << '\n';
    write_row(os, "map", h.hom.map());
  }
  for (const auto& c : inst.checks) {
    os << "\n[check " << c.name << "]\n";
    os << "claim = " << c.claim << '\n';
    for (const auto& [k, v] : c.bindings) os << k << " = " << v << '\n';
  }
  return os.str();
}

std::vector<NamedSpace> declared_spaces(const InstanceFile& inst) {
  std::vector<NamedSpace> out;
  for (const auto& d : inst.dss) out.push_back({d.name, build_baig(d.dss)});
  return out;
}

std::vector<NamedHom> declared_homs(const InstanceFile& inst) {
  std::map<std::string, BaigTopology> built;
  for (const auto& d : inst.dss) built.emplace(d.name, build_baig(d.dss));
  std::vector<NamedHom> out;
  for (const auto& h : inst.homs)
    for (const auto& a : inst.dss) {
      if (a.module != h.source) continue;
      for (const auto& b : inst.dss) {
        if (b.module != h.target) continue;
        out.push_back({h.name + ":" + a.name + "->" + b.name,
                       TopologizedHom::make(h.hom, built.at(a.name), built.at(b.name))});
      }
    }
  return out;
}

PropertyResult check_property(const TopologizedHom& th, std::string_view property) {
  const FiniteMap map = th.map();
  if (property == "compatible") {
    if (auto w = find_incompatibility(th)) return {false, describe_chain(*w, "f(M_", "M'_")};
    return {true, std::nullopt};
  }
  if (property == "strict") {
    if (auto w = find_non_strictness(th)) return {false, describe_chain(*w, "f(M_", "f(M)∩M'_")};
    return {true, std::nullopt};
  }
  if (property == "open") {
    if (auto v = find_non_open_image(map)) return {false, "V=" + v->str() + " f(V)=" + map.image_of(*v).str()};
    return {true, std::nullopt};
  }
  if (property == "continuous") {
    if (auto u = find_discontinuity(map)) return {false, "U=" + u->str() + " f^-1(U)=" + map.preimage_of(*u).str()};
    return {true, std::nullopt};
  }
  if (property == "continuous-at-0") {
    if (is_continuous_at(map, 0)) return {true, std::nullopt};
    const auto& v = map.domain.neighbourhood(0);
    return {false, "V=" + v.str() + " f(V)=" + map.image_of(v).str() + " U=" + map.codomain.neighbourhood(map(0)).str()};
  }
  if (property == "homeo") {
    if (!is_bijective(map)) return {false, "not bijective"};
    if (auto u = find_discontinuity(map)) return {false, "U=" + u->str() + " f^-1(U)=" + map.preimage_of(*u).str()};
    if (auto v = find_non_open_image(map)) return {false, "V=" + v->str() + " f(V)=" + map.image_of(*v).str()};
    return {true, std::nullopt};
  }
  if (property == "alpha-epi") {
    if (auto w = find_incompatibility(th)) return {false, "not compatible: " + describe_chain(*w, "f(M_", "M'_")};
    for (std::size_t n = 1; n <= th.horizon(); ++n) {
      const ModuleHom a = alpha_n(th, n);
      if (!a.is_surjective())
        return {false, "n=" + std::to_string(n) + " |alpha_n(Ker f)|=" +
                           std::to_string(image(a).size()) + " |Ker f_n|=" + std::to_string(a.target().size())};
    }
    return {true, std::nullopt};
  }
  throw UsageError("unknown property '" + std::string(property) + "'");
}

std::vector<VerdictReport> run_checks(const InstanceFile& inst) {
  std::vector<VerdictReport> out;
  for (const auto& c : inst.checks) {
    VerdictReport report;
    const auto at = [&](const char* key) -> const std::string& { return c.bindings.at(key); };
    const bool is_property =
        std::find(kMapProperties.begin(), kMapProperties.end(), c.claim) != kMapProperties.end();
    if (hom_claims().count(c.claim)) {
      const HomDecl& h = inst.hom(at("hom"));
      auto th = TopologizedHom::make(h.hom, inst.chain(at("source_dss")).dss, inst.chain(at("target_dss")).dss);
      if (is_property) {
        const auto start = std::chrono::steady_clock::now();
        const PropertyResult r = check_property(th, c.claim);
        report = VerdictReport{c.claim, c.name, r.holds, r.witness,
                               std::chrono::steady_clock::now() - start};
      } else {
        for (auto& r : run_theorem_suite({NamedHom{c.name, std::move(th)}}))
          if (r.claim == c.claim) report = std::move(r);
      }
    } else if (c.claim == claims::kExactSequence) {
      report = exact_pair_check(build_baig(inst.chain(at("dss")).dss), inst.submodule(at("submodule")).submodule, c.name);
    } else {
      std::vector<VerdictReport> reports =
          run_space_suite({NamedSpace{c.name, build_baig(inst.chain(at("dss")).dss)}});
      for (auto& r : reports)
        if (r.claim == c.claim) report = std::move(r);
    }
    out.push_back(std::move(report));
  }
  return out;
}

}  // namespace bcktop::io
