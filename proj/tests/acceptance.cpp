// Acceptance run over the desk-scale corpus: Z1, Z2, Z4, Z2xZ2, Z8 over the
// two-element chain plus the chain acting on itself; every weakly decreasing
// chain of length <= 3; every homomorphism between corpus modules with every
// pair of chains.
//
// Usage: acceptance [N ...]   runs the listed criteria (default: all).
// Prints one PASS/FAIL line per criterion and exits 1 if any selected one fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "oracles.hpp"

using namespace bcktop;
using oracle::Mask;

namespace {

struct Space {
  std::string id;
  const BckModule* module;
  BaigTopology t;
  std::vector<Submodule> subs;
};

struct Corpus {
  std::vector<oracle::CorpusModule> modules;
  std::vector<Space> spaces;
  std::map<std::string, std::vector<std::size_t>> spaces_of;  // module name -> indices
  std::vector<NamedHom> homs;
};

Corpus build_corpus() {
  Corpus c;
  c.modules = oracle::corpus_modules();
  for (const auto& m : c.modules) {
    const auto subs = enumerate_submodules(m.module);
    for (const auto& d : oracle::all_chains(m.module)) {
      c.spaces_of[m.name].push_back(c.spaces.size());
      c.spaces.push_back({m.name + d.str(), &m.module, build_baig(d), subs});
    }
  }
  for (const auto& a : c.modules)
    for (const auto& b : c.modules)
      for (const auto& f : enumerate_homs(a.module, b.module)) {
        std::ostringstream fid;
        fid << a.name << "->" << b.name << "[";
        for (std::size_t i = 0; i < f.map().size(); ++i) fid << (i ? "," : "") << f.map()[i];
        fid << "]";
        for (auto i : c.spaces_of[a.name])
          for (auto j : c.spaces_of[b.name])
            c.homs.push_back({fid.str() + " " + c.spaces[i].t.dss().str() + "->" + c.spaces[j].t.dss().str(),
                              TopologizedHom::make(f, c.spaces[i].t, c.spaces[j].t)});
      }
  return c;
}

// Counts checked cases and keeps the first failure.
struct Tally {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::optional<std::string> first;

  void check(bool ok, const std::function<std::string()>& witness) {
    ++checked;
    if (ok) return;
    ++failed;
    if (!first) first = witness();
  }
};

std::string str(Mask m, std::size_t n) {
  std::vector<Index> v;
  for (Index i = 0; i < n; ++i)
    if (m & oracle::bit(i)) v.push_back(i);
  return oracle::set(n, v).str();
}

using Criterion = std::function<Tally(const Corpus&)>;

Tally c01_topology_axioms(const Corpus& c) {
  Tally t;
  for (const auto& s : c.spaces) {
    const auto opens = oracle::mask_set(s.t.opens());
    const Mask all = oracle::bit(s.t.size()) - 1;
    t.check(opens.count(0) && opens.count(all), [&] { return s.id + " missing empty set or carrier"; });
    for (Mask a : opens)
      for (Mask b : opens)
        t.check(opens.count(a | b) && opens.count(a & b),
                [&] { return s.id + " U=" + str(a, s.t.size()) + " V=" + str(b, s.t.size()); });
  }
  return t;
}

Tally c02_submodule_clopen(const Corpus& c) {
  Tally t;
  for (const auto& s : c.spaces)
    for (const auto& n : s.subs)
      t.check(is_clopen(s.t, n.elements()), [&] { return s.id + " N=" + n.str() + " is not clopen"; });
  return t;
}

Tally c03_characteristic(const Corpus& c) {
  Tally t;
  for (const auto& s : c.spaces)
    for (const auto& n : s.subs) {
      // Independent: chi_N^-1({1}) = N and chi_N^-1({0}) = M \ N must both be open.
      const auto opens = oracle::mask_set(s.t.opens());
      const Mask nm = oracle::mask_of(n.elements());
      const Mask all = oracle::bit(s.t.size()) - 1;
      const bool expected = opens.count(nm) && opens.count(all & ~nm);
      const bool got = is_continuous(characteristic_map(s.t, n));
      t.check(got && expected, [&] {
        return s.id + " N=" + n.str() + " chi_N not continuous" + (got != expected ? " (oracle disagrees)" : "");
      });
    }
  return t;
}

Tally c04_disconnected(const Corpus& c) {
  Tally t;
  for (const auto& s : c.spaces) {
    bool proper = false;
    for (const auto& e : s.t.dss().chain()) proper = proper || (e.size() > 1 && e.size() < s.t.size());
    if (!proper) continue;
    t.check(!is_connected(s.t), [&] { return s.id + " is connected"; });
  }
  return t;
}

Tally c05_homeomorphisms(const Corpus& c) {
  Tally t;
  for (const auto& s : c.spaces) {
    t.check(is_homeomorphism(negation_map(s.t)), [&] { return s.id + " negation"; });
    for (Index a = 0; a < s.t.size(); ++a)
      t.check(is_homeomorphism(translation_map(s.t, a)), [&] { return s.id + " translation by " + std::to_string(a); });
  }
  return t;
}

Tally c06_addition(const Corpus& c) {
  Tally t;
  for (const auto& s : c.spaces) {
    const auto add = addition_map(s.t);
    if (add.domain.size() > 64) throw std::logic_error("product carrier above 64 points");
    t.check(is_continuous(add), [&] { return s.id + " addition"; });
  }
  return t;
}

Tally c07_scalar(const Corpus& c) {
  Tally t;
  for (const auto& s : c.spaces)
    for (Index x = 0; x < s.module->algebra().size(); ++x)
      t.check(is_continuous(scalar_map(s.t, x)), [&] { return s.id + " mu_" + std::to_string(x); });
  return t;
}

Tally c08_continuity_at_zero(const Corpus& c) {
  Tally t;
  for (const auto& h : c.homs) {
    const auto map = h.hom.map();
    t.check(is_continuous(map) == is_continuous_at(map, 0), [&] { return h.id; });
  }
  return t;
}

Tally c09_coset_image(const Corpus& c) {
  Tally t;
  for (const auto& a : c.modules)
    for (const auto& b : c.modules)
      for (const auto& f : enumerate_homs(a.module, b.module))
        for (const auto& k : enumerate_submodules(a.module))
          for (Index m = 0; m < a.module.size(); ++m) {
            const Mask km = oracle::mask_of(k.elements());
            const Mask lhs = oracle::image(f.map(), oracle::coset(a.module, m, km));
            const Mask rhs = oracle::coset(b.module, f(m), oracle::image(f.map(), km));
            bool library_ok = true;
            try {
              library_ok = oracle::mask_of(hom_coset_image(f, k, m)) == lhs;
            } catch (const InvariantViolation&) {
              library_ok = false;
            }
            t.check(lhs == rhs && library_ok, [&] {
              return a.name + "->" + b.name + " K=" + k.str() + " m=" + std::to_string(m);
            });
          }
  return t;
}

Tally c10_implication_chain(const Corpus& c) {
  Tally t;
  bool witness_found = false;
  for (const auto& h : c.homs) {
    const bool strict = is_strict(h.hom), compatible = is_compatible(h.hom);
    const auto map = h.hom.map();
    t.check(!strict || compatible, [&] { return h.id + " strict but not compatible"; });
    t.check(!compatible || is_continuous(map), [&] { return h.id + " compatible but not continuous"; });
    t.check(!strict || is_open_map(map), [&] {
      const auto v = find_non_open_image(map);
      return h.id + " strict but not open: f(" + v->str() + ")=" + map.image_of(*v).str();
    });
  }
  // The compatible-but-not-strict witness: g : Z2 -> Z4, 1 -> 2.
  const auto& z2 = c.modules[1].module;
  const auto& z4 = c.modules[2].module;
  const auto g = ModuleHom::from_map(z2, z4, {0, 2});
  const auto embed = TopologizedHom::make(g, oracle::dss(z2, {{0, 1}, {0}}), oracle::dss(z4, {{0, 1, 2, 3}, {0, 1, 2, 3}}));
  witness_found = is_compatible(embed) && !is_strict(embed);
  t.check(witness_found, [] { return std::string("embed g is not compatible-but-not-strict"); });
  t.check(!compatible_not_strict(c.homs).empty(), [] { return std::string("no compatible-not-strict instance"); });
  return t;
}

Tally c11_quotient_square(const Corpus& c) {
  Tally t;
  for (const auto& h : c.homs) {
    if (!is_compatible(h.hom)) continue;
    const auto& f = h.hom.hom();
    for (std::size_t n = 1; n <= h.hom.horizon(); ++n) {
      const auto fn = induced_quotient_map(h.hom, n);
      const auto q = quotient(f.source(), h.hom.source_dss().at(n));
      const auto qp = quotient(f.target(), h.hom.target_dss().at(n));
      bool ok = quotient_square_commutes(h.hom, n);
      for (Index m = 0; m < f.source().size(); ++m) ok = ok && qp.class_of(f(m)) == fn(q.class_of(m));
      t.check(ok, [&] { return h.id + " n=" + std::to_string(n); });
    }
  }
  return t;
}

Tally c12_strict_iff_alpha(const Corpus& c) {
  Tally t;
  bool seen_true = false, seen_false = false;
  for (const auto& h : c.homs) {
    if (!is_compatible(h.hom)) continue;
    const bool strict = is_strict(h.hom);
    (strict ? seen_true : seen_false) = true;
    t.check(strict == is_alpha_epi_all_n(h.hom), [&] { return h.id; });
  }
  t.check(seen_true && seen_false, [] { return std::string("only one truth value exercised"); });
  return t;
}

Tally c13_exact_pair(const Corpus& c) {
  Tally t;
  for (const auto& s : c.spaces)
    for (const auto& k : s.subs) {
      const auto r = exact_pair_details(s.t, k);
      t.check(r.holds(), [&] { return s.id + " K=" + k.str() + ": " + r.witness.value_or("?"); });
    }
  return t;
}

Tally c14_induced_relative(const Corpus& c) {
  Tally t;
  for (const auto& s : c.spaces)
    for (const auto& k : s.subs) {
      const auto ke = k.elements().elements();
      std::set<Mask> relative;
      for (Mask o : oracle::mask_set(s.t.opens())) {
        Mask local = 0;
        for (Index i = 0; i < ke.size(); ++i)
          if (o & oracle::bit(ke[i])) local |= oracle::bit(i);
        relative.insert(local);
      }
      t.check(oracle::mask_set(induced_topology(s.t, k).opens()) == relative, [&] { return s.id + " K=" + k.str(); });
    }
  return t;
}

Tally c15_oracles(const Corpus& c) {
  Tally t;
  for (const auto& m : c.modules) {
    std::vector<ElementSet> got;
    for (const auto& s : enumerate_submodules(m.module)) got.push_back(s.elements());
    t.check(oracle::mask_set(got) == oracle::submodules(m.module), [&] { return m.name + " submodules"; });
  }
  for (const auto& s : c.spaces)
    t.check(oracle::mask_set(s.t.opens()) == oracle::baig_opens(*s.module, oracle::chain_masks(s.t.dss())),
            [&] { return s.id + " opens"; });
  return t;
}

const std::vector<std::pair<const char*, Criterion>> kCriteria = {
    {"topology axioms", c01_topology_axioms},
    {"submodules are clopen", c02_submodule_clopen},
    {"characteristic maps are continuous", c03_characteristic},
    {"proper chains give disconnected spaces", c04_disconnected},
    {"negation and translations are homeomorphisms", c05_homeomorphisms},
    {"addition is continuous on the product", c06_addition},
    {"scalar maps are continuous", c07_scalar},
    {"continuity equals continuity at zero", c08_continuity_at_zero},
    {"f(K+m) = f(K)+f(m)", c09_coset_image},
    {"strict => compatible => continuous, strict => open", c10_implication_chain},
    {"quotient square commutes", c11_quotient_square},
    {"strict <=> alpha_n epi for all n", c12_strict_iff_alpha},
    {"K -> M -> M/K exact, strict and open", c13_exact_pair},
    {"induced topology is the relative topology", c14_induced_relative},
    {"submodules and opens match brute force", c15_oracles},
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::size_t> selected;
  for (int i = 1; i < argc; ++i) {
    const int n = std::atoi(argv[i]);
    if (n < 1 || n > static_cast<int>(kCriteria.size())) {
      std::cerr << "unknown criterion '" << argv[i] << "'\n";
      return 2;
    }
    selected.push_back(static_cast<std::size_t>(n));
  }
  if (selected.empty())
    for (std::size_t i = 1; i <= kCriteria.size(); ++i) selected.push_back(i);

  const auto start = std::chrono::steady_clock::now();
  const Corpus corpus = build_corpus();
  std::cout << "corpus: " << corpus.modules.size() << " modules, " << corpus.spaces.size() << " spaces, "
            << corpus.homs.size() << " topologized homs\n";

  bool all = true;
  for (std::size_t n : selected) {
    const auto& [name, run] = kCriteria[n - 1];
    const auto t0 = std::chrono::steady_clock::now();
    Tally t = run(corpus);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = t.failed == 0 && t.checked > 0;
    all = all && ok;
    char label[8];
    std::snprintf(label, sizeof label, "C%02zu", n);
    std::cout << (ok ? "PASS " : "FAIL ") << label << " " << name << ": " << t.checked - t.failed << "/" << t.checked
              << " cases (" << ms << " ms)";
    if (t.first) std::cout << "; first counterexample: " << *t.first;
    std::cout << '\n';
  }
  const auto total =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  std::cout << "total " << total << " ms\n";
  return all ? 0 : 1;
}
