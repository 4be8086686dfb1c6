#include "bcktop/morphisms.hpp"

#include <algorithm>
#include <tuple>
#include <unordered_set>

namespace bcktop {

namespace {

using Clock = std::chrono::steady_clock;

ModuleHom inclusion(const BckModule& module, const Submodule& k) {
  return ModuleHom::from_map(restrict_module(module, k), module, k.elements().elements());
}

// f_n without the commuting-square postcondition.
ModuleHom quotient_map_unchecked(const TopologizedHom& th, std::size_t n, const QuotientModule& q,
                                 const QuotientModule& q_target) {
  const ModuleHom& f = th.hom();
  std::vector<Index> table(q.size());
  for (Index c = 0; c < q.size(); ++c) table[c] = q_target.class_of(f(q.representative(c)));
  for (Index m = 0; m < f.source().size(); ++m)
    if (q_target.class_of(f(m)) != table[q.class_of(m)])
      throw InvariantViolation("f_" + std::to_string(n) + " is not well defined at m = " + std::to_string(m));
  return ModuleHom::from_map(q.module(), q_target.module(), std::move(table));
}

void require_compatible(const TopologizedHom& th) {
  if (auto w = find_incompatibility(th))
    throw NotCompatible("f(M_" + std::to_string(w->n) + ") = " + w->lhs.str() + " is not inside M'_" +
                        std::to_string(w->n) + " = " + w->rhs.str());
}

std::string describe(const ChainWitness& w, const char* lhs, const char* rhs) {
  const std::string n = std::to_string(w.n);
  std::string l = lhs, r = rhs;
  auto subst = [&](std::string& s) {
    for (auto pos = s.find('#'); pos != std::string::npos; pos = s.find('#')) s.replace(pos, 1, n);
  };
  subst(l);
  subst(r);
  return "n=" + n + " " + l + "=" + w.lhs.str() + " " + r + "=" + w.rhs.str();
}

template <typename Fn>
VerdictReport timed(std::string claim, std::string instance, Fn&& body) {
  VerdictReport r;
  r.claim = std::move(claim);
  r.instance = std::move(instance);
  const auto start = Clock::now();
  r.witness = body();
  r.holds = !r.witness.has_value();
  r.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
  return r;
}

void sort_reports(std::vector<VerdictReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(), [](const auto& a, const auto& b) {
    return std::tie(a.claim, a.instance) < std::tie(b.claim, b.instance);
  });
}

using Witness = std::optional<std::string>;

Witness check_topology_axioms(const BaigTopology& t) {
  const auto& opens = t.opens();
  const std::size_t n = t.size();
  std::unordered_set<std::uint64_t> family;
  for (const auto& o : opens) family.insert(o.mask());
  if (!family.count(0)) return "empty set not open";
  if (!family.count(ElementSet::full(n).mask())) return "carrier not open";
  for (const auto& a : opens)
    for (const auto& b : opens) {
      if (!family.count(a.mask() | b.mask())) return "union of " + a.str() + " and " + b.str() + " not open";
      if (!family.count(a.mask() & b.mask()))
        return "intersection of " + a.str() + " and " + b.str() + " not open";
    }
  return std::nullopt;
}

Witness check_base(const BaigTopology& t) {
  for (const auto& b : t.base())
    if (!is_open(t, b)) return "base coset " + b.str() + " not open";
  for (const auto& o : t.opens()) {
    ElementSet covered(t.size());
    for (const auto& b : t.base())
      if (b.is_subset_of(o)) covered |= b;
    if (covered != o) return "open " + o.str() + " is not a union of base cosets";
  }
  return std::nullopt;
}

bool has_proper_nontrivial_entry(const Dss& dss) {
  const std::size_t n = dss.module().size();
  return std::any_of(dss.chain().begin(), dss.chain().end(),
                     [&](const Submodule& s) { return s.size() != n && s.size() != 1; });
}

}  // namespace

// ---------------------------------------------------------------------------

TopologizedHom TopologizedHom::make(ModuleHom hom, const Dss& source_dss, const Dss& target_dss) {
  return make(std::move(hom), build_baig(source_dss), build_baig(target_dss));
}

TopologizedHom TopologizedHom::make(ModuleHom hom, BaigTopology source, BaigTopology target) {
  if (!(hom.source() == source.module())) throw Error("source chain is not over the hom's source module");
  if (!(hom.target() == target.module())) throw Error("target chain is not over the hom's target module");
  return TopologizedHom(std::move(hom), std::move(source), std::move(target));
}

std::optional<ChainWitness> find_incompatibility(const TopologizedHom& th) {
  for (std::size_t n = 1; n <= th.horizon(); ++n) {
    ElementSet image = th.hom().image_of(th.source_dss().at(n).elements());
    const ElementSet& bound = th.target_dss().at(n).elements();
    if (!image.is_subset_of(bound)) return ChainWitness{n, std::move(image), bound};
  }
  return std::nullopt;
}

std::optional<ChainWitness> find_non_strictness(const TopologizedHom& th) {
  const ElementSet range = th.hom().image_of(ElementSet::full(th.hom().source().size()));
  for (std::size_t n = 1; n <= th.horizon(); ++n) {
    ElementSet image = th.hom().image_of(th.source_dss().at(n).elements());
    ElementSet trace = range & th.target_dss().at(n).elements();
    if (image != trace) return ChainWitness{n, std::move(image), std::move(trace)};
  }
  return std::nullopt;
}

bool quotient_square_commutes(const TopologizedHom& th, std::size_t n) {
  require_compatible(th);
  const auto q = QuotientModule::of(th.hom().source(), th.source_dss().at(n));
  const auto q_target = QuotientModule::of(th.hom().target(), th.target_dss().at(n));
  const ModuleHom fn = quotient_map_unchecked(th, n, q, q_target);
  for (Index m = 0; m < th.hom().source().size(); ++m)
    if (q_target.class_of(th.hom()(m)) != fn(q.class_of(m))) return false;
  return true;
}

ModuleHom induced_quotient_map(const TopologizedHom& th, std::size_t n) {
  require_compatible(th);
  const auto q = QuotientModule::of(th.hom().source(), th.source_dss().at(n));
  const auto q_target = QuotientModule::of(th.hom().target(), th.target_dss().at(n));
  ModuleHom fn = quotient_map_unchecked(th, n, q, q_target);
  if (!quotient_square_commutes(th, n))
    throw InvariantViolation("projection square does not commute at n = " + std::to_string(n));
  return fn;
}

ModuleHom alpha_n(const TopologizedHom& th, std::size_t n) {
  const ModuleHom fn = induced_quotient_map(th, n);
  const auto q = QuotientModule::of(th.hom().source(), th.source_dss().at(n));
  const Submodule ker = kernel(th.hom());
  const Submodule ker_n = kernel(fn);

  const auto ker_labels = ker.elements().elements();
  const auto ker_n_labels = ker_n.elements().elements();
  std::vector<Index> table;
  table.reserve(ker_labels.size());
  for (Index k : ker_labels) {
    const Index c = q.class_of(k);
    auto it = std::find(ker_n_labels.begin(), ker_n_labels.end(), c);
    if (it == ker_n_labels.end())
      throw InvariantViolation("k = " + std::to_string(k) + " in Ker f projects outside Ker f_n");
    table.push_back(static_cast<Index>(it - ker_n_labels.begin()));
  }
  return ModuleHom::from_map(restrict_module(th.hom().source(), ker),
                             restrict_module(fn.source(), ker_n),
                             std::move(table));
}

bool is_alpha_epi(const TopologizedHom& th, std::size_t n) { return alpha_n(th, n).is_surjective(); }

bool is_alpha_epi_all_n(const TopologizedHom& th) {
  require_compatible(th);
  for (std::size_t n = 1; n <= th.horizon(); ++n)
    if (!is_alpha_epi(th, n)) return false;
  return true;
}

// ---------------------------------------------------------------------------

ExactPairResult exact_pair_details(const BaigTopology& t, const Submodule& k) {
  require_submodule(t.module(), k);
  ExactPairResult r;
  const ModuleHom i = inclusion(t.module(), k);
  const QuotientModule q = QuotientModule::of(t.module(), k);
  const ModuleHom f = q.projection();

  const TopologizedHom i_th = TopologizedHom::make(i, induced_topology(t, k), t);
  const TopologizedHom f_th = TopologizedHom::make(f, t, factor_topology(t, k));

  const Submodule im_i = image(i);
  const Submodule ker_f = kernel(f);
  r.exact = im_i == ker_f;
  const auto i_nonstrict = find_non_strictness(i_th);
  const auto f_nonstrict = find_non_strictness(f_th);
  r.i_strict = !i_nonstrict;
  r.f_strict = !f_nonstrict;
  const auto i_closed = find_non_open_image(i_th.map());
  const auto f_closed = find_non_open_image(f_th.map());
  r.i_open = !i_closed;
  r.f_open = !f_closed;

  if (!r.exact)
    r.witness = "Im i=" + im_i.str() + " Ker f=" + ker_f.str();
  else if (i_nonstrict)
    r.witness = "i not strict: " + describe(*i_nonstrict, "i(K_#)", "i(K)∩M_#");
  else if (f_nonstrict)
    r.witness = "f not strict: " + describe(*f_nonstrict, "f(M_#)", "f(M)∩(M_#+K)/K");
  else if (i_closed)
    r.witness = "i not open: i(" + i.image_of(*i_closed).str() + ") not open in M";
  else if (f_closed)
    r.witness = "f not open: f(" + f_closed->str() + ")=" + f.image_of(*f_closed).str() + " not open in M/K";
  return r;
}

VerdictReport exact_pair_check(const BaigTopology& t, const Submodule& k, std::string instance) {
  if (instance.empty()) instance = t.dss().str() + " K=" + k.str();
  return timed(claims::kExactSequence, std::move(instance), [&]() { return exact_pair_details(t, k).witness; });
}

// ---------------------------------------------------------------------------

std::vector<VerdictReport> run_space_suite(const std::vector<NamedSpace>& spaces) {
  std::vector<VerdictReport> out;
  for (const auto& [id, t] : spaces) {
    const auto subs = enumerate_submodules(t.module());
    const std::size_t n = t.size();

    out.push_back(timed(claims::kTopologyAxioms, id, [&] { return check_topology_axioms(t); }));
    out.push_back(timed(claims::kBaseSound, id, [&] { return check_base(t); }));
    out.push_back(timed(claims::kSubmoduleClopen, id, [&]() -> Witness {
      for (const auto& s : subs)
        if (!is_clopen(t, s.elements()))
          return "N=" + s.str() + (is_open(t, s.elements()) ? " not closed" : " not open");
      return std::nullopt;
    }));
    out.push_back(timed(claims::kCharacteristicContinuous, id, [&]() -> Witness {
      for (const auto& s : subs)
        if (auto u = find_discontinuity(characteristic_map(t, s)))
          return "N=" + s.str() + " preimage of " + u->str() + " not open";
      return std::nullopt;
    }));
    out.push_back(timed(claims::kProperChainDisconnected, id, [&]() -> Witness {
      if (has_proper_nontrivial_entry(t.dss()) && is_connected(t)) return "chain " + t.dss().str() + " connected";
      return std::nullopt;
    }));
    out.push_back(timed(claims::kNegationHomeomorphism, id, [&]() -> Witness {
      if (!is_homeomorphism(negation_map(t))) return "negation";
      return std::nullopt;
    }));
    out.push_back(timed(claims::kTranslationHomeomorphism, id, [&]() -> Witness {
      for (Index a = 0; a < n; ++a)
        if (!is_homeomorphism(translation_map(t, a))) return "a=" + std::to_string(a);
      return std::nullopt;
    }));
    out.push_back(timed(claims::kAdditionContinuous, id, [&]() -> Witness {
      if (auto u = find_discontinuity(addition_map(t))) return "preimage of " + u->str() + " not open";
      return std::nullopt;
    }));
    out.push_back(timed(claims::kScalarContinuous, id, [&]() -> Witness {
      for (Index x = 0; x < t.module().algebra().size(); ++x)
        if (auto u = find_discontinuity(scalar_map(t, x)))
          return "x=" + std::to_string(x) + " preimage of " + u->str() + " not open";
      return std::nullopt;
    }));
    out.push_back(timed(claims::kInducedIsRelative, id, [&]() -> Witness {
      for (const auto& s : subs)
        if (induced_topology(t, s).opens() != relative_opens(t, s)) return "K=" + s.str();
      return std::nullopt;
    }));
    for (const auto& s : subs) out.push_back(exact_pair_check(t, s, id + " K=" + s.str()));
  }
  sort_reports(out);
  return out;
}

std::vector<VerdictReport> run_theorem_suite(const std::vector<NamedHom>& homs) {
  std::vector<VerdictReport> out;
  for (const auto& [id, th] : homs) {
    const ModuleHom& f = th.hom();
    const FiniteMap map = th.map();
    const bool strict = is_strict(th);
    const bool compatible = is_compatible(th);

    out.push_back(timed(claims::kContinuityAtZero, id, [&]() -> Witness {
      const bool everywhere = is_continuous(map);
      const bool at_zero = is_continuous_at(map, 0);
      if (everywhere != at_zero)
        return std::string("continuous=") + (everywhere ? "true" : "false") +
               " continuous_at_0=" + (at_zero ? "true" : "false");
      return std::nullopt;
    }));
    out.push_back(timed(claims::kCosetImage, id, [&]() -> Witness {
      for (const auto& k : enumerate_submodules(f.source()))
        for (Index m = 0; m < f.source().size(); ++m) {
          try {
            hom_coset_image(f, k, m);
          } catch (const InvariantViolation& e) {
            return "K=" + k.str() + " m=" + std::to_string(m) + ": " + e.what();
          }
        }
      return std::nullopt;
    }));
    out.push_back(timed(claims::kStrictCompatible, id, [&]() -> Witness {
      if (strict && !compatible) return "strict but " + describe(*find_incompatibility(th), "f(M_#)", "M'_#");
      return std::nullopt;
    }));
    out.push_back(timed(claims::kStrictOpen, id, [&]() -> Witness {
      if (!strict) return std::nullopt;
      if (auto v = find_non_open_image(map))
        return "strict but f(" + v->str() + ")=" + map.image_of(*v).str() + " not open";
      return std::nullopt;
    }));
    out.push_back(timed(claims::kCompatibleContinuous, id, [&]() -> Witness {
      if (!compatible) return std::nullopt;
      if (auto u = find_discontinuity(map)) return "compatible but preimage of " + u->str() + " not open";
      return std::nullopt;
    }));
    out.push_back(timed(claims::kStrictContinuous, id, [&]() -> Witness {
      if (!strict) return std::nullopt;
      if (auto u = find_discontinuity(map)) return "strict but preimage of " + u->str() + " not open";
      return std::nullopt;
    }));
    out.push_back(timed(claims::kStrictBijectionHomeo, id, [&]() -> Witness {
      if (strict && is_bijective(map) && !is_homeomorphism(map)) return "strict bijection not a homeomorphism";
      return std::nullopt;
    }));
    out.push_back(timed(claims::kQuotientSquare, id, [&]() -> Witness {
      if (!compatible) return std::nullopt;
      for (std::size_t n = 1; n <= th.horizon(); ++n)
        if (!quotient_square_commutes(th, n)) return "n=" + std::to_string(n);
      return std::nullopt;
    }));
    out.push_back(timed(claims::kStrictIffAlphaEpi, id, [&]() -> Witness {
      if (!compatible) return std::nullopt;
      const bool epi = is_alpha_epi_all_n(th);
      if (epi != strict)
        return std::string("strict=") + (strict ? "true" : "false") + " alpha_epi=" + (epi ? "true" : "false");
      return std::nullopt;
    }));
    out.push_back(timed(claims::kAlphaEpiContinuousOpen, id, [&]() -> Witness {
      if (!compatible || !is_alpha_epi_all_n(th)) return std::nullopt;
      if (auto u = find_discontinuity(map)) return "preimage of " + u->str() + " not open";
      if (auto v = find_non_open_image(map)) return "f(" + v->str() + ")=" + map.image_of(*v).str() + " not open";
      return std::nullopt;
    }));
  }
  sort_reports(out);
  return out;
}

std::vector<std::string> compatible_not_strict(const std::vector<NamedHom>& homs) {
  std::vector<std::string> out;
  for (const auto& [id, th] : homs)
    if (is_compatible(th) && !is_strict(th)) out.push_back(id);
  return out;
}

}  // namespace bcktop
