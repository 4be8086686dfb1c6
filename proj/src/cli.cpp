#include "bcktop/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>

#include "bcktop/instance.hpp"

namespace bcktop::cli {
namespace {

using io::InstanceFile;

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

int cmd_verify(const InstanceFile& inst, std::ostream& out) {
  const auto& alg = inst.algebra;
  out << "algebra: size=" << alg.size() << " bounded=" << (is_bounded(alg) ? "true" : "false")
      << " commutative=" << (is_commutative(alg) ? "true" : "false")
      << " implicative=" << (is_implicative(alg) ? "true" : "false") << '\n';
  for (const auto& m : inst.modules) out << "module " << m.name << ": size=" << m.module.size() << '\n';
  for (const auto& s : inst.submodules) out << "submodule " << s.name << ": " << s.submodule.str() << '\n';
  for (const auto& d : inst.dss) out << "dss " << d.name << ": " << d.dss.str() << '\n';
  for (const auto& h : inst.homs) {
    out << "hom " << h.name << ": " << h.source << "->" << h.target << " [";
    for (std::size_t i = 0; i < h.hom.map().size(); ++i) out << (i ? "," : "") << h.hom.map()[i];
    out << "]\n";
  }
  out << "valid\n";
  return kOk;
}

int cmd_topology(const InstanceFile& inst, const std::string& dss, bool base, bool connected, std::ostream& out) {
  const BaigTopology t = build_baig(inst.chain(dss).dss);
  if (connected) {
    out << "connected=" << (is_connected(t) ? "true" : "false") << '\n';
  } else {
    for (const auto& s : base ? t.base() : t.opens()) out << s.str() << '\n';
  }
  return kOk;
}

int cmd_check_map(const InstanceFile& inst, const std::string& hom, const std::string& source_dss,
                  const std::string& target_dss, const std::string& props, std::ostream& out) {
  const auto properties = split_commas(props);
  if (properties.empty()) throw io::UsageError("--props is empty");
  for (const auto& p : properties)
    if (std::find(io::kMapProperties.begin(), io::kMapProperties.end(), p) == io::kMapProperties.end()) {
      std::string known;
      for (const auto& k : io::kMapProperties) known += (known.empty() ? "" : ", ") + k;
      throw io::UsageError("unknown property '" + p + "' (available: " + known + ")");
    }

  const auto& h = inst.hom(hom);
  const auto& a = inst.chain(source_dss);
  const auto& b = inst.chain(target_dss);
  if (a.module != h.source)
    throw io::UsageError("dss '" + a.name + "' is over " + a.module + ", hom '" + h.name + "' starts at " + h.source);
  if (b.module != h.target)
    throw io::UsageError("dss '" + b.name + "' is over " + b.module + ", hom '" + h.name + "' ends at " + h.target);

  const auto th = TopologizedHom::make(h.hom, a.dss, b.dss);
  bool all = true;
  for (const auto& p : properties) {
    const auto r = io::check_property(th, p);
    all = all && r.holds;
    out << p << '=' << (r.holds ? "true" : "false");
    if (r.witness) out << " witness=" << *r.witness;
    out << '\n';
  }
  return all ? kOk : kFailed;
}

int cmd_suite(const InstanceFile& inst, std::ostream& out) {
  const auto homs = io::declared_homs(inst);
  std::vector<VerdictReport> reports = run_space_suite(io::declared_spaces(inst));
  for (auto& r : run_theorem_suite(homs)) reports.push_back(std::move(r));
  for (auto& r : io::run_checks(inst)) {
    r.instance = "check " + r.instance;
    reports.push_back(std::move(r));
  }

  std::size_t claim_width = 0;
  std::size_t instance_width = 0;
  for (const auto& r : reports) {
    claim_width = std::max(claim_width, r.claim.size());
    instance_width = std::max(instance_width, r.instance.size());
  }
  std::size_t failed = 0;
  for (const auto& r : reports) {
    failed += r.holds ? 0 : 1;
    std::string line = std::string(r.holds ? "PASS" : "FAIL") + "  " + r.claim +
                       std::string(claim_width - r.claim.size(), ' ') + "  " + r.instance;
    if (r.witness) line += std::string(instance_width - r.instance.size(), ' ') + "  " + *r.witness;
    out << line << '\n';
  }
  out << reports.size() << " checks, " << reports.size() - failed << " passed, " << failed << " failed\n";

  const auto gap = compatible_not_strict(homs);
  out << "compatible-not-strict:";
  if (gap.empty()) out << " none";
  for (const auto& id : gap) out << ' ' << id;
  out << '\n';
  return failed == 0 ? kOk : kFailed;
}

int cmd_enumerate(const InstanceFile& inst, const std::string& what, std::ostream& out) {
  if (what == "submodules") {
    for (const auto& m : inst.modules)
      for (const auto& s : enumerate_submodules(m.module)) out << m.name << ' ' << s.str() << '\n';
  } else {
    for (const auto& a : inst.modules)
      for (const auto& b : inst.modules)
        for (const auto& f : enumerate_homs(a.module, b.module)) {
          out << a.name << "->" << b.name << " [";
          for (std::size_t i = 0; i < f.map().size(); ++i) out << (i ? "," : "") << f.map()[i];
          out << "]\n";
        }
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite BCK-modules and their Baig topologies"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "bcktop 0.1.0");

  std::string file;
  std::string dss, hom, source_dss, target_dss, what;
  std::string props = "compatible,strict,open,continuous,homeo";
  bool list_opens = false, base = false, connected = false;

  auto* verify = app.add_subcommand("verify", "Parse and validate an instance file");
  verify->add_option("FILE", file, "Instance file")->required();

  auto* topology = app.add_subcommand("topology", "Print the opens, base, or connectedness of a dss");
  topology->add_option("FILE", file, "Instance file")->required();
  topology->add_option("--dss", dss, "dss name")->required();
  auto* opens_flag = topology->add_flag("--list-opens", list_opens, "Print every open set (default)");
  auto* base_flag = topology->add_flag("--base", base, "Print the coset base");
  auto* connected_flag = topology->add_flag("--connected", connected, "Print connectedness");
  opens_flag->excludes(base_flag)->excludes(connected_flag);
  base_flag->excludes(connected_flag);

  auto* check_map = app.add_subcommand("check-map", "Check properties of a topologized homomorphism");
  check_map->add_option("FILE", file, "Instance file")->required();
  check_map->add_option("--hom", hom, "hom name")->required();
  check_map->add_option("--source-dss", source_dss, "dss on the source")->required();
  check_map->add_option("--target-dss", target_dss, "dss on the target")->required();
  check_map->add_option("--props", props, "Comma-separated properties")->capture_default_str();

  auto* suite = app.add_subcommand("suite", "Run every claim on every declared instance");
  suite->add_option("FILE", file, "Instance file")->required();

  auto* enumerate = app.add_subcommand("enumerate", "List submodules or homomorphisms");
  enumerate->add_option("FILE", file, "Instance file")->required();
  enumerate->add_option("--what", what, "submodules or homs")
      ->required()
      ->check(CLI::IsMember({"submodules", "homs"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const InstanceFile inst = io::load_instance(file);
    if (*verify) return cmd_verify(inst, out);
    if (*topology) return cmd_topology(inst, dss, base, connected, out);
    if (*check_map) return cmd_check_map(inst, hom, source_dss, target_dss, props, out);
    if (*suite) return cmd_suite(inst, out);
    if (*enumerate) return cmd_enumerate(inst, what, out);
  } catch (const io::UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const io::ParseError& e) {
    err << file << ": parse error: " << e.what() << '\n';
    return kFailed;
  } catch (const io::ValidationError& e) {
    err << file << ": invalid: " << e.what() << '\n';
    return kFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}

}  // namespace bcktop::cli
