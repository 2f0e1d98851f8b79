#include "premet_cli/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include <premet/dot.hpp>
#include <premet/error.hpp>
#include <premet/json_io.hpp>
#include <premet/omega.hpp>
#include <premet/verify.hpp>

namespace premet::cli {

namespace {

struct Options {
  std::string format = "json";
  std::string output;
  std::size_t max_ground = SizeLimits{}.max_ground;
  std::size_t max_functions = SizeLimits{}.max_functions;
  std::string admission = "one-step";
  std::string probes;

  SizeLimits limits() const {
    SizeLimits l;
    l.max_ground = max_ground;
    l.max_functions = max_functions;
    return l;
  }
  Admission mode() const { return admission == "paths" ? Admission::paths : Admission::one_step; }
};

// What a command produced: text to emit and whether its check passed.
struct Outcome {
  std::string text;
  bool passed = true;
};

// Input error tied to a file, reported as a diagnostic.
struct InputError {
  std::string kind;
  std::string message;
  std::string file;
  std::string field;
};

class Inputs {
 public:
  Json read(const std::string& path) {
    current_ = path;
    std::ifstream in(path);
    if (!in) throw InputError{"InvalidInput", "cannot open file", path, ""};
    try {
      return Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw InputError{"InvalidInput", e.what(), path, ""};
    }
  }

  // Parses `path` with `reader`, so library errors name the file.
  template <class Reader>
  auto load(const std::string& path, Reader&& reader) -> decltype(reader(std::declval<Json>())) {
    auto j = read(path);
    return reader(j);
  }

  const std::string& current() const noexcept { return current_; }

 private:
  std::string current_;
};

SpacePtr shared(ContinuitySpace s) { return std::make_shared<const ContinuitySpace>(std::move(s)); }

Outcome json_outcome(const Json& j, bool passed = true) { return {dump_canonical(j), passed}; }

Outcome report_outcome(const VerificationReport& r) { return json_outcome(report_to_json(r), r.passed); }

void require_json(const Options& opt, const char* command) {
  if (opt.format != "json") {
    throw Error(ErrorKind::InvalidInput, std::string(command) + " has no DOT form", "--format");
  }
}

Outcome lattice_check(const Options& opt, Inputs& in, const std::string& file) {
  const auto lattice = in.load(file, [](const Json& j) { return lattice_from_json(j); });
  if (lattice.kind() == LatticeKind::ext_rationals) {
    throw Error(ErrorKind::InvalidInput, "only finite and omega lattices can be checked", "/kind");
  }
  if (opt.format == "dot") return {lattice_to_dot(lattice), true};
  const auto finite = lattice.kind() == LatticeKind::finite ? lattice.finite_lattice()
                                                            : materialize(*lattice.omega_ground());
  const auto v = value_distributivity(finite);
  Json above = Json::array();
  for (const auto e : v.well_above_zero) above.push_back(finite.id(e));
  Json witness = nullptr;
  if (v.meet_witness) witness = {finite.id(v.meet_witness->first), finite.id(v.meet_witness->second)};
  return json_outcome({{"elements", finite.size()},
                       {"completely_distributive", v.completely_distributive},
                       {"well_above_zero", above},
                       {"upward_closed", v.upward_closed},
                       {"meet_witness", witness},
                       {"value_distributive", v.value_distributive()}},
                      v.value_distributive());
}

Outcome space_topology(const Options& opt, Inputs& in, const std::string& file) {
  const auto space = in.load(file, [](const Json& j) { return space_from_json(j); });
  const auto t = generate_topology(space);
  if (opt.format == "dot") return {topology_to_dot(t), true};
  return json_outcome(topology_to_json(t));
}

Outcome map_check(const Options& opt, Inputs& in, const std::string& file) {
  require_json(opt, "map check");
  const auto map = in.load(file, [](const Json& j) { return map_from_json(j); });
  const auto violation = eps_delta_violation(map);
  Json v = nullptr;
  if (violation) {
    v = {{"point", map.source->points()[violation->point]},
         {"eps", value_to_json(map.target->lattice(), violation->eps)}};
  }
  return json_outcome({{"eps_delta_continuous", !violation},
                       {"top_continuous", is_top_continuous(map)},
                       {"violation", v}},
                      !violation);
}

std::vector<SpacePtr> read_spaces(Inputs& in, const std::vector<std::string>& files) {
  std::vector<SpacePtr> out;
  for (const auto& f : files) out.push_back(shared(in.load(f, [](const Json& j) { return space_from_json(j); })));
  return out;
}

std::vector<SpacePtr> probes_for(const Options& opt, Inputs& in) {
  if (opt.probes.empty()) return default_probes();
  return in.load(opt.probes, [](const Json& j) {
    if (!j.is_array()) throw Error(ErrorKind::InvalidInput, "expected an array of spaces", "/");
    std::vector<SpacePtr> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
      out.push_back(shared(space_from_json(j[i], "/" + std::to_string(i))));
    }
    return out;
  });
}

UniversalInstance read_instance(const Options& opt, Inputs& in, const std::string& file) {
  return in.load(file, [&](const Json& j) { return instance_from_json(j, opt.limits(), opt.mode()); });
}

void add_common(CLI::App* app, Options& opt) {
  app->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "dot"}));
  app->add_option("-o,--output", opt.output, "Write the artifact to a file");
  app->add_option("--max-ground", opt.max_ground, "Largest product ground");
  app->add_option("--max-functions", opt.max_functions, "Largest function ground");
}

void add_admission(CLI::App* app, Options& opt) {
  app->add_option("--admission", opt.admission, "Admission relation for final structures")
      ->check(CLI::IsMember({"one-step", "paths"}));
}

void emit_diagnostic(std::ostream& err, const InputError& e) {
  err << Json{{"error", e.kind}, {"message", e.message}, {"file", e.file}, {"field", e.field}}.dump()
      << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite continuity spaces: constructions, checks and verifiers", "premet"};
  app.require_subcommand(1);
  Options opt;
  Inputs in;
  std::function<Outcome()> action;

  auto group = [&](const char* name, const char* help) {
    auto* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    return g;
  };
  auto leaf = [&](CLI::App* parent, const char* name, const char* help) {
    auto* c = parent->add_subcommand(name, help);
    add_common(c, opt);
    return c;
  };

  std::string file, second;
  std::vector<std::string> files;
  std::size_t n = 0;
  bool count_only = false;

  auto* lattice = group("lattice", "Value lattices");
  auto* lattice_check_cmd = leaf(lattice, "check", "Value-distributivity with witnesses");
  lattice_check_cmd->add_option("lattice", file, "Lattice JSON")->required();
  lattice_check_cmd->callback([&] { action = [&] { return lattice_check(opt, in, file); }; });

  auto* space = group("space", "Continuity spaces and topologies");
  auto* topology_cmd = leaf(space, "topology", "Generated topology of a space");
  topology_cmd->add_option("space", file, "Space JSON")->required();
  topology_cmd->callback([&] { action = [&] { return space_topology(opt, in, file); }; });
  auto* flagg_cmd = leaf(space, "flagg", "Omega-valued space of a topology");
  flagg_cmd->add_option("topology", file, "Topology JSON")->required();
  flagg_cmd->callback([&] {
    action = [&] {
      require_json(opt, "space flagg");
      return json_outcome(space_to_json(flagg(in.load(file, [](const Json& j) { return topology_from_json(j); }))));
    };
  });
  auto* premetrize_cmd = leaf(space, "premetrize", "[0, inf]-valued space of a topology");
  premetrize_cmd->add_option("topology", file, "Topology JSON")->required();
  premetrize_cmd->callback([&] {
    action = [&] {
      require_json(opt, "space premetrize");
      return json_outcome(
          space_to_json(premetrize(in.load(file, [](const Json& j) { return topology_from_json(j); }))));
    };
  });

  auto* map = group("map", "Maps between spaces");
  auto* map_check_cmd = leaf(map, "check", "eps-delta and topological continuity");
  map_check_cmd->add_option("map", file, "Map JSON")->required();
  map_check_cmd->callback([&] { action = [&] { return map_check(opt, in, file); }; });

  auto* limit = group("limit", "Initial structures");
  auto* product_cmd = leaf(limit, "product", "Product of spaces");
  product_cmd->add_option("spaces", files, "Space JSON files")->required();
  product_cmd->callback([&] {
    action = [&] {
      require_json(opt, "limit product");
      return json_outcome(lift_to_json(product(read_spaces(in, files), opt.limits())));
    };
  });
  auto* equalise_cmd = leaf(limit, "equalise", "Equaliser of two parallel maps");
  equalise_cmd->add_option("f", file, "Map JSON")->required();
  equalise_cmd->add_option("g", second, "Map JSON")->required();
  equalise_cmd->callback([&] {
    action = [&] {
      require_json(opt, "limit equalise");
      const auto f = in.load(file, [](const Json& j) { return map_from_json(j); });
      const auto g = in.load(second, [](const Json& j) { return map_from_json(j); });
      return json_outcome(lift_to_json(equaliser(f, g)));
    };
  });
  auto* initial_cmd = leaf(limit, "initial", "Initial lift of a cone");
  initial_cmd->add_option("cone", file, "Cone JSON")->required();
  initial_cmd->callback([&] {
    action = [&] {
      require_json(opt, "limit initial");
      const auto cone = in.load(file, [](const Json& j) { return cone_from_json(j); });
      return json_outcome(lift_to_json(initial_lift(cone, opt.limits())));
    };
  });

  auto* colimit = group("colimit", "Final structures");
  auto* coproduct_cmd = leaf(colimit, "coproduct", "Coproduct of spaces");
  coproduct_cmd->add_option("spaces", files, "Space JSON files")->required();
  coproduct_cmd->callback([&] {
    action = [&] {
      require_json(opt, "colimit coproduct");
      return json_outcome(lift_to_json(coproduct(read_spaces(in, files), opt.limits())));
    };
  });
  auto* coequalise_cmd = leaf(colimit, "coequalise", "Quotient by a relation");
  add_admission(coequalise_cmd, opt);
  coequalise_cmd->add_option("space", file, "Space JSON")->required();
  coequalise_cmd->add_option("relation", second, "Blocks JSON")->required();
  coequalise_cmd->callback([&] {
    action = [&] {
      require_json(opt, "colimit coequalise");
      const auto s = shared(in.load(file, [](const Json& j) { return space_from_json(j); }));
      const auto blocks = in.load(second, [](const Json& j) { return relation_from_json(j); });
      return json_outcome(lift_to_json(coequaliser(s, blocks, opt.limits(), opt.mode())));
    };
  });
  auto* final_cmd = leaf(colimit, "final", "Final lift of a cocone");
  add_admission(final_cmd, opt);
  final_cmd->add_option("cocone", file, "Cocone JSON")->required();
  final_cmd->callback([&] {
    action = [&] {
      require_json(opt, "colimit final");
      const auto c = in.load(file, [](const Json& j) { return cocone_from_json(j); });
      return json_outcome(lift_to_json(final_lift(c.points, c.legs, opt.limits(), opt.mode())));
    };
  });

  auto* verify = group("verify", "Exhaustive verifiers");
  auto* round_trip_cmd = leaf(verify, "round-trip", "Round trips over every topology on n points");
  round_trip_cmd->add_option("-n", n, "Number of points")->required();
  round_trip_cmd->callback([&] {
    action = [&] {
      require_json(opt, "verify round-trip");
      return report_outcome(round_trip_suite(n));
    };
  });
  auto* adjunction_cmd = leaf(verify, "adjunction", "Hom-set agreement against probes");
  adjunction_cmd->add_option("topology", file, "Topology JSON")->required();
  adjunction_cmd->add_option("--probes", opt.probes, "JSON array of probe spaces");
  adjunction_cmd->callback([&] {
    action = [&] {
      require_json(opt, "verify adjunction");
      const auto t = in.load(file, [](const Json& j) { return topology_from_json(j); });
      return report_outcome(check_adjunction(t, probes_for(opt, in)));
    };
  });
  for (const bool is_colimit : {false, true}) {
    auto* cmd = leaf(verify, is_colimit ? "colimit" : "limit",
                     is_colimit ? "Couniversal property by probes" : "Universal property by probes");
    cmd->add_option("instance", file, "Instance JSON")->required();
    cmd->add_option("--probes", opt.probes, "JSON array of probe spaces");
    if (is_colimit) add_admission(cmd, opt);
    cmd->callback([&, is_colimit] {
      action = [&, is_colimit] {
        require_json(opt, "verify");
        const auto inst = read_instance(opt, in, file);
        const auto probes = probes_for(opt, in);
        return report_outcome(is_colimit ? check_colimit(inst, probes) : check_limit(inst, probes));
      };
    });
  }
  auto* preserve_cmd = leaf(verify, "preserve", "Generated topology against the topological (co)limit");
  preserve_cmd->add_option("instance", file, "Instance JSON")->required();
  add_admission(preserve_cmd, opt);
  preserve_cmd->callback([&] {
    action = [&] {
      require_json(opt, "verify preserve");
      return report_outcome(check_O_preservation(read_instance(opt, in, file)));
    };
  });
  auto* gap_cmd = leaf(verify, "gap", "Topologically but not eps-delta continuous maps");
  gap_cmd->add_option("source", file, "Space JSON")->required();
  gap_cmd->add_option("target", second, "Space JSON")->required();
  gap_cmd->callback([&] {
    action = [&] {
      require_json(opt, "verify gap");
      const auto src = in.load(file, [](const Json& j) { return space_from_json(j); });
      const auto dst = in.load(second, [](const Json& j) { return space_from_json(j); });
      return report_outcome(continuity_gap_search(src, dst));
    };
  });
  auto* replay_cmd = leaf(verify, "replay", "Re-run a recorded counterexample");
  replay_cmd->add_option("report", file, "Report or counterexample JSON")->required();
  replay_cmd->callback([&] {
    action = [&] {
      require_json(opt, "verify replay");
      const auto j = in.read(file);
      const auto& ce = j.contains("counterexample") ? j.at("counterexample") : j;
      const bool reproduces = replay(ce);
      return json_outcome({{"reproduces", reproduces}}, reproduces);
    };
  });

  auto* enumerate = group("enum", "Enumerations");
  auto* topologies_cmd = leaf(enumerate, "topologies", "Every topology on n points");
  topologies_cmd->add_option("-n", n, "Number of points")->required();
  topologies_cmd->add_flag("--count", count_only, "Print only the number of topologies");
  topologies_cmd->callback([&] {
    action = [&] {
      require_json(opt, "enum topologies");
      const auto all = enumerate_topologies(n);
      if (count_only) return json_outcome(all.size());
      Json list = Json::array();
      for (const auto& t : all) list.push_back(topology_to_json(t));
      return json_outcome(list);
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    emit_diagnostic(err, {"InvalidArguments", e.what(), "", ""});
    return kInputError;
  }

  try {
    const auto outcome = action();
    if (opt.output.empty()) {
      out << outcome.text;
    } else {
      std::ofstream file_out(opt.output, std::ios::binary);
      if (!file_out) throw InputError{"InvalidInput", "cannot write output", opt.output, ""};
      file_out << outcome.text;
    }
    return outcome.passed ? kSuccess : kCheckFailed;
  } catch (const InputError& e) {
    emit_diagnostic(err, e);
  } catch (const Error& e) {
    emit_diagnostic(err, {std::string(to_string(e.kind())), e.what(), in.current(), e.field()});
  } catch (const Json::exception& e) {
    emit_diagnostic(err, {"InvalidInput", e.what(), in.current(), ""});
  }
  return kInputError;
}

}  // namespace premet::cli
