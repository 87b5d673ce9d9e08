#include "sgtool/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>

#include <CLI11.hpp>

#include "verbs.hpp"

namespace sgtool {

namespace {

constexpr const char* kSchema = "sgtool/1";

void apply_caps(const Options& o, sgraph::Limits& l, std::ostream& err) {
  std::optional<int> edges = o.max_edges;
  if (!edges) {
    if (const char* env = std::getenv("SGTOOL_MAX_EDGES")) {
      try {
        edges = std::stoi(env);
      } catch (const std::exception&) {
        throw UsageError(std::string("SGTOOL_MAX_EDGES is not an integer: ") + env);
      }
    }
  }
  if (edges) {
    if (*edges < 0) throw UsageError("edge cap must be non-negative");
    err << "warning: edge caps overridden to " << *edges << "; exponential algorithms may run for a long time\n";
    l.circle_edges = l.balancing_edges = l.frame_edges = l.lattice_edges = l.subset_edges = *edges;
    l.acyclic_ends = 2 * *edges;
  }
  if (o.max_order) {
    if (*o.max_order < 0) throw UsageError("order cap must be non-negative");
    err << "warning: order caps overridden to " << *o.max_order << "; exponential algorithms may run for a long time\n";
    l.frame_vertices = l.matrix_tree_order = l.region_oracle_order = l.stable_set_order = l.isomorphism_order =
        *o.max_order;
  }
}

}  // namespace

std::vector<std::string> verbs() {
  std::vector<std::string> out;
  for (const auto& v : verb_table()) out.push_back(v.name);
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"signed graph toolkit", "sgtool"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", opt.format, "text|json|tsv")->check(CLI::IsMember({"text", "json", "tsv"}));
  app.add_option("--threads", opt.threads, "worker threads")->check(CLI::Range(1, 256));
  app.add_option("--max-edges", opt.max_edges, "override edge caps");
  app.add_option("--max-order", opt.max_order, "override order caps");

  std::vector<std::pair<CLI::App*, const Verb*>> subs;
  for (const auto& v : verb_table()) {
    auto* sub = app.add_subcommand(v.name, v.help);
    v.setup(*sub, opt);
    subs.emplace_back(sub, &v);
  }

  for (std::size_t i = 0; i < args.size(); ++i) {
    const auto& a = args[i];
    if (a == "--format" || a == "--threads" || a == "--max-edges" || a == "--max-order") {
      ++i;
      continue;
    }
    if (a.rfind("-", 0) == 0) continue;
    const auto names = verbs();
    if (std::find(names.begin(), names.end(), a) == names.end()) {
      err << "sgtool: unknown verb '" << a << "'\n";
      return 2;
    }
    break;
  }

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "sgtool: " << e.what() << "\n";
    return 2;
  }

  const Verb* verb = nullptr;
  for (auto& [sub, v] : subs)
    if (sub->parsed()) verb = v;
  if (!verb) {
    err << "sgtool: no verb given\n";
    return 2;
  }

  try {
    if (opt.format == "tsv" && verb->name != "matrix") throw UsageError("--format tsv is only available for matrix");
    Context ctx{opt, {}};
    apply_caps(opt, ctx.limits, err);
    Report r = verb->run(ctx);
    if (opt.format == "json") {
      json doc = {{"schema", kSchema}, {"verb", verb->name}, {"result", r.result}};
      doc["graph"] = r.graph ? graph_summary(*r.graph) : json(nullptr);
      out << doc.dump(2) << "\n";
    } else {
      out << r.text;
    }
    return 0;
  } catch (const UsageError& e) {
    err << "sgtool " << verb->name << ": " << e.what() << "\n";
    return 2;
  } catch (const sgraph::ParseError& e) {
    err << "sgtool " << verb->name << ": " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "sgtool " << verb->name << ": " << e.what() << "\n";
    return 1;
  } catch (const sgraph::Error& e) {
    err << "sgtool " << verb->name << ": " << e.what() << "\n";
    return 1;
  }
}

const std::vector<Coverage>& coverage() {
  static const std::vector<Coverage> table = {
      {"parse", {"info", "sigma4.sg"}},
      {"serialize", {"delete", "sigma4.sg", "--edges", "h"}},
      {"edge_set_sign", {"info", "sigma4.sg", "--edges", "a,b,c"}},
      {"enumerate_circles", {"circles", "sigma4.sg"}},
      {"spanning_forest", {"circles", "sigma4.sg", "--forest"}},
      {"fundamental_system", {"circles", "k4.sg", "--forest"}},
      {"balance_partition", {"balance", "sigma4.sg"}},
      {"is_balanced", {"balance", "c4.sg"}},
      {"harary_bipartition", {"balance", "c4.sg", "--bipartition"}},
      {"switch_graph", {"switch", "sigma4.sg", "--set", "1,3"}},
      {"switching_equivalent", {"switch", "neg_c4.sg", "--equivalent-to", "c4.sg"}},
      {"classify_balancing_edges", {"balancing-edges", "neg_c3_pendant.sg"}},
      {"balancing_vertices", {"balancing-edges", "sigma4_links.sg"}},
      {"min_balancing_set", {"balancing-edges", "pmk3.sg"}},
      {"has_two_disjoint_negative_circles", {"balancing-edges", "neg_c3_pendant.sg"}},
      {"delete_edges", {"delete", "sigma4.sg", "--edges", "a,h"}},
      {"delete_vertices", {"delete", "sigma4.sg", "--vertices", "2"}},
      {"contract_set", {"contract", "sigma4.sg", "--edges", "a"}},
      {"enumerate_frame_circuits", {"frame-circuits", "sigma4.sg"}},
      {"is_frame_circuit", {"frame-circuits", "pmk3.sg", "--check", "p12,n12"}},
      {"balance_closure", {"closure", "sigma4.sg", "--edges", "a", "--balance"}},
      {"closure", {"closure", "pmk3.sg", "--edges", "p12,n12"}},
      {"closure_by_circuits", {"closure", "pmk3.sg", "--edges", "p12,n12", "--circuits"}},
      {"closed_sets", {"closure", "pmk2full.sg", "--lattice"}},
      {"rank", {"rank", "sigma4.sg"}},
      {"is_independent", {"rank", "pmk3.sg", "--edges", "p12,n12"}},
      {"incidence_matrix", {"matrix", "sigma4.sg", "--which", "incidence"}},
      {"adjacency_matrix", {"matrix", "sigma4.sg", "--which", "adjacency"}},
      {"reduce", {"matrix", "sigma4.sg", "--which", "adjacency", "--reduced"}},
      {"laplacian", {"matrix", "sigma4.sg", "--which", "laplacian"}},
      {"matrix_tree", {"matrix-tree", "pmk3.sg"}},
      {"spectrum", {"spectrum", "k4.sg"}},
      {"arrangement", {"regions", "sigma4_links.sg", "--hyperplanes"}},
      {"region_count", {"regions", "pmk3.sg", "--oracle"}},
      {"orient", {"acyclic", "c4.sg", "--reverse", "a"}},
      {"is_acyclic", {"acyclic", "neg_c4.sg", "--reverse", "a"}},
      {"enumerate_acyclic", {"acyclic", "pmk3.sg"}},
      {"characteristic_polynomial", {"charpoly", "pmk3.sg"}},
      {"intersection_lattice_size", {"charpoly", "pmk3.sg", "--lattice-size"}},
      {"chromatic_poly_delcon", {"chromatic", "pmk2full.sg", "--zero-free"}},
      {"chromatic_poly_subset", {"chromatic", "sigma4.sg", "--algorithm", "subset"}},
      {"chromatic_via_expansion", {"chromatic", "k4.sg", "--algorithm", "expansion"}},
      {"count_proper", {"chromatic", "pmk3.sg", "--count", "2"}},
      {"chromatic_numbers", {"chromatic", "pmk3.sg", "--numbers"}},
      {"is_proper", {"chromatic", "c4.sg", "--coloring", "1,-1,1,-1"}},
      {"is_stable", {"chromatic", "c4.sg", "--stable", "1,3"}},
      {"catalog", {"catalog", "--family", "pmkn", "--n", "3"}},
      {"catalog_base", {"catalog", "--family", "posfull", "--base", "k4.sg"}},
      {"unsigned_chromatic", {"catalog", "--family", "pos", "--base", "c4.sg"}},
      {"negative_flat_sum", {"catalog", "--family", "neg", "--base", "c4.sg"}},
      {"complement_max_matching", {"catalog", "--family", "neg", "--base", "k4.sg"}},
      {"line_graph", {"linegraph", "sigma4_links.sg"}},
      {"reduced_line_graph", {"linegraph", "k4.sg", "--reduced"}},
      {"line_adjacency_identity", {"linegraph", "sigma4_links.sg", "--identity"}},
      {"harary_norman", {"linegraph", "dipath.sg", "--harary-norman"}},
      {"generalized_line_graph", {"glinegraph", "c4.sg", "--m", "1,0,2,0"}},
      {"root_system", {"roots", "--name", "D", "--n", "4", "--list"}},
      {"membership_in_root_system", {"roots", "--name", "D", "--n", "4", "--check", "k4.sg"}},
      {"construct_gramian", {"gramian", "k4.sg", "--nu", "3"}},
      {"normalize", {"gramian", "k4.sg", "--nu", "3", "--normalize"}},
      {"edge_vector_representation", {"gramian", "k4.sg", "--edge-vectors"}},
      {"verify_representation", {"gramian", "sigma4_links.sg", "--edge-vectors"}},
      {"random_graph", {"random", "--seed", "7", "--order", "4", "--edges", "6"}},
  };
  return table;
}

}  // namespace sgtool
