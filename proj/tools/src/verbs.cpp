#include "verbs.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include <CLI11.hpp>

namespace sgtool {

using namespace sgraph;

namespace {

SignedGraph load(const Context& c) {
  if (c.opt.file.empty()) throw UsageError("missing input graph file");
  return read_graph_file(c.opt.file);
}

EdgeSet edges_arg(const SignedGraph& g, const std::string& ids) {
  try {
    return g.edge_set(ids);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

EdgeSet edges_or_all(const SignedGraph& g, const std::string& ids) {
  return ids.empty() ? g.all_edges() : edges_arg(g, ids);
}

std::vector<VertexId> vertices_arg(const SignedGraph& g, const std::string& text) {
  std::vector<VertexId> out;
  try {
    for (int v : parse_int_list(text, "vertex")) {
      if (v < 1 || v > g.order()) throw UsageError("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(g.order()));
      out.push_back(v - 1);
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> ints_arg(const std::string& text, const char* what) {
  try {
    return parse_int_list(text, what);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::string yes(bool b) { return b ? "true" : "false"; }

std::string line(const std::string& key, const std::string& value) { return key + ": " + value + "\n"; }

std::vector<std::string> vertex_labels(int n) {
  std::vector<std::string> out;
  for (int v = 0; v < n; ++v) out.push_back("v" + std::to_string(v + 1));
  return out;
}

std::vector<std::string> edge_labels(const SignedGraph& g) {
  std::vector<std::string> out;
  for (const auto& e : g.edges()) out.push_back(e.id);
  return out;
}

void file_arg(CLI::App& app, Options& o) { app.add_option("file", o.file, "graph in sg format")->required(); }

// ---------------------------------------------------------------- sg-core

Report info(const Context& c) {
  auto g = load(c);
  Report r;
  r.graph = g;
  std::vector<int> degrees;
  for (VertexId v = 0; v < g.order(); ++v) degrees.push_back(degree(g, v));
  r.result["degrees"] = degrees;
  r.result["balanced"] = is_balanced(g);
  r.result["edges"] = graph_json(g)["edges"];
  std::ostringstream os;
  os << "n: " << g.order() << ", m: " << g.size() << "\n";
  os << "kinds: link=" << g.edges_of_kind(EdgeKind::Link).count() << " loop=" << g.edges_of_kind(EdgeKind::Loop).count()
     << " half=" << g.edges_of_kind(EdgeKind::Half).count() << " loose=" << g.edges_of_kind(EdgeKind::Loose).count()
     << "\n";
  os << "degrees:";
  for (int d : degrees) os << ' ' << d;
  os << "\n" << line("balanced", yes(is_balanced(g)));
  if (!c.opt.edges.empty()) {
    auto s = edges_arg(g, c.opt.edges);
    std::string sign(1, to_char(edge_set_sign(g, s)));
    r.result["sign"] = sign;
    os << "sign " << edge_list(g, s) << ": " << sign << "\n";
  }
  r.text = os.str();
  return r;
}

Report circles(const Context& c) {
  auto g = load(c);
  Report r;
  r.graph = g;
  auto s = edges_or_all(g, c.opt.edges);
  json list = json::array();
  std::string text;
  for (const auto& circle : enumerate_circles(g, s, c.limits)) {
    std::string sign(1, to_char(edge_set_sign(g, circle.edges())));
    list.push_back({{"edges", edge_ids(g, circle.edges())}, {"sign", sign}, {"vertices", vertex_numbers(circle.vertices(g))}});
    text += "circle " + edge_list(g, circle.edges()) + " " + sign + "\n";
  }
  r.result["circles"] = list;
  if (c.opt.forest) {
    auto t = spanning_forest(g, s);
    r.result["forest"] = edge_ids(g, t);
    text += line("forest", edge_list(g, t));
    json fund = json::object();
    for (const auto& [i, circle] : fundamental_system(g, t)) {
      if (!s.test(i)) continue;
      fund[g.edge(i).id] = edge_ids(g, circle.edges());
      text += "fundamental " + g.edge(i).id + ": " + edge_list(g, circle.edges()) + "\n";
    }
    r.result["fundamental"] = fund;
  }
  r.text = text;
  return r;
}

// ---------------------------------------------------------------- balance

Report balance(const Context& c) {
  auto g = load(c);
  Report r;
  r.graph = g;
  auto s = edges_or_all(g, c.opt.edges);
  auto bp = balance_partition(g, s);
  const bool bal = is_balanced(g, s);
  json blocks = json::array();
  std::string block_text;
  for (const auto& blk : bp.pib) {
    blocks.push_back(vertex_numbers(blk));
    block_text += (block_text.empty() ? "" : " ") + vertex_set(blk);
  }
  r.result = {{"balanced", bal}, {"b", bp.b}, {"v0", vertex_numbers(bp.v0)}, {"blocks", blocks}};
  r.text = "balanced: " + yes(bal) + ", b=" + std::to_string(bp.b) + ", V0=" + vertex_set(bp.v0) + "\n";
  if (bp.b > 0) r.text += line("blocks", block_text);
  if (c.opt.bipartition) {
    auto hp = harary_bipartition(s == g.all_edges() ? g : delete_edges(g, g.all_edges() - s));
    if (hp) {
      r.result["harary"] = {vertex_numbers(hp->first), vertex_numbers(hp->second)};
      r.text += "harary: " + vertex_set(hp->first) + " | " + vertex_set(hp->second) + "\n";
    } else {
      r.result["harary"] = nullptr;
      r.text += "harary: none\n";
    }
  }
  return r;
}

Report switch_verb(const Context& c) {
  auto g = load(c);
  Report r;
  r.graph = g;
  if (!c.opt.other_file.empty()) {
    auto h = read_graph_file(c.opt.other_file);
    if (!g.same_underlying(h)) throw DomainError("graphs do not share an underlying graph");
    auto z = switching_equivalent(g, h);
    r.result["equivalent"] = z.has_value();
    r.text = line("equivalent", yes(z.has_value()));
    if (z) {
      r.result["switch"] = vertex_numbers(z->minus_set());
      r.text += line("switch", vertex_set(z->minus_set()));
    }
    return r;
  }
  SwitchingFunction z;
  if (c.opt.to_positive) {
    auto hp = harary_bipartition(g);
    if (!hp) {
      auto bp = balance_partition(g);
      throw DomainError("balance required: graph is unbalanced (V0=" + vertex_set(bp.v0) + ")");
    }
    z = SwitchingFunction::from_set(g.order(), hp->second);
  } else {
    z = SwitchingFunction::from_set(g.order(), vertices_arg(g, c.opt.set));
  }
  auto h = switch_graph(g, z);
  r.result["switch"] = vertex_numbers(z.minus_set());
  r.result["graph"] = graph_json(h);
  r.text = "# switched at " + vertex_set(z.minus_set()) + "\n" + serialize(h);
  return r;
}

Report balancing_edges(const Context& c) {
  auto g = load(c);
  Report r;
  r.graph = g;
  auto cls = classify_balancing_edges(g);
  json edges = json::object();
  std::string text;
  for (int i = 0; i < g.size(); ++i) {
    const char* name = cls[static_cast<std::size_t>(i)] == BalancingEdge::Total     ? "total"
                       : cls[static_cast<std::size_t>(i)] == BalancingEdge::Partial ? "partial"
                                                                                     : "none";
    edges[g.edge(i).id] = name;
    text += g.edge(i).id + ": " + name + "\n";
  }
  auto bv = balancing_vertices(g);
  auto mbs = min_balancing_set(g, c.limits);
  bool two = has_two_disjoint_negative_circles(g, c.limits);
  r.result = {{"edges", edges},
              {"balancing_vertices", vertex_numbers(bv)},
              {"min_balancing_set", edge_ids(g, mbs)},
              {"two_disjoint_negative_circles", two}};
  text += line("balancing vertices", vertex_set(bv));
  text += line("minimum balancing set", edge_list(g, mbs) + " (size " + std::to_string(mbs.count()) + ")");
  text += line("two disjoint negative circles", yes(two));
  r.text = text;
  return r;
}

// ---------------------------------------------------------------- minors

Report delete_verb(const Context& c) {
  auto g = load(c);
  Report r;
  r.graph = g;
  if (!c.opt.edges.empty() && !c.opt.vertices.empty()) throw UsageError("give --edges or --vertices, not both");
  SignedGraph h = c.opt.vertices.empty() ? delete_edges(g, edges_arg(g, c.opt.edges))
                                         : delete_vertices(g, vertices_arg(g, c.opt.vertices));
  r.result["graph"] = graph_json(h);
  r.text = serialize(h);
  return r;
}

Report contract(const Context& c) {
  auto g = load(c);
  Report r;
  r.graph = g;
  auto [h, trace] = contract_set(g, edges_arg(g, c.opt.edges));
  json image = json::array();
  std::string text = "# image:";
  for (VertexId v = 0; v < g.order(); ++v) {
    auto img = trace.image[static_cast<std::size_t>(v)];
    image.push_back(img ? json(*img + 1) : json(nullptr));
    text += " " + std::to_string(v + 1) + "->" + (img ? std::to_string(*img + 1) : std::string("-"));
  }
  r.result = {{"graph", graph_json(h)}, {"image", image}, {"contracted", edge_ids(g, trace.contracted)}};
  r.text = text + "\n" + serialize(h);
  return r;
}

// ---------------------------------------------------------------- frame

json circuit_json(const SignedGraph& g, const FrameCircuit& fc) {
  json circles = json::array();
  for (const auto& s : fc.circles) circles.push_back(edge_ids(g, s));
  return {{"kind", std::string(to_string(fc.kind))}, {"edges", edge_ids(g, fc.edges)}, {"circles", circles},
          {"path", edge_ids(g, fc.path)}};
}

Report frame_circuits(const Context& c) {
  auto g = load(c);
  Report r;
  r.graph = g;
  if (!c.opt.edges.empty()) {
    auto s = edges_arg(g, c.opt.edges);
    auto fc = is_frame_circuit(g, s);
    r.result["circuit"] = fc ? circuit_json(g, *fc) : json(nullptr);
    r.text = fc ? line("frame circuit", std::string(to_string(fc->kind))) : std::string("not a frame circuit\n");
    return r;
  }
  json list = json::array();
  for (const auto& fc : enumerate_frame_circuits(g, c.limits)) {
    list.push_back(circuit_json(g, fc));
    r.text += std::string(to_string(fc.kind)) + " " + edge_list(g, fc.edges) + "\n";
  }
  r.result["circuits"] = list;
  return r;
}

Report closure_verb(const Context& c) {
  auto g = load(c);
  Report r;
  r.graph = g;
  if (c.opt.lattice) {
    auto lat = closed_sets(g, c.limits, c.opt.threads);
    json list = json::array();
    r.text = line("closed sets", std::to_string(lat.size()));
    for (const auto& f : lat.elements) {
      list.push_back(edge_ids(g, f));
      r.text += edge_list(g, f) + "\n";
    }
    r.result["closed_sets"] = list;
    return r;
  }
  auto s = edges_arg(g, c.opt.edges);
  EdgeSet out = c.opt.balance ? balance_closure(g, s) : c.opt.circuits ? closure_by_circuits(g, s, c.limits) : closure(g, s);
  const char* key = c.opt.balance ? "balance closure" : "closure";
  r.result[c.opt.balance ? "balance_closure" : "closure"] = edge_ids(g, out);
  r.text = line(key, edge_list(g, out));
  return r;
}

Report rank_verb(const Context& c) {
  auto g = load(c);
  Report r;
  r.graph = g;
  auto s = edges_or_all(g, c.opt.edges);
  const int rk = rank(g, s);
  const bool ind = is_independent(g, s);
  r.result = {{"rank", rk}, {"independent", ind}, {"edges", edge_ids(g, s)}};
  r.text = "rank: " + std::to_string(rk) + ", independent: " + yes(ind) + "\n";
  return r;
}

// ---------------------------------------------------------------- matrices

Report matrix(const Context& c) {
  auto g = load(c);
  Report r;
  r.graph = g;
  const std::string which = c.opt.which.empty() ? "incidence" : c.opt.which;
  SignedGraph src = c.opt.reduced ? reduce(g) : g;
  IntMatrix m;
  std::vector<std::string> cols;
  if (which == "incidence") {
    m = incidence_matrix(src);
    cols = edge_labels(src);
  } else if (which == "adjacency") {
    m = adjacency_matrix(src);
    cols = vertex_labels(src.order());
  } else if (which == "laplacian") {
    m = laplacian(src);
    cols = vertex_labels(src.order());
  } else {
    throw UsageError("--which must be incidence, adjacency or laplacian");
  }
  r.result = matrix_json(m);
  r.result["which"] = which;
  r.result["column_labels"] = cols;
  if (which == "incidence") {
    // Rank over the rationals, as a cross-check of n - b.
    r.result["rank"] = rank(m);
  }
  r.text = matrix_tsv(m, vertex_labels(src.order()), cols);
  return r;
}

Report matrix_tree_verb(const Context& c) {
  auto g = load(c);
  Report r;
  r.graph = g;
  auto rep = matrix_tree(g, c.limits, c.opt.threads);
  r.result = {{"det_laplacian", big(rep.det_laplacian)}, {"b", rep.b}, {"weighted_sum", big(rep.weighted_sum)},
              {"holds", rep.holds()}};
  std::string bs;
  for (long long x : rep.b) bs += (bs.empty() ? "" : " ") + std::to_string(x);
  r.text = line("det L", big(rep.det_laplacian)) + line("b_i", bs) + line("sum 4^i b_i", big(rep.weighted_sum)) +
           line("equal", yes(rep.holds()));
  return r;
}

Report spectrum_verb(const Context& c) {
  auto g = load(c);
  Report r;
  r.graph = g;
  const std::string which = c.opt.which.empty() ? "adjacency" : c.opt.which;
  IntMatrix m;
  if (which == "adjacency")
    m = adjacency_matrix(c.opt.reduced ? reduce(g) : g);
  else if (which == "laplacian")
    m = laplacian(g);
  else
    throw UsageError("--which must be adjacency or laplacian");
  auto ev = spectrum(m);
  r.result = {{"which", which}, {"eigenvalues", reals(ev)}};
  std::string text = "eigenvalues:";
  for (double x : ev) text += " " + real(x);
  r.text = text + "\n";
  return r;
}

// ---------------------------------------------------------------- orientation

Report regions(const Context& c) {
  auto g = load(c);
  Report r;
  r.graph = g;
  auto rep = region_count(g, c.opt.oracle, c.limits, c.opt.threads);
  r.result = {{"regions", rep.region_count}, {"characteristic_polynomial", polynomial_json(rep.char_poly)},
              {"degenerate", rep.degenerate}};
  r.text = line("regions", std::to_string(rep.region_count)) + line("characteristic polynomial", rep.char_poly.format());
  if (rep.degenerate) r.text += "degenerate hyperplane present\n";
  if (rep.acyclic_count) {
    r.result["acyclic_orientations"] = *rep.acyclic_count;
    r.text += line("acyclic orientations", std::to_string(*rep.acyclic_count));
  }
  if (rep.sign_vector_regions) {
    r.result["sign_vector_regions"] = *rep.sign_vector_regions;
    r.text += line("sign-vector regions", std::to_string(*rep.sign_vector_regions));
  }
  if (rep.witnesses_found) {
    r.result["witnesses_found"] = *rep.witnesses_found;
    r.text += line("every acyclic orientation has a region point", yes(*rep.witnesses_found));
  }
  if (c.opt.hyperplanes) {
    json hs = json::array();
    auto arr = arrangement(g);
    for (std::size_t k = 0; k < arr.size(); ++k) {
      hs.push_back({{"edge", g.edge(static_cast<int>(k)).id}, {"equation", arr[k].format()}, {"normal", arr[k].normal}});
      r.text += g.edge(static_cast<int>(k)).id + ": " + arr[k].format() + "\n";
    }
    r.result["hyperplanes"] = hs;
  }
  return r;
}

Report acyclic(const Context& c) {
  auto g = load(c);
  Report r;
  r.graph = g;
  if (!c.opt.set.empty()) {
    // Reverse the canonical orientation on the listed edges and test it.
    auto flip = edges_arg(g, c.opt.set);
    auto tau = orient(g).tau();
    flip.for_each([&](int i) { tau[static_cast<std::size_t>(i)] = {-tau[static_cast<std::size_t>(i)][0], -tau[static_cast<std::size_t>(i)][1]}; });
    BidirectedGraph b(g, tau);
    const bool a = is_acyclic(b, c.limits);
    json ends = json::array();
    for (int i = 0; i < g.size(); ++i)
      ends.push_back({std::string(1, to_char(b.tau(i, 0))), std::string(1, to_char(b.tau(i, 1)))});
    r.result = {{"acyclic", a}, {"tau", ends}};
    r.text = line("acyclic", yes(a));
    return r;
  }
  const long long n = enumerate_acyclic(g, c.limits, c.opt.threads);
  r.result["acyclic_orientations"] = n;
  r.text = line("acyclic orientations", std::to_string(n));
  return r;
}

Report charpoly(const Context& c) {
  auto g = load(c);
  Report r;
  r.graph = g;
  auto p = characteristic_polynomial(g, c.limits);
  r.result["characteristic_polynomial"] = polynomial_json(p);
  r.text = p.format() + "\n";
  if (c.opt.lattice) {
    const long long size = intersection_lattice_size(g);
    r.result["intersection_lattice_size"] = size;
    r.text += line("intersection lattice", std::to_string(size));
  }
  return r;
}

// ---------------------------------------------------------------- coloring

Report chromatic(const Context& c) {
  auto g = load(c);
  Report r;
  r.graph = g;
  const auto& o = c.opt;
  IntPolynomial p;
  if (o.algorithm == "delcon")
    p = chromatic_poly_delcon(g, o.zero_free);
  else if (o.algorithm == "subset")
    p = chromatic_poly_subset(g, o.zero_free, c.limits, o.threads);
  else if (o.algorithm == "expansion") {
    if (o.zero_free) throw UsageError("the stable-set expansion gives the ordinary polynomial only");
    p = chromatic_via_expansion(g, c.limits);
  } else {
    throw UsageError("--algorithm must be delcon, subset or expansion");
  }
  r.result = {{"polynomial", polynomial_json(p)}, {"zero_free", o.zero_free}, {"algorithm", o.algorithm}};
  r.text = p.format() + "\n";
  if (o.k >= 0) {
    const long long n = count_proper(g, o.k, o.zero_free, c.limits, o.threads);
    r.result["count"] = {{"k", o.k}, {"proper", n}};
    r.text += "proper colorations (k=" + std::to_string(o.k) + "): " + std::to_string(n) + "\n";
  }
  if (o.numbers) {
    auto cn = chromatic_numbers(g);
    r.result["chi"] = cn.chi ? json(*cn.chi) : json(nullptr);
    r.result["chi_star"] = cn.chi_star ? json(*cn.chi_star) : json(nullptr);
    r.text += line("chi", cn.chi ? std::to_string(*cn.chi) : "none");
    r.text += line("chi*", cn.chi_star ? std::to_string(*cn.chi_star) : "none");
  }
  if (!o.coloring.empty()) {
    auto gamma = ints_arg(o.coloring, "color");
    if (static_cast<int>(gamma.size()) != g.order()) throw UsageError("--coloring needs one color per vertex");
    const bool ok = is_proper(g, gamma);
    r.result["proper"] = ok;
    r.text += line("proper", yes(ok));
  }
  if (!o.stable.empty()) {
    const bool ok = is_stable(g, vertices_arg(g, o.stable));
    r.result["stable"] = ok;
    r.text += line("stable", yes(ok));
  }
  return r;
}

std::string optional_poly(const std::optional<IntPolynomial>& p) { return p ? p->format() : "(no closed form)"; }

Report catalog_verb(const Context& c) {
  const auto& o = c.opt;
  Family f;
  try {
    f = parse_family(o.family);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
  CatalogEntry entry;
  std::optional<SignedGraph> base;
  if (needs_base(f)) {
    if (o.file.empty()) throw UsageError("family '" + o.family + "' needs a base graph file");
    base = read_graph_file(o.file);
    entry = catalog(f, *base, c.limits);
  } else {
    if (o.n < 0) throw UsageError("family '" + o.family + "' needs --n");
    entry = catalog(f, o.n);
  }
  Report r;
  r.graph = entry.graph;
  const auto& g = entry.graph;
  auto chi = chromatic_poly_delcon(g, false);
  auto star = chromatic_poly_delcon(g, true);
  r.result = {{"family", o.family}, {"chi", entry.chi ? polynomial_json(*entry.chi) : json(nullptr)},
              {"chi_star", entry.chi_star ? polynomial_json(*entry.chi_star) : json(nullptr)},
              {"computed_chi", polynomial_json(chi)}, {"computed_chi_star", polynomial_json(star)}};
  r.text = line("family", o.family) + line("chi", optional_poly(entry.chi)) + line("chi*", optional_poly(entry.chi_star));
  const bool agree = (!entry.chi || *entry.chi == chi) && (!entry.chi_star || *entry.chi_star == star);
  r.result["closed_forms_agree"] = agree;
  r.text += line("closed forms agree with deletion-contraction", yes(agree));
  if (base && is_simple_link_graph(*base)) {
    auto plain = unsigned_chromatic(*base);
    r.result["base_chromatic"] = polynomial_json(plain);
    r.text += line("base chromatic", plain.format());
  }
  if (f == Family::AllNegative) {
    auto printed = negative_flat_sum(*base, false, c.limits);
    const int n = base->order();
    const bool printed_ok = printed == IntPolynomial::constant(1LL << n) * star;
    const int matching = complement_max_matching(*base);
    auto cn = chromatic_numbers(g);
    r.result["unweighted_flat_sum_times_2^n"] = polynomial_json(printed);
    r.result["unweighted_flat_sum_matches"] = printed_ok;
    r.result["complement_matching"] = matching;
    r.result["chi_star_number"] = cn.chi_star ? json(*cn.chi_star) : json(nullptr);
    r.text += line("unweighted flat sum x 2^n", printed.format());
    r.text += line("unweighted flat sum matches", yes(printed_ok));
    r.text += line("complement matching", std::to_string(matching));
    r.text += line("chi* number", cn.chi_star ? std::to_string(*cn.chi_star) : "none");
  }
  if (o.print_graph) r.text += serialize(g);
  if (o.print_graph) r.result["graph"] = graph_json(g);
  return r;
}

// ---------------------------------------------------------------- line graphs

Report linegraph(const Context& c) {
  auto g = load(c);
  Report r;
  r.graph = g;
  if (c.opt.harary_norman) {
    auto hn = harary_norman(g);
    r.result["digraph"] = graph_json(hn);
    r.text = "# arcs u -> v of the line digraph, vertices are source edges\n" + serialize(hn);
    return r;
  }
  if (c.opt.identity) {
    auto [a, rhs] = line_adjacency_identity(g);
    r.result = {{"adjacency", matrix_json(a)}, {"two_i_minus_hth", matrix_json(rhs)}, {"equal", a == rhs}};
    r.text = line("A(line) = 2I - H^T H", yes(a == rhs));
    return r;
  }
  if (c.opt.reduced) {
    auto red = reduced_line_graph(g);
    auto ev = spectrum(adjacency_matrix(red));
    const double top = ev.empty() ? 0.0 : ev.back();
    r.result = {{"graph", graph_json(red)}, {"max_eigenvalue", rounded(top)}};
    r.text = "# reduced line graph, max eigenvalue " + real(top) + "\n" + serialize(red);
    return r;
  }
  auto lg = line_graph(orient(g));
  json prov = json::array();
  std::string text;
  for (std::size_t k = 0; k < lg.provenance.size(); ++k) {
    const auto& p = lg.provenance[k];
    prov.push_back({{"line_edge", lg.line.graph().edge(static_cast<int>(k)).id},
                    {"e", g.edge(p.e).id},
                    {"f", g.edge(p.f).id},
                    {"vertex", p.shared + 1}});
  }
  text = "# line graph vertices are source edges in file order\n" + serialize(lg.line.graph());
  r.result = {{"graph", graph_json(lg.line.graph())}, {"provenance", prov}};
  r.text = text;
  return r;
}

Report glinegraph(const Context& c) {
  auto g = load(c);
  Report r;
  r.graph = g;
  auto m = ints_arg(c.opt.multiplicities, "multiplicity");
  auto gl = generalized_line_graph(g, m, c.limits);
  auto ev = spectrum(adjacency_matrix(gl.expected.negated()));
  const double low = ev.empty() ? 0.0 : ev.front();
  r.result = {{"source_order", gl.source.order()},   {"source_size", gl.source.size()},
              {"line_order", gl.reduced_line.order()}, {"isomorphic", gl.isomorphic},
              {"min_eigenvalue", rounded(low)},        {"expected", graph_json(gl.expected)}};
  r.text = line("source", "n=" + std::to_string(gl.source.order()) + ", m=" + std::to_string(gl.source.size())) +
           line("line graph order", std::to_string(gl.reduced_line.order())) +
           line("reduced line graph of the source matches -Lambda(G; m) up to switching", yes(gl.isomorphic)) +
           line("min eigenvalue of Lambda(G; m)", real(low));
  return r;
}

// ---------------------------------------------------------------- angle

std::string vector_text(const RationalVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].str();
  return out + ")";
}

Report roots(const Context& c) {
  const auto& o = c.opt;
  if (o.name.empty() || o.n < 1) throw UsageError("roots needs --name and --n");
  RootSystem rs;
  try {
    rs = root_system(o.name, o.n);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
  Report r;
  r.result = {{"name", rs.name}, {"dimension", rs.dimension}, {"size", rs.vectors.size()}};
  r.text = rs.name + ": " + std::to_string(rs.vectors.size()) + " vectors\n";
  if (o.list) {
    json vs = json::array();
    for (const auto& v : rs.vectors) {
      json jv = json::array();
      for (const auto& x : v) jv.push_back(x.str());
      vs.push_back(jv);
      r.text += vector_text(v) + "\n";
    }
    r.result["vectors"] = vs;
  }
  if (!o.file.empty()) {
    auto g = read_graph_file(o.file);
    r.graph = g;
    if (g.order() != rs.dimension) throw DomainError("graph order differs from root system dimension");
    std::vector<RationalVector> cols;
    for (int i = 0; i < g.size(); ++i) {
      RationalVector v;
      for (long long x : edge_vector(g, i)) v.emplace_back(x);
      cols.push_back(v);
    }
    const bool inside = membership_in_root_system(cols, rs);
    r.result["edge_vectors_inside"] = inside;
    r.text += line("edge vectors inside " + rs.name, yes(inside));
  }
  return r;
}

Report gramian(const Context& c) {
  auto g = load(c);
  Report r;
  r.graph = g;
  const auto& o = c.opt;
  if (o.edge_vectors) {
    auto line_graph_r = reduced_line_graph(g);
    auto rep = edge_vector_representation(g);
    const bool ok = verify_representation(line_graph_r, rep);
    r.result = {{"edge_vector_representation_valid", ok}, {"nu", 2}};
    r.text = line("edge vectors represent the reduced line graph (anti-Gramian, nu=2)", yes(ok));
    return r;
  }
  auto a = adjacency_matrix(g);
  if (o.anti) a = -1LL * a;
  auto ev = spectrum(a);
  const double low = ev.empty() ? 0.0 : ev.front();
  auto rep = construct_gramian(g, o.nu, o.anti);
  r.result = {{"nu", rounded(o.nu)}, {"anti", o.anti}, {"min_eigenvalue", rounded(low)}, {"exists", rep.has_value()}};
  r.text = line("min eigenvalue", real(low)) + line("representation exists", yes(rep.has_value()));
  if (rep) {
    const std::size_t dim = rep->rho.empty() ? 0 : rep->rho.front().size();
    const bool tight = gram_error(g, *rep) < kGramTolerance;
    r.result["dimension"] = dim;
    r.result["gram_within_tolerance"] = tight;
    r.text += line("dimension", std::to_string(dim)) + line("gram error below 1e-8", yes(tight));
    if (o.normalize) {
      auto norm = normalize(g, *rep);
      bool unit = true;
      for (const auto& v : norm.rho) {
        double s = 0;
        for (double x : v) s += x * x;
        unit = unit && std::abs(std::sqrt(s) - std::sqrt(o.nu)) < 1e-8;
      }
      r.result["normalized"] = unit;
      r.text += line("all lengths sqrt(nu) after normalizing", yes(unit));
    }
  }
  return r;
}

// ---------------------------------------------------------------- tooling

Report random_verb(const Context& c) {
  const auto& o = c.opt;
  if (o.order < 1 || o.size < 0) throw UsageError("--order must be positive and --edges non-negative");
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<int> vd(0, o.order - 1);
  std::uniform_int_distribution<int> kd(0, 99);
  std::bernoulli_distribution coin(0.5);
  const bool all = o.kinds == "all";
  if (!all && o.kinds != "links") throw UsageError("--kinds must be links or all");
  GraphBuilder b(o.order);
  for (int i = 0; i < o.size; ++i) {
    const int k = kd(rng);
    const Sign s = coin(rng) ? Sign::Plus : Sign::Minus;
    const int u = vd(rng);
    if (all && k < 10) {
      b.half(u);
    } else if ((all && k < 20) || o.order == 1) {
      if (!all) break;
      b.loop(u, s);
    } else {
      int v = vd(rng);
      while (v == u) v = vd(rng);
      b.link(u, v, s);
    }
  }
  auto g = b.build();
  Report r;
  r.graph = g;
  r.result["graph"] = graph_json(g);
  r.text = serialize(g);
  return r;
}

}  // namespace

const std::vector<Verb>& verb_table() {
  static const std::vector<Verb> table = {
      {"info", "graph summary, degrees, balance, sign of an edge set",
       [](CLI::App& a, Options& o) {
         file_arg(a, o);
         a.add_option("--edges", o.edges, "edge ids whose sign product to print");
       },
       info},
      {"circles", "circles inside an edge set; spanning forest and fundamental circles",
       [](CLI::App& a, Options& o) {
         file_arg(a, o);
         a.add_option("--edges", o.edges, "restrict to these edge ids");
         a.add_flag("--forest", o.forest, "also print a spanning forest and its fundamental system");
       },
       circles},
      {"balance", "balance test and balanced components",
       [](CLI::App& a, Options& o) {
         file_arg(a, o);
         a.add_option("--edges", o.edges, "restrict to these edge ids");
         a.add_flag("--bipartition", o.bipartition, "print a Harary bipartition");
       },
       balance},
      {"switch", "switch a graph, or decide switching equivalence",
       [](CLI::App& a, Options& o) {
         file_arg(a, o);
         a.add_option("--set", o.set, "vertices switched to -, comma separated");
         a.add_option("--equivalent-to", o.other_file, "second graph to compare");
         a.add_flag("--to-positive", o.to_positive, "switch to all positive (balance required)");
       },
       switch_verb},
      {"balancing-edges", "balancing edges, vertices, minimum balancing set",
       [](CLI::App& a, Options& o) { file_arg(a, o); }, balancing_edges},
      {"delete", "delete edges or vertices",
       [](CLI::App& a, Options& o) {
         file_arg(a, o);
         a.add_option("--edges", o.edges, "edge ids to delete");
         a.add_option("--vertices", o.vertices, "vertices to delete");
       },
       delete_verb},
      {"contract", "contract an edge set",
       [](CLI::App& a, Options& o) {
         file_arg(a, o);
         a.add_option("--edges,--edge", o.edges, "edge ids to contract")->required();
       },
       contract},
      {"frame-circuits", "enumerate frame circuits, or test one edge set",
       [](CLI::App& a, Options& o) {
         file_arg(a, o);
         a.add_option("--check", o.edges, "edge ids to test");
       },
       frame_circuits},
      {"closure", "closure of an edge set, or the lattice of closed sets",
       [](CLI::App& a, Options& o) {
         file_arg(a, o);
         a.add_option("--edges", o.edges, "edge ids");
         a.add_flag("--balance", o.balance, "balance closure instead");
         a.add_flag("--circuits", o.circuits, "compute through frame circuits");
         a.add_flag("--lattice", o.lattice, "list every closed set");
       },
       closure_verb},
      {"rank", "frame matroid rank and independence",
       [](CLI::App& a, Options& o) {
         file_arg(a, o);
         a.add_option("--edges", o.edges, "edge ids (default all)");
       },
       rank_verb},
      {"matrix", "incidence, adjacency or Laplacian matrix",
       [](CLI::App& a, Options& o) {
         file_arg(a, o);
         a.add_option("--which", o.which, "incidence|adjacency|laplacian");
         a.add_flag("--reduced", o.reduced, "reduce the graph first");
       },
       matrix},
      {"matrix-tree", "det L against the weighted count of independent n-sets",
       [](CLI::App& a, Options& o) { file_arg(a, o); }, matrix_tree_verb},
      {"spectrum", "eigenvalues of the adjacency or Laplacian matrix",
       [](CLI::App& a, Options& o) {
         file_arg(a, o);
         a.add_option("--which", o.which, "adjacency|laplacian");
         a.add_flag("--reduced", o.reduced, "reduce the graph first");
       },
       spectrum_verb},
      {"regions", "regions of the hyperplane arrangement",
       [](CLI::App& a, Options& o) {
         file_arg(a, o);
         a.add_flag("--oracle", o.oracle, "also count by sign vectors and acyclic orientations");
         a.add_flag("--hyperplanes", o.hyperplanes, "list the hyperplanes");
       },
       regions},
      {"acyclic", "count acyclic orientations, or test one",
       [](CLI::App& a, Options& o) {
         file_arg(a, o);
         a.add_option("--reverse", o.set, "test the canonical orientation with these edges reversed");
       },
       acyclic},
      {"charpoly", "characteristic polynomial of the arrangement",
       [](CLI::App& a, Options& o) {
         file_arg(a, o);
         a.add_flag("--lattice-size", o.lattice, "also count intersection subspaces");
       },
       charpoly},
      {"chromatic", "chromatic polynomials, counts and chromatic numbers",
       [](CLI::App& a, Options& o) {
         file_arg(a, o);
         a.add_flag("--zero-free", o.zero_free, "zero-free polynomial");
         a.add_option("--algorithm", o.algorithm, "delcon|subset|expansion");
         a.add_option("--count", o.k, "count proper colorations with colors -k..k");
         a.add_flag("--numbers", o.numbers, "chromatic numbers");
         a.add_option("--coloring", o.coloring, "test a coloration, one color per vertex");
         a.add_option("--stable", o.stable, "test whether a vertex set is stable");
       },
       chromatic},
      {"catalog", "generated example families with closed-form polynomials",
       [](CLI::App& a, Options& o) {
         a.add_option("--family", o.family, "full|fullloops|pos|posfull|neg|pm|pmfull|pmkn|pmknfull")->required();
         a.add_option("--n", o.n, "order for pmkn and pmknfull");
         a.add_option("--base,file", o.file, "simple base graph");
         a.add_flag("--graph", o.print_graph, "print the generated graph");
       },
       catalog_verb},
      {"linegraph", "line graph, reduced line graph, identity check, Harary-Norman",
       [](CLI::App& a, Options& o) {
         file_arg(a, o);
         a.add_flag("--reduced", o.reduced, "reduced line graph");
         a.add_flag("--identity", o.identity, "check A = 2I - H^T H");
         a.add_flag("--harary-norman", o.harary_norman, "line digraph of a digraph given as positive arcs");
       },
       linegraph},
      {"glinegraph", "generalized line graph with hanging negative digons",
       [](CLI::App& a, Options& o) {
         file_arg(a, o);
         a.add_option("--m", o.multiplicities, "digons per vertex, comma separated")->required();
       },
       glinegraph},
      {"roots", "root systems A B C D E and membership of edge vectors",
       [](CLI::App& a, Options& o) {
         a.add_option("--name", o.name, "A|B|C|D|E")->required();
         a.add_option("--n", o.n, "ambient dimension")->required();
         a.add_option("--check", o.file, "graph whose edge vectors to test");
         a.add_flag("--list", o.list, "print the vectors");
       },
       roots},
      {"gramian", "Gramian angle representations",
       [](CLI::App& a, Options& o) {
         file_arg(a, o);
         a.add_option("--nu", o.nu, "scale");
         a.add_flag("--anti", o.anti, "anti-Gramian");
         a.add_flag("--normalize", o.normalize, "normalize lengths");
         a.add_flag("--edge-vectors", o.edge_vectors, "check edge vectors against the reduced line graph");
       },
       gramian},
      {"random", "seeded random graph for test tooling",
       [](CLI::App& a, Options& o) {
         a.add_option("--seed", o.seed, "seed")->required();
         a.add_option("--order", o.order, "vertices");
         a.add_option("--edges", o.size, "edges");
         a.add_option("--kinds", o.kinds, "links|all");
       },
       random_verb},
  };
  return table;
}

}  // namespace sgtool
