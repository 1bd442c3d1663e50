#include "commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "linegraph/canonical.hpp"
#include "linegraph/catalog.hpp"
#include "linegraph/errors.hpp"
#include "linegraph/io.hpp"
#include "linegraph/krausz.hpp"
#include "linegraph/recognition.hpp"
#include "linegraph/rootgraph.hpp"
#include "linegraph/whitney.hpp"

namespace linegraph::cli {

using nlohmann::json;

Limits Options::limits() const {
  if (cap) return Limits::uniform(*cap);
  return Limits::from_environment();
}

void Printer::text(const std::string& line) {
  if (!json_) out_ << line << '\n';
}

void Printer::record(const json& object) {
  if (json_) out_ << object.dump() << '\n';
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

json edges_json(const Graph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  return edges;
}

json set_json(const VertexSet& s) { return json(s.members()); }

json decomposition_json(const Decomposition& d) {
  json sets = json::array();
  for (const auto& s : d) sets.push_back(set_json(s));
  return sets;
}

json relation_json(const Graph& l, const LineGraphRelation& r) {
  json classes = json::array();
  for (const auto& cls : r.classes()) {
    json edges = json::array();
    for (auto e : cls) edges.push_back({l.edge(e).u, l.edge(e).v});
    classes.push_back(edges);
  }
  return classes;
}

std::string join(const std::vector<Vertex>& xs, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(xs[i]);
  }
  return s;
}

std::string edge_text(const EdgeId& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

void print_graph(Printer& out, const Graph& g, const Options& opt, const std::string& label) {
  if (opt.dot) {
    out.text(emit_dot(g, label));
    return;
  }
  out.text("graph6: " + emit_graph6(g));
  std::string list = emit_edge_list(g);
  if (!list.empty() && list.back() == '\n') list.pop_back();
  out.text(list);
}

void print_witness(Printer& out, const ForbiddenWitness& w) {
  const auto& entry = beineke_graphs().at(static_cast<std::size_t>(w.beineke_index - 1));
  out.text("witness " + std::to_string(w.beineke_index) + " (" + entry.name + "): " + join(w.embedding));
}

json witness_json(const ForbiddenWitness& w) {
  return {{"beineke_index", w.beineke_index},
          {"name", beineke_graphs().at(static_cast<std::size_t>(w.beineke_index - 1)).name},
          {"embedding", w.embedding}};
}

int not_a_line_graph(const Graph& l, const std::string& verb, Printer& out) {
  auto verdict = is_line_graph_beineke(l);
  out.text("line graph: no");
  if (verdict.witness) print_witness(out, *verdict.witness);
  json record{{"verb", verb}, {"line_graph", false}};
  if (verdict.witness) record["witness"] = witness_json(*verdict.witness);
  out.record(record);
  return negative;
}

std::string root_vertex_text(const RootVertex& v) { return to_string(v); }

std::string role_text(VertexRole role) {
  switch (role) {
    case VertexRole::none: return "V0";
    case VertexRole::one: return "V1";
    case VertexRole::two: return "V2";
  }
  return "?";
}

// "u-v x-y" per line: G-edge u-v maps to H-edge x-y. '#' starts a comment.
EdgeMap parse_phi_table(const Graph& g, const Graph& h, const std::string& text) {
  EdgeMap phi(g.size(), h.size());
  std::vector<bool> seen(g.size(), false);
  std::istringstream lines(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    for (char& c : line)
      if (c == '-') c = ' ';
    std::istringstream fields(line);
    std::vector<long long> nums;
    long long x = 0;
    while (fields >> x) nums.push_back(x);
    if (!fields.eof()) throw ParseError("expected 'u-v x-y'", line_no);
    if (nums.empty()) continue;
    if (nums.size() != 4) throw ParseError("expected 'u-v x-y'", line_no);
    for (auto v : nums)
      if (v < 0) throw ParseError("negative vertex ID", line_no);
    auto ge = g.edge_index(static_cast<Vertex>(nums[0]), static_cast<Vertex>(nums[1]));
    auto he = h.edge_index(static_cast<Vertex>(nums[2]), static_cast<Vertex>(nums[3]));
    if (!ge) throw ParseError("not an edge of G", line_no);
    if (!he) throw ParseError("not an edge of H", line_no);
    if (seen[*ge]) throw ParseError("G-edge listed twice", line_no);
    seen[*ge] = true;
    phi[*ge] = *he;
  }
  for (std::size_t i = 0; i < g.size(); ++i)
    if (!seen[i]) throw ParseError("G-edge " + edge_text(g.edge(i)) + " has no image");
  return phi;
}

}  // namespace

Graph load_graph(const std::string& path, const std::string& format) {
  std::string text = read_file(path);
  std::string kind = format;
  if (kind.empty()) {
    if (ends_with(path, ".g6") || ends_with(path, ".graph6")) kind = "g6";
    else if (ends_with(path, ".edges") || ends_with(path, ".txt")) kind = "edges";
    else throw ParseError("cannot tell the format of " + path + "; use --format g6|edges");
  }
  if (kind == "g6") return parse_graph6(text);
  if (kind == "edges") return parse_edge_list(text);
  throw ParseError("unknown format '" + kind + "'");
}

int cmd_recognize(const std::string& path, const Options& opt, Printer& out) {
  Graph l = load_graph(path, opt.format);
  auto verdict = is_line_graph_beineke(l);
  if (verdict) {
    out.text("line graph: yes");
    out.record({{"verb", "recognize"}, {"line_graph", true}});
    return ok;
  }
  return not_a_line_graph(l, "recognize", out);
}

int cmd_witness(const std::string& path, const Options& opt, Printer& out) {
  Graph l = load_graph(path, opt.format);
  auto all = forbidden_witness_all(l);
  if (all.empty()) {
    out.text("line graph: yes, no forbidden subgraph");
    out.record({{"verb", "witness"}, {"line_graph", true}, {"witnesses", json::array()}});
    return ok;
  }
  json list = json::array();
  for (const auto& w : all) {
    print_witness(out, w);
    list.push_back(witness_json(w));
  }
  out.record({{"verb", "witness"}, {"line_graph", false}, {"witnesses", list}});
  return negative;
}

int cmd_decompose(const std::string& path, const Options& opt, Printer& out) {
  Graph l = load_graph(path, opt.format);
  auto d = is_line_graph_krausz(l, opt.limits());
  if (!d) return not_a_line_graph(l, "decompose", out);
  std::string text = format_decomposition(*d);
  if (!text.empty() && text.back() == '\n') text.pop_back();
  out.text(text);
  out.record({{"verb", "decompose"}, {"line_graph", true}, {"decomposition", decomposition_json(*d)}});
  return ok;
}

int cmd_enumerate(const std::string& path, const Options& opt, Printer& out) {
  Graph l = load_graph(path, opt.format);
  auto all = enumerate_decompositions(l, opt.limits());
  if (all.empty()) return not_a_line_graph(l, "enumerate", out);
  out.text(std::to_string(all.size()) + " decomposition" + (all.size() == 1 ? "" : "s"));
  json list = json::array();
  for (std::size_t i = 0; i < all.size(); ++i) {
    std::string text = format_decomposition(all[i]);
    if (!text.empty() && text.back() == '\n') text.pop_back();
    out.text("# " + std::to_string(i + 1));
    out.text(text);
    list.push_back(decomposition_json(all[i]));
  }
  out.record({{"verb", "enumerate"}, {"count", all.size()}, {"decompositions", list}});
  return ok;
}

int cmd_canonical(const std::string& path, const Options& opt, Printer& out) {
  Graph l = load_graph(path, opt.format);
  LineGraphRelation r;
  try {
    r = canonical_relation(l, opt.limits());
  } catch (const NotLineGraph& e) {
    out.text(std::string("line graph: no (") + e.what() + ")");
    out.record({{"verb", "canonical"}, {"line_graph", false}, {"error", e.what()}});
    return negative;
  }
  std::string text = format_relation(l, r);
  if (!text.empty() && text.back() == '\n') text.pop_back();
  out.text(text);
  out.record({{"verb", "canonical"}, {"line_graph", true}, {"classes", relation_json(l, r)}});
  return ok;
}

int cmd_validate_relation(const std::string& graph_path, const std::string& relation_path, const Options& opt,
                          Printer& out) {
  Graph l = load_graph(graph_path, opt.format);
  LineGraphRelation r = parse_relation(l, read_file(relation_path));
  auto violation = validate_relation(l, r);
  if (!violation) {
    out.text("valid: " + std::to_string(r.class_count()) + " classes");
    out.record({{"verb", "validate-relation"}, {"valid", true}, {"classes", r.class_count()}});
    return ok;
  }
  out.text("invalid: " + violation->describe());
  out.record({{"verb", "validate-relation"},
              {"valid", false},
              {"kind", to_string(violation->kind)},
              {"detail", violation->describe()}});
  return negative;
}

int cmd_root(const std::string& path, const Options& opt, Printer& out) {
  Graph l = load_graph(path, opt.format);
  auto d = is_line_graph_krausz(l, opt.limits());
  if (!d) return not_a_line_graph(l, "root", out);
  RootWitness w = opt.via == "relation" ? root_from_relation(l, relation_of(l, *d)) : root_from_decomposition(l, *d);
  if (!phi_is_isomorphism(w, l)) throw std::logic_error("root construction produced an invalid phi");

  print_graph(out, w.root, opt, "root");
  out.text("phi:");
  json phi = json::array();
  for (std::size_t i = 0; i < w.root.size(); ++i) {
    const EdgeId& e = w.root.edge(i);
    out.text("  " + edge_text(e) + " -> " + std::to_string(w.phi[i]));
    phi.push_back({{"edge", {e.u, e.v}}, {"vertex", w.phi[i]}});
  }
  out.text("root vertices:");
  json origin = json::array();
  for (std::size_t v = 0; v < w.origin.size(); ++v) {
    out.text("  " + std::to_string(v) + " = " + root_vertex_text(w.origin[v]));
    origin.push_back(root_vertex_text(w.origin[v]));
  }
  json roles = json::array();
  std::string role_line = "roles:";
  for (Vertex x = 0; x < l.order(); ++x) {
    role_line += " " + std::to_string(x) + ":" + role_text(w.roles[x]);
    roles.push_back(role_text(w.roles[x]));
  }
  out.text(role_line);
  out.record({{"verb", "root"},
              {"via", opt.via},
              {"graph6", emit_graph6(w.root)},
              {"order", w.root.order()},
              {"edges", edges_json(w.root)},
              {"phi", phi},
              {"origin", origin},
              {"roles", roles}});
  return ok;
}

int cmd_linegraph(const std::string& path, const Options& opt, Printer& out) {
  Graph g = load_graph(path, opt.format);
  LineGraph lg = line_graph(g);
  print_graph(out, lg.graph, opt, "L");
  out.text("vertices:");
  json map = json::array();
  for (std::size_t i = 0; i < lg.root_edge.size(); ++i) {
    out.text("  " + std::to_string(i) + " = " + edge_text(lg.root_edge[i]));
    map.push_back({lg.root_edge[i].u, lg.root_edge[i].v});
  }
  out.record({{"verb", "linegraph"},
              {"graph6", emit_graph6(lg.graph)},
              {"order", lg.graph.order()},
              {"edges", edges_json(lg.graph)},
              {"root_edge", map}});
  return ok;
}

int cmd_whitney(const std::string& g_path, const std::string& h_path, const std::string& phi_path,
                const Options& opt, Printer& out) {
  Graph g = load_graph(g_path, opt.format);
  Graph h = load_graph(h_path, opt.format);
  EdgeMap phi = parse_phi_table(g, h, read_file(phi_path));
  WhitneyResult result = whitney_lift(g, h, phi);
  json record{{"verb", "whitney"}, {"outcome", to_string(result.outcome)}};
  switch (result.outcome) {
    case WhitneyResult::Outcome::induced:
      out.text("induced: sigma = " + join(result.sigma->mapping));
      record["sigma"] = result.sigma->mapping;
      out.record(record);
      return ok;
    case WhitneyResult::Outcome::exceptional:
      out.text("exceptional: " + result.exceptional_name);
      record["name"] = result.exceptional_name;
      out.record(record);
      return negative;
    case WhitneyResult::Outcome::not_induced:
      out.text("not induced" + (result.counterexample ? ": edge " + edge_text(*result.counterexample) : ""));
      if (result.counterexample) record["counterexample"] = {result.counterexample->u, result.counterexample->v};
      out.record(record);
      return negative;
  }
  return negative;
}

int cmd_k0_demo(std::size_t k, std::size_t m, const Options& opt, Printer& out) {
  Limits limits = opt.limits();
  // Component cap raised to the clique size unless --cap or LINEGRAPH_CAP is given.
  if (!opt.cap && std::getenv("LINEGRAPH_CAP") == nullptr && k < 32)
    limits.krausz_component_cap = std::max(limits.krausz_component_cap, std::size_t{1} << k);
  Graph l = k0_truncation(k, m, limits);
  const std::size_t cliques = connected_components(l).size();
  const std::size_t size = std::size_t{1} << k;
  RoundtripReport report = verify_roundtrip(l, limits);
  if (!report.error.empty()) throw CapExceeded("k0-demo", std::size_t{1} << k, limits.krausz_component_cap);
  const std::size_t chi = chromatic_number_exact(l, limits.coloring_cap);

  std::string root_text = "none";
  bool star = false;
  if (report.root) {
    star = is_isomorphic(report.root->root, star_forest(cliques, size)).has_value();
    root_text = star ? std::to_string(cliques) + "×K_{1," + std::to_string(size) + "}"
                     : "graph6 " + emit_graph6(report.root->root);
  }
  out.text("2^{m−k}=" + std::to_string(cliques) + " cliques of size " + std::to_string(size) +
           ", line graph: " + (report.line_graph ? "yes" : "no") + ", χ=" + std::to_string(chi) + ", root ≅ " +
           root_text);
  if (opt.dot) print_graph(out, l, opt, "K0");
  out.record({{"verb", "k0-demo"},
              {"k", k},
              {"m", m},
              {"cliques", cliques},
              {"clique_size", size},
              {"line_graph", report.line_graph},
              {"chromatic_number", chi},
              {"root_is_star_forest", star},
              {"roundtrip_isomorphic", report.roundtrip_isomorphic}});
  return report.line_graph ? ok : negative;
}

int cmd_catalog_dump(const std::vector<std::string>& names, const Options& opt, Printer& out) {
  std::vector<CatalogEntry> entries;
  if (names.empty()) {
    entries = catalog_entries();
    out.text("# linegraph catalog v1");
    out.text("# name<TAB>role<TAB>index<TAB>graph6");
  } else {
    for (const auto& name : names) {
      auto entry = find_catalog_entry(name);
      if (!entry) throw ParseError("no catalog entry named '" + name + "'");
      entries.push_back(*entry);
    }
  }
  for (const auto& e : entries) {
    if (opt.dot) {
      out.text(emit_dot(e.graph, e.name));
    } else {
      out.text(e.name + "\t" + to_string(e.role) + "\t" + std::to_string(e.index) + "\t" + emit_graph6(e.graph));
    }
    out.record({{"verb", "catalog-dump"},
                {"name", e.name},
                {"role", to_string(e.role)},
                {"index", e.index},
                {"graph6", emit_graph6(e.graph)},
                {"order", e.graph.order()},
                {"edges", edges_json(e.graph)}});
  }
  return ok;
}

}  // namespace linegraph::cli
