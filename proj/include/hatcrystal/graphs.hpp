// Finite truncations of crystal graphs: breadth-first generation, axiom
// sweeps over the recorded edges, forced-map isomorphism checks, and stable
// JSON and DOT serialization.
#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "hatcrystal/cartan.hpp"
#include "hatcrystal/characters.hpp"

namespace hatcrystal {

struct VertexInfo {
  int depth = 0;
  Weight wt;
  std::map<int, int> eps, phi;
  bool operator==(const VertexInfo&) const = default;
};

struct CrystalGraph {
  std::string source;
  std::vector<int> colors;
  std::map<std::string, VertexInfo> vertices;
  std::set<std::tuple<std::string, int, std::string>> edges;

  bool operator==(const CrystalGraph&) const = default;

  int max_depth() const {
    int d = 0;
    for (const auto& [k, v] : vertices) d = std::max(d, v.depth);
    return d;
  }

  std::vector<size_t> layer_counts() const {
    std::vector<size_t> out(static_cast<size_t>(max_depth()) + 1, 0);
    for (const auto& [k, v] : vertices) ++out[v.depth];
    return out;
  }

  // Outgoing edges keyed by (vertex, color); crystal operators are partial
  // functions, so at most one target per key.
  std::map<std::pair<std::string, int>, std::string> out_edges() const {
    std::map<std::pair<std::string, int>, std::string> out;
    for (const auto& [from, color, to] : edges) out[{from, color}] = to;
    return out;
  }
};

template <class Model>
struct Generated {
  CrystalGraph graph;
  std::map<std::string, typename Model::Element> elems;
};

// Breadth-first closure of the highest element under the lowering operators,
// to the given depth inclusive.
template <class Model>
Generated<Model> bfs_generate(const Model& model, int depth, std::string source = "") {
  Generated<Model> out;
  out.graph.source = std::move(source);
  out.graph.colors = model.colors();
  auto record = [&](const typename Model::Element& x, int d) {
    std::string k = model.key(x);
    if (out.graph.vertices.count(k)) return k;
    VertexInfo info;
    info.depth = d;
    info.wt = model.wt(x);
    for (int c : out.graph.colors) {
      info.eps[c] = model.eps(x, c);
      info.phi[c] = model.phi(x, c);
    }
    out.graph.vertices.emplace(k, std::move(info));
    out.elems.emplace(k, x);
    return k;
  };

  std::vector<std::string> frontier{record(model.highest(), 0)};
  for (int d = 0; d < depth; ++d) {
    std::vector<std::string> next;
    for (const std::string& k : frontier)
      for (int c : out.graph.colors) {
        auto fx = model.f_op(out.elems.at(k), c);
        if (!fx) continue;
        bool fresh = !out.graph.vertices.count(model.key(*fx));
        std::string k2 = record(*fx, d + 1);
        if (fresh) next.push_back(k2);
        out.graph.edges.insert({k, c, k2});
      }
    frontier = std::move(next);
  }
  return out;
}

// Local axiom sweep over a recorded truncation. Reported strings are
// counterexamples; an empty vector means the truncation is consistent.
inline std::vector<std::string> axiom_violations(const IndexSet& idx,
                                                 const CrystalGraph& g) {
  std::vector<std::string> bad;
  int tops = 0;
  for (const auto& [k, v] : g.vertices)
    if (v.depth == 0) ++tops;
  if (tops != 1) bad.push_back("expected exactly one vertex at depth 0, found " +
                               std::to_string(tops));

  std::set<std::pair<std::string, int>> has_incoming;
  for (const auto& [from, color, to] : g.edges) has_incoming.insert({to, color});

  for (const auto& [from, color, to] : g.edges) {
    const VertexInfo& u = g.vertices.at(from);
    const VertexInfo& v = g.vertices.at(to);
    std::string tag = "edge " + from + " -" + std::to_string(color) + "-> " + to;
    if (!(v.wt == u.wt - simple_root(idx, color)))
      bad.push_back(tag + ": weight does not drop by the simple root");
    if (v.eps.at(color) != u.eps.at(color) + 1)
      bad.push_back(tag + ": eps does not rise by one");
    if (v.phi.at(color) != u.phi.at(color) - 1)
      bad.push_back(tag + ": phi does not drop by one");
    if (v.depth != u.depth + 1) bad.push_back(tag + ": depth is not graded");
  }

  for (const auto& [k, v] : g.vertices)
    for (int c : g.colors) {
      if (v.phi.at(c) - v.eps.at(c) != pair_weight(idx, c, v.wt))
        bad.push_back("vertex " + k + ": phi - eps misses the weight pairing at color " +
                      std::to_string(c));
      bool incoming = has_incoming.count({k, c}) > 0;
      if (incoming != (v.eps.at(c) > 0))
        bad.push_back("vertex " + k + ": eps at color " + std::to_string(c) +
                      " disagrees with incoming edges");
    }
  return bad;
}

// Mutual inversion of raising and lowering over the generated elements.
template <class Model>
std::vector<std::string> inversion_violations(const Model& model,
                                              const Generated<Model>& gen) {
  std::vector<std::string> bad;
  for (const auto& [k, x] : gen.elems)
    for (int c : gen.graph.colors) {
      auto ex = model.e_op(x, c);
      if (ex.has_value() != (model.eps(x, c) > 0))
        bad.push_back("vertex " + k + ": raising at color " + std::to_string(c) +
                      " defined exactly when eps is positive fails");
      if (ex && !model.equal(*model.f_op(*ex, c), x))
        bad.push_back("vertex " + k + ": lowering does not undo raising at color " +
                      std::to_string(c));
      if (auto fx = model.f_op(x, c)) {
        auto back = model.e_op(*fx, c);
        if (!back || !model.equal(*back, x))
          bad.push_back("vertex " + k + ": raising does not undo lowering at color " +
                        std::to_string(c));
      }
    }
  return bad;
}

struct IsoResult {
  bool ok = false;
  std::string detail;
  std::map<std::string, std::string> vmap;
};

inline Weight map_weight_colors(const Weight& w, const std::vector<int>& colormap) {
  Weight out;
  for (const auto& [i, c] : w.lambda) out.add_lambda(colormap.at(i), c);
  for (const auto& [i, c] : w.alpha) out.add_alpha(colormap.at(i), c);
  return out;
}

// Forced-map isomorphism of two truncations: the unique top vertices must
// match and every edge determines the image of its target. Statistics are
// compared under the color relabeling.
inline IsoResult check_isomorphism(const CrystalGraph& g1, const CrystalGraph& g2,
                                   std::vector<int> colormap = {}) {
  IsoResult res;
  if (colormap.empty())
    for (int c : g1.colors) colormap.push_back(c);
  if (g1.colors.size() != g2.colors.size()) {
    res.detail = "color sets differ in size";
    return res;
  }
  if (g1.vertices.size() != g2.vertices.size()) {
    res.detail = "vertex counts differ: " + std::to_string(g1.vertices.size()) + " vs " +
                 std::to_string(g2.vertices.size());
    return res;
  }
  if (g1.edges.size() != g2.edges.size()) {
    res.detail = "edge counts differ: " + std::to_string(g1.edges.size()) + " vs " +
                 std::to_string(g2.edges.size());
    return res;
  }

  std::string top1, top2;
  for (const auto& [k, v] : g1.vertices)
    if (v.depth == 0) top1 = k;
  for (const auto& [k, v] : g2.vertices)
    if (v.depth == 0) top2 = k;

  auto out1 = g1.out_edges();
  auto out2 = g2.out_edges();
  std::map<std::string, std::string> back;
  res.vmap[top1] = top2;
  back[top2] = top1;
  std::vector<std::string> queue{top1};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    const std::string v1 = queue[qi];  // queue may grow and reallocate below
    const std::string v2 = res.vmap.at(v1);
    const VertexInfo& i1 = g1.vertices.at(v1);
    const VertexInfo& i2 = g2.vertices.at(v2);
    if (i1.depth != i2.depth) {
      res.detail = "depth mismatch at " + v1 + " vs " + v2;
      return res;
    }
    if (!(map_weight_colors(i1.wt, colormap) == i2.wt)) {
      res.detail = "weight mismatch at " + v1 + " vs " + v2;
      return res;
    }
    for (size_t t = 0; t < g1.colors.size(); ++t) {
      int c1 = g1.colors[t];
      int c2 = colormap.at(c1);
      if (i1.eps.at(c1) != i2.eps.at(c2) || i1.phi.at(c1) != i2.phi.at(c2)) {
        res.detail = "eps or phi mismatch at " + v1 + " vs " + v2 + " at color " +
                     std::to_string(c1);
        return res;
      }
      auto e1 = out1.find({v1, c1});
      auto e2 = out2.find({v2, c2});
      if ((e1 == out1.end()) != (e2 == out2.end())) {
        res.detail = "edge presence differs at " + v1 + " vs " + v2 + " at color " +
                     std::to_string(c1);
        return res;
      }
      if (e1 == out1.end()) continue;
      const std::string& t1 = e1->second;
      const std::string& t2 = e2->second;
      auto known = res.vmap.find(t1);
      if (known != res.vmap.end()) {
        if (known->second != t2) {
          res.detail = "forced image of " + t1 + " is inconsistent";
          return res;
        }
        continue;
      }
      auto taken = back.find(t2);
      if (taken != back.end()) {
        res.detail = "two vertices forced onto " + t2;
        return res;
      }
      res.vmap[t1] = t2;
      back[t2] = t1;
      queue.push_back(t1);
    }
  }
  if (res.vmap.size() != g1.vertices.size()) {
    res.detail = "graph is not connected from the top";
    return res;
  }
  res.ok = true;
  return res;
}

// Stable textual form: one vertex or edge per line, keys sorted, integers
// only. Weights are stored structurally as [index, coefficient] pairs.
inline std::string json_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out.push_back('\\');
    out.push_back(ch);
  }
  return out;
}

inline std::string to_json(const CrystalGraph& g) {
  std::ostringstream os;
  os << "{\"schema\": 1,\n\"source\": \"" << json_escape(g.source) << "\",\n\"colors\": [";
  for (size_t t = 0; t < g.colors.size(); ++t) os << (t ? "," : "") << g.colors[t];
  os << "],\n\"vertices\": [";
  bool first = true;
  for (const auto& [k, v] : g.vertices) {
    os << (first ? "\n" : ",\n");
    first = false;
    os << "{\"key\": \"" << json_escape(k) << "\", \"depth\": " << v.depth << ", \"lambda\": [";
    bool f2 = true;
    for (const auto& [i, c] : v.wt.lambda) {
      os << (f2 ? "" : ",") << "[" << i << "," << c << "]";
      f2 = false;
    }
    os << "], \"alpha\": [";
    f2 = true;
    for (const auto& [i, c] : v.wt.alpha) {
      os << (f2 ? "" : ",") << "[" << i << "," << c << "]";
      f2 = false;
    }
    os << "], \"eps\": [";
    for (size_t t = 0; t < g.colors.size(); ++t)
      os << (t ? "," : "") << v.eps.at(g.colors[t]);
    os << "], \"phi\": [";
    for (size_t t = 0; t < g.colors.size(); ++t)
      os << (t ? "," : "") << v.phi.at(g.colors[t]);
    os << "]}";
  }
  os << "\n],\n\"edges\": [";
  first = true;
  for (const auto& [from, color, to] : g.edges) {
    os << (first ? "\n" : ",\n");
    first = false;
    os << "{\"from\": \"" << json_escape(from) << "\", \"color\": " << color
       << ", \"to\": \"" << json_escape(to) << "\"}";
  }
  os << "\n]}\n";
  return os.str();
}

inline CrystalGraph graph_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.contains("schema") || j.at("schema").get<int>() != 1)
    throw std::invalid_argument("graph json: unsupported schema");
  CrystalGraph g;
  g.source = j.value("source", std::string{});
  for (const auto& c : j.at("colors")) g.colors.push_back(c.get<int>());
  for (const auto& jv : j.at("vertices")) {
    VertexInfo v;
    v.depth = jv.at("depth").get<int>();
    for (const auto& p : jv.at("lambda")) v.wt.add_lambda(p.at(0).get<int>(), p.at(1).get<int>());
    for (const auto& p : jv.at("alpha")) v.wt.add_alpha(p.at(0).get<int>(), p.at(1).get<int>());
    const auto& eps = jv.at("eps");
    const auto& phi = jv.at("phi");
    if (eps.size() != g.colors.size() || phi.size() != g.colors.size())
      throw std::invalid_argument("graph json: statistics do not match the colors");
    for (size_t t = 0; t < g.colors.size(); ++t) {
      v.eps[g.colors[t]] = eps.at(t).get<int>();
      v.phi[g.colors[t]] = phi.at(t).get<int>();
    }
    g.vertices.emplace(jv.at("key").get<std::string>(), std::move(v));
  }
  for (const auto& je : j.at("edges")) {
    std::string from = je.at("from").get<std::string>();
    std::string to = je.at("to").get<std::string>();
    if (!g.vertices.count(from) || !g.vertices.count(to))
      throw std::invalid_argument("graph json: edge endpoint is not a vertex");
    g.edges.insert({from, je.at("color").get<int>(), to});
  }
  return g;
}

inline std::string to_dot(const CrystalGraph& g) {
  std::ostringstream os;
  os << "digraph crystal {\n  rankdir=TB;\n  node [shape=box, fontname=\"monospace\"];\n";
  for (const auto& [k, v] : g.vertices)
    os << "  \"" << json_escape(k) << "\" [label=\"" << json_escape(k) << "\"];\n";
  for (const auto& [from, color, to] : g.edges)
    os << "  \"" << json_escape(from) << "\" -> \"" << json_escape(to) << "\" [label=\""
       << color << "\"];\n";
  os << "}\n";
  return os.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace hatcrystal
