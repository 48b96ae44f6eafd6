#include "plcurve/emit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace plcurve {

namespace {

std::string display_basic(const std::string& label) {
  if (label == "L") return "Z(x)";
  if (label == "L1") return "Z(y)";
  return label;
}

std::string join_labels(const std::vector<std::string>& labels) {
  std::string out;
  for (const std::string& s : labels) {
    if (!out.empty()) out += "=";
    out += display_basic(s);
  }
  return out;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string dual_node_name(const DualGraphNode& n) {
  if (!n.labels.empty()) return join_labels(n.labels);
  return "?";
}

void assign_divisor_names(DualGraph& g) {
  int max_e = 0;
  for (const DualGraphNode& n : g.nodes) {
    for (const std::string& l : n.labels) {
      if (l.size() > 1 && l[0] == 'E') {
        try {
          max_e = std::max(max_e, std::stoi(l.substr(1)));
        } catch (...) {
        }
      }
    }
  }
  for (DualGraphNode& n : g.nodes) {
    if (n.labels.empty() && n.weighted) n.labels.push_back("E" + std::to_string(++max_e));
  }
}

std::string dual_graph_text(const DualGraph& g) {
  DualGraph named = g;
  assign_divisor_names(named);
  std::map<int, int> arrow_count;
  for (const auto& [a, b] : named.edges) {
    if (named.nodes[b].arrowhead) arrow_count[a]++;
    if (named.nodes[a].arrowhead) arrow_count[b]++;
  }
  if (named.is_chain()) {
    std::vector<int> order = named.chain_order();
    // Conventional direction: the Z(y) end first, the Z(x) end last.
    auto has_label = [&named](int id, const std::string& l) {
      const auto& ls = named.nodes[id].labels;
      return std::find(ls.begin(), ls.end(), l) != ls.end();
    };
    if (!order.empty() && (has_label(order.front(), "L") || has_label(order.back(), "L1")))
      std::reverse(order.begin(), order.end());
    std::string out;
    for (int id : order) {
      if (!out.empty()) out += " ";
      const DualGraphNode& n = named.nodes[id];
      if (n.weighted)
        out += "-" + n.weight.str();
      else
        out += dual_node_name(n);
      for (int k = 0; k < (arrow_count.count(id) ? arrow_count[id] : 0); ++k) out += "*";
    }
    return out;
  }
  // Tree dump rooted at the node of smallest id.
  std::map<int, std::vector<int>> adj;
  for (const auto& [a, b] : named.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::ostringstream out;
  std::vector<std::pair<int, std::pair<int, int>>> stack{{0, {-1, 0}}};
  while (!stack.empty()) {
    auto [id, st] = stack.back();
    stack.pop_back();
    auto [from, depth] = st;
    const DualGraphNode& n = named.nodes[id];
    out << std::string(2 * depth, ' ') << dual_node_name(n);
    if (n.weighted) out << " [" << -n.weight << "]";
    if (n.arrowhead) out << " <-";
    out << "\n";
    std::vector<int> kids;
    for (int nb : adj[id])
      if (nb != from) kids.push_back(nb);
    std::sort(kids.rbegin(), kids.rend());
    for (int k : kids) stack.push_back({k, {id, depth + 1}});
  }
  return out.str();
}

std::string emit_dot(const DualGraph& g) {
  DualGraph named = g;
  assign_divisor_names(named);
  std::ostringstream out;
  out << "graph dual {\n";
  for (const DualGraphNode& n : named.nodes) {
    out << "  n" << n.id << " [label=\"" << escape(dual_node_name(n));
    if (n.weighted) out << "\\n" << -n.weight;
    out << "\"";
    if (n.arrowhead) out << ", shape=diamond";
    out << "];\n";
  }
  for (const auto& [a, b] : named.edges) out << "  n" << a << " -- n" << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string emit_dot(const FanTree& t) {
  std::ostringstream out;
  out << "digraph fantree {\n";
  for (std::size_t i = 0; i < t.nodes().size(); ++i) {
    const FTNode& n = t.node(static_cast<int>(i));
    out << "  n" << i << " [label=\"" << escape(join_labels(n.labels)) << "\\nslp="
        << n.slope.str() << "\"];\n";
  }
  for (std::size_t i = 0; i < t.nodes().size(); ++i) {
    for (int c : t.node(static_cast<int>(i)).children) out << "  n" << i << " -> n" << c << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string emit_dot(const EWTree& t) {
  std::ostringstream out;
  out << "digraph ewtree {\n";
  for (std::size_t i = 0; i < t.nodes().size(); ++i) {
    const EWNode& n = t.nodes()[i];
    out << "  n" << i << " [label=\"" << escape(join_labels(n.labels)) << "\\ne="
        << n.exponent.str() << ",i=" << n.index << "\"];\n";
  }
  for (std::size_t i = 0; i < t.nodes().size(); ++i) {
    for (int c : t.nodes()[i].children) out << "  n" << i << " -> n" << c << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string lotus_vertex_name(const Lotus& l, int vertex) {
  const LotusVertex& v = l.vertices[vertex];
  if (!v.labels.empty()) return join_labels(v.labels);
  const auto& c = l.membranes[v.membrane].coords.at(vertex);
  return "m" + std::to_string(v.membrane) + ":(" + c.first.str() + "," + c.second.str() + ")";
}

std::string emit_dot_enriques(const Lotus& l, const EnriquesTree& t) {
  std::ostringstream out;
  out << "digraph enriques {\n";
  std::vector<int> verts;
  if (t.root_vertex >= 0) verts.push_back(t.root_vertex);
  for (const auto& [p, c] : t.edges) verts.push_back(c);
  for (int v : verts)
    out << "  n" << v << " [label=\"" << escape(lotus_vertex_name(l, v)) << "\"];\n";
  for (const auto& [p, c] : t.edges) out << "  n" << p << " -> n" << c << ";\n";
  out << "}\n";
  return out.str();
}

std::string emit_dot_proximity(const Lotus& l, const ProximityGraph& g) {
  std::ostringstream out;
  out << "graph proximity {\n";
  for (int v : g.vertices)
    out << "  n" << v << " [label=\"" << escape(lotus_vertex_name(l, v)) << "\"];\n";
  for (const auto& [a, b] : g.edges) out << "  n" << a << " -- n" << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string fan_tree_text(const FanTree& t) {
  std::ostringstream out;
  std::vector<std::pair<int, int>> stack{{t.root(), 0}};
  while (!stack.empty()) {
    auto [id, depth] = stack.back();
    stack.pop_back();
    const FTNode& n = t.node(id);
    out << std::string(2 * depth, ' ') << join_labels(n.labels) << " slp=" << n.slope.str()
        << "\n";
    for (auto it = n.children.rbegin(); it != n.children.rend(); ++it)
      stack.push_back({*it, depth + 1});
  }
  return out.str();
}

std::string ew_tree_text(const EWTree& t) {
  std::ostringstream out;
  std::vector<std::pair<int, int>> stack{{t.root(), 0}};
  while (!stack.empty()) {
    auto [id, depth] = stack.back();
    stack.pop_back();
    const EWNode& n = t.nodes()[id];
    out << std::string(2 * depth, ' ');
    if (!n.labels.empty()) out << join_labels(n.labels) << " ";
    out << "e=" << n.exponent.str() << " i=" << n.index << " c=" << n.contact.str() << "\n";
    for (auto it = n.children.rbegin(); it != n.children.rend(); ++it)
      stack.push_back({*it, depth + 1});
  }
  return out.str();
}

namespace {

struct XY {
  double x, y;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.2f", v + 0.0);
  return buf;
}

}  // namespace

std::string emit_svg(const Lotus& l) {
  // Radial layout: each membrane is drawn in its own rotated-and-translated
  // copy of its lattice coordinates, anchored at the glued vertex. This is a
  // rendering convention only.
  const double scale = 40.0;
  std::map<int, XY> anchor_pos;  // vertex id -> global position
  std::map<int, int> slots_used; // vertex id -> membranes already hanging there
  std::vector<std::map<int, XY>> mpos(l.membranes.size());
  std::ostringstream body;
  int polygons = 0;

  for (std::size_t mi = 0; mi < l.membranes.size(); ++mi) {
    const Membrane& m = l.membranes[mi];
    double angle = 0.0;
    XY base{0.0, 0.0};
    if (mi > 0) {
      int host = m.e1;
      base = anchor_pos.count(host) ? anchor_pos[host] : XY{0.0, 0.0};
      int slot = slots_used[host]++;
      angle = 0.9 + 0.8 * slot;
    }
    double ca = std::cos(angle), sa = std::sin(angle);
    for (const auto& [vid, c] : m.coords) {
      double lx = static_cast<double>(c.first) - 1.0;  // e1 at the origin of the membrane
      double ly = static_cast<double>(c.second);
      XY p{base.x + scale * (ca * lx - sa * ly), base.y - scale * (sa * lx + ca * ly)};
      mpos[mi][vid] = p;
      if (!anchor_pos.count(vid)) anchor_pos[vid] = p;
    }
    for (int pid : m.petals) {
      const Petal& p = l.petals[pid];
      body << "  <polygon points=\"";
      for (int v : {p.base1, p.base2, p.apex}) {
        const XY& q = mpos[mi][v];
        body << fmt(q.x) << "," << fmt(q.y) << " ";
      }
      body << "\" fill=\"#f8c8d8\" stroke=\"#444\" stroke-width=\"0.5\"/>\n";
      ++polygons;
    }
    if (m.petals.empty()) {
      const XY& a = mpos[mi][m.e1];
      const XY& b = mpos[mi][m.e2];
      body << "  <line x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(a.y) << "\" x2=\"" << fmt(b.x)
           << "\" y2=\"" << fmt(b.y) << "\" stroke=\"#444\" stroke-width=\"0.8\"/>\n";
    }
  }
  // Marked points and labels.
  for (const LotusVertex& v : l.vertices) {
    if (!anchor_pos.count(v.id)) continue;
    const XY& p = anchor_pos[v.id];
    if (!v.labels.empty() || v.basic) {
      body << "  <circle cx=\"" << fmt(p.x) << "\" cy=\"" << fmt(p.y)
           << "\" r=\"2.5\" fill=\"#b1002e\"/>\n";
      body << "  <text x=\"" << fmt(p.x + 4) << "\" y=\"" << fmt(p.y - 4)
           << "\" font-size=\"9\">" << lotus_vertex_name(l, v.id) << "</text>\n";
    }
  }
  // Branch arrows.
  int arrow_slot = 0;
  for (const LotusArrow& a : l.arrows) {
    const XY& p = anchor_pos[a.vertex];
    double ang = 0.4 * (arrow_slot++);
    XY q{p.x + 24 * std::cos(ang), p.y - 24 * std::sin(ang)};
    body << "  <line x1=\"" << fmt(p.x) << "\" y1=\"" << fmt(p.y) << "\" x2=\"" << fmt(q.x)
         << "\" y2=\"" << fmt(q.y) << "\" stroke=\"#0a7a2f\" stroke-width=\"1\"/>\n";
    body << "  <text x=\"" << fmt(q.x) << "\" y=\"" << fmt(q.y) << "\" font-size=\"9\">"
         << a.branch << "</text>\n";
  }
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-400 -400 800 800\">\n"
      << body.str() << "</svg>\n";
  return out.str();
}

}  // namespace plcurve
