#include "plcurve/lotus.hpp"

#include <algorithm>
#include <set>

#include "plcurve/lattice.hpp"

namespace plcurve {

int Lotus::vertex_of(const std::string& label) const {
  for (const LotusVertex& v : vertices)
    if (std::find(v.labels.begin(), v.labels.end(), label) != v.labels.end()) return v.id;
  throw domain_error("lotus has no vertex labeled '" + label + "'");
}

std::vector<int> Lotus::petals_containing(int vertex) const {
  std::vector<int> out;
  for (const Petal& p : petals)
    if (vertex_in_petal(vertex, p)) out.push_back(p.id);
  return out;
}

std::vector<int> Lotus::lateral_chain(const Membrane& m) const {
  std::vector<std::pair<Rat, int>> apexes;
  for (int pid : m.petals) {
    int apex = petals[pid].apex;
    const auto& c = m.coords.at(apex);
    apexes.emplace_back(Rat(c.second, c.first), apex);
  }
  std::sort(apexes.begin(), apexes.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<int> chain{m.e1};
  for (const auto& [s, v] : apexes) chain.push_back(v);
  chain.push_back(m.e2);
  return chain;
}

namespace {

struct MembraneBuilder {
  Lotus& lotus;
  Membrane& membrane;
  std::vector<Rat> slopes;  // sorted

  int new_vertex(const Int& x, const Int& y, bool basic) {
    LotusVertex v;
    v.id = static_cast<int>(lotus.vertices.size());
    v.membrane = membrane.id;
    v.basic = basic;
    v.slope = x == 0 ? ExtRat::infinity() : ExtRat(Rat(y, x));
    lotus.vertices.push_back(v);
    membrane.coords[v.id] = {x, y};
    return v.id;
  }

  bool any_slope_in(const ExtRat& lo, const ExtRat& hi) const {
    for (const Rat& s : slopes)
      if (lo < ExtRat(s) && ExtRat(s) < hi) return true;
    return false;
  }

  // Descend the Stern-Brocot tree: a petal is created over the base
  // (vlo, vhi) whenever some slope of the fan lies strictly between them.
  void build(int e1, int e2) {
    membrane.e1 = e1;
    membrane.e2 = e2;
    membrane.coords[e1] = {1, 0};
    membrane.coords[e2] = {0, 1};
    struct Frame {
      int vlo, vhi, parent;
    };
    std::vector<Frame> stack{{e1, e2, -1}};
    while (!stack.empty()) {
      Frame f = stack.back();
      stack.pop_back();
      const auto clo = membrane.coords.at(f.vlo);
      const auto chi = membrane.coords.at(f.vhi);
      ExtRat slo = clo.first == 0 ? ExtRat::infinity() : ExtRat(Rat(clo.second, clo.first));
      ExtRat shi = chi.first == 0 ? ExtRat::infinity() : ExtRat(Rat(chi.second, chi.first));
      if (!any_slope_in(slo, shi)) continue;
      int apex = new_vertex(clo.first + chi.first, clo.second + chi.second, false);
      Petal p;
      p.id = static_cast<int>(lotus.petals.size());
      p.membrane = membrane.id;
      p.base1 = f.vlo;
      p.base2 = f.vhi;
      p.apex = apex;
      p.parent = f.parent;
      lotus.petals.push_back(p);
      membrane.petals.push_back(p.id);
      stack.push_back({apex, f.vhi, p.id});
      stack.push_back({f.vlo, apex, p.id});
    }
  }
};

void label_marked(Lotus& lotus, Membrane& m, const Rat& slope, const std::string& label) {
  for (int pid : m.petals) {
    int apex = lotus.petals[pid].apex;
    const auto& c = m.coords.at(apex);
    if (Rat(c.second, c.first) == slope) {
      lotus.vertices[apex].labels.push_back(label);
      return;
    }
  }
  throw domain_error("internal: no petal apex of slope " + slope.str());
}

}  // namespace

Lotus build_newton_lotus(const std::vector<Rat>& slopes) {
  Lotus lotus;
  Membrane m;
  m.id = 0;
  lotus.membranes.push_back(m);
  Membrane& mem = lotus.membranes[0];
  std::vector<Rat> sorted = slopes;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  MembraneBuilder builder{lotus, mem, sorted};
  LotusVertex e1;
  e1.id = 0;
  e1.basic = true;
  e1.slope = Rat(0);
  e1.labels.push_back("L");
  lotus.vertices.push_back(e1);
  LotusVertex e2;
  e2.id = 1;
  e2.basic = true;
  e2.slope = ExtRat::infinity();
  e2.labels.push_back("L1");
  lotus.vertices.push_back(e2);
  builder.build(0, 1);
  for (const Rat& s : sorted) label_marked(lotus, mem, s, "p(" + s.str() + ")");
  return lotus;
}

Lotus glue_lotuses(const ResolutionRecord& r) {
  Lotus lotus;
  for (const Trunk& t : r.trunks) {
    Membrane m;
    m.id = static_cast<int>(lotus.membranes.size());
    m.trunk = t.id;
    lotus.membranes.push_back(m);
    Membrane& mem = lotus.membranes.back();
    MembraneBuilder builder{lotus, mem, t.fan_slopes()};
    int e1;
    if (t.base_label == "L") {
      LotusVertex v;
      v.id = static_cast<int>(lotus.vertices.size());
      v.membrane = mem.id;
      v.basic = true;
      v.slope = Rat(0);
      v.labels.push_back("L");
      lotus.vertices.push_back(v);
      e1 = v.id;
    } else {
      e1 = lotus.vertex_of(t.base_label);  // glue along the labeled divisor
    }
    LotusVertex v2;
    v2.id = static_cast<int>(lotus.vertices.size());
    v2.membrane = mem.id;
    v2.basic = true;
    v2.slope = ExtRat::infinity();
    v2.labels.push_back(t.aux_label);
    for (const std::string& b : t.merged_branches) v2.labels.push_back(b);
    lotus.vertices.push_back(v2);
    builder.build(e1, v2.id);
    for (const TrunkMark& mark : t.marks) label_marked(lotus, mem, mark.slope, mark.divisor);
  }
  for (const BranchArrow& a : r.arrows)
    lotus.arrows.push_back({lotus.vertex_of(a.divisor), a.branch});
  return lotus;
}

std::map<int, Int> self_intersections(const Lotus& l) {
  std::map<int, Int> count;
  for (const Petal& p : l.petals) {
    for (int v : {p.base1, p.base2, p.apex}) {
      if (l.vertices[v].basic) continue;
      count[v] += 1;
    }
  }
  return count;
}

bool DualGraph::is_chain() const {
  std::map<int, int> degree;
  for (const auto& [a, b] : edges) {
    if (nodes[a].arrowhead || nodes[b].arrowhead) continue;
    degree[a]++;
    degree[b]++;
  }
  int ends = 0;
  for (const auto& [n, d] : degree) {
    if (d > 2) return false;
    if (d == 1) ++ends;
  }
  return ends <= 2;
}

std::vector<int> DualGraph::chain_order() const {
  std::map<int, std::vector<int>> adj;
  for (const auto& [a, b] : edges) {
    if (nodes[a].arrowhead || nodes[b].arrowhead) continue;
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  if (adj.empty()) return {};
  // Deterministic: start at the smallest-id end of the path.
  int start = adj.begin()->first;
  std::vector<int> deg1;
  for (const auto& [n, nb] : adj)
    if (nb.size() == 1) deg1.push_back(n);
  if (!deg1.empty()) start = *std::min_element(deg1.begin(), deg1.end());
  std::vector<int> order{start};
  int prev = -1, cur = start;
  while (true) {
    int next = -1;
    for (int nb : adj[cur]) {
      if (nb != prev) {
        next = nb;
        break;
      }
    }
    if (next < 0) break;
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  return order;
}

DualGraph dual_graph(const Lotus& l) {
  DualGraph g;
  std::map<int, Int> weights = self_intersections(l);
  for (const LotusVertex& v : l.vertices) {
    DualGraphNode n;
    n.id = v.id;
    n.labels = v.labels;
    n.weighted = !v.basic;
    if (n.weighted) n.weight = weights.count(v.id) ? weights[v.id] : Int(0);
    g.nodes.push_back(n);
  }
  std::set<std::pair<int, int>> seen;
  for (const Membrane& m : l.membranes) {
    std::vector<int> chain = l.lateral_chain(m);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      auto e = std::minmax(chain[i], chain[i + 1]);
      if (seen.insert({e.first, e.second}).second) g.edges.emplace_back(chain[i], chain[i + 1]);
    }
  }
  for (const LotusArrow& a : l.arrows) {
    DualGraphNode n;
    n.id = static_cast<int>(g.nodes.size());
    n.labels.push_back(a.branch);
    n.arrowhead = true;
    g.nodes.push_back(n);
    g.edges.emplace_back(a.vertex, n.id);
  }
  return g;
}

EnriquesTree enriques_tree(const Lotus& l) {
  EnriquesTree t;
  if (l.petals.empty()) return t;
  for (const Petal& p : l.petals) {
    if (p.parent >= 0) {
      // The Enriques edge joins the parent's apex to the petal's apex.
      t.edges.emplace_back(l.petals[p.parent].apex, p.apex);
    } else if (p.membrane == 0) {
      t.root_vertex = p.apex;
    } else {
      // First extended-Enriques edge of a non-base membrane: [e1, e1+e2].
      t.edges.emplace_back(l.membranes[p.membrane].e1, p.apex);
    }
  }
  return t;
}

ProximityGraph proximity_graph(const Lotus& l) {
  ProximityGraph g;
  for (const LotusVertex& v : l.vertices)
    if (!v.basic) g.vertices.push_back(v.id);
  std::set<std::pair<int, int>> edges;
  auto add = [&](int a, int b) {
    if (l.vertices[a].basic || l.vertices[b].basic) return;
    edges.insert(std::minmax(a, b));
  };
  for (const Petal& p : l.petals) {
    add(p.base1, p.base2);
    add(p.base1, p.apex);
    add(p.base2, p.apex);
  }
  g.edges.assign(edges.begin(), edges.end());
  return g;
}

TruncatedLotus truncate_lotus(const Lotus& l) {
  TruncatedLotus out;
  std::map<int, Int>& w = out.weights;
  for (const Petal& p : l.petals) {
    bool basic1 = l.vertices[p.base1].basic;
    bool basic2 = l.vertices[p.base2].basic;
    bool is_base_of_base = p.parent < 0 && p.membrane == 0;
    if (is_base_of_base) {
      // Only the axis survives; it contains the apex alone.
      w[p.apex] += 1;
      continue;
    }
    if (!basic1 && !basic2) {
      for (int v : {p.base1, p.base2, p.apex}) w[v] += 1;
    } else if (basic1 != basic2) {
      // One semipetal survives: the one at the non-basic base vertex.
      int kept = basic1 ? p.base2 : p.base1;
      w[kept] += 1;
      w[p.apex] += 1;
    }
    // Both base vertices basic only happens for the base petal of membrane 0.
  }

  // Dual graph of the total transform of C: the lateral boundary without the
  // basic ends, with branch arrows preserved.
  DualGraph g;
  std::map<int, int> node_of;
  for (const LotusVertex& v : l.vertices) {
    if (v.basic) continue;
    DualGraphNode n;
    n.id = static_cast<int>(g.nodes.size());
    n.labels = v.labels;
    n.weighted = true;
    n.weight = w.count(v.id) ? w[v.id] : Int(0);
    node_of[v.id] = n.id;
    g.nodes.push_back(n);
  }
  std::set<std::pair<int, int>> seen;
  for (const Membrane& m : l.membranes) {
    std::vector<int> chain = l.lateral_chain(m);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      int a = chain[i], b = chain[i + 1];
      if (l.vertices[a].basic || l.vertices[b].basic) continue;
      auto e = std::minmax(node_of[a], node_of[b]);
      if (seen.insert(e).second) g.edges.emplace_back(node_of[a], node_of[b]);
    }
  }
  auto add_arrow = [&g](int node, const std::string& label) {
    DualGraphNode n;
    n.id = static_cast<int>(g.nodes.size());
    n.labels.push_back(label);
    n.arrowhead = true;
    g.nodes.push_back(n);
    g.edges.emplace_back(node, n.id);
  };
  for (const LotusArrow& a : l.arrows) add_arrow(node_of.at(a.vertex), a.branch);
  // Branches that coincide with an auxiliary branch hang off the divisor
  // adjacent to the removed basic end.
  for (const Membrane& m : l.membranes) {
    const LotusVertex& aux = l.vertices[m.e2];
    if (aux.labels.size() <= 1) continue;
    std::vector<int> chain = l.lateral_chain(m);
    int neighbor = chain[chain.size() - 2];
    if (l.vertices[neighbor].basic) continue;
    for (std::size_t i = 1; i < aux.labels.size(); ++i)
      add_arrow(node_of.at(neighbor), aux.labels[i]);
  }
  out.dual = std::move(g);
  return out;
}

}  // namespace plcurve
