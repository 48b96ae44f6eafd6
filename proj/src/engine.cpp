#include "plcurve/engine.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "plcurve/lattice.hpp"

namespace plcurve {

std::vector<Rat> Trunk::fan_slopes() const {
  std::vector<Rat> out;
  for (const TrunkMark& m : marks) out.push_back(m.slope);
  return out;
}

const Trunk& ResolutionRecord::trunk_of_divisor(const std::string& divisor) const {
  for (const Trunk& t : trunks)
    for (const TrunkMark& m : t.marks)
      if (m.divisor == divisor) return t;
  throw domain_error("no trunk carries divisor " + divisor);
}

int ResolutionRecord::renormalization_depth(const std::string& branch_label) const {
  auto it = traces.find(branch_label);
  if (it == traces.end()) throw domain_error("no trace for branch " + branch_label);
  int depth = 1;
  for (const TraceStep& s : it->second)
    if (s.index_dropped) ++depth;
  return depth;
}

namespace {

struct Germ {
  std::size_t branch;      // index into the input list
  std::size_t consumed;    // terms of the original series consumed so far
  PuiseuxSeries local;
};

struct Point {
  std::string incoming;  // divisor through the point; "L" at the initial point
  int level;
  std::vector<Germ> germs;
};

bool has_integer_exponents(const PuiseuxSeries& s) {
  for (const auto& [e, c] : s.terms())
    if (!e.is_integer()) return false;
  return true;
}

Rat original_exponent(const Branch& b, std::size_t consumed) {
  auto it = b.series.terms().begin();
  std::advance(it, consumed);
  return it->first;
}

PuiseuxSeries original_prefix(const Branch& b, std::size_t consumed) {
  PuiseuxSeries out;
  auto it = b.series.terms().begin();
  for (std::size_t i = 0; i < consumed; ++i, ++it) out.set_term(it->first, it->second);
  return out;
}

}  // namespace

ResolutionRecord pseudo_resolve(const std::vector<Branch>& branches) {
  if (branches.empty()) throw domain_error("pseudo_resolve of an empty curve");
  std::set<std::string> labels;
  for (const Branch& b : branches) {
    if (!labels.insert(b.label).second)
      throw duplicate_branch_error("duplicate branch label '" + b.label + "'");
    ExtRat nu = b.series.order();
    if (nu.is_finite() && !(nu.rat() > Rat(0)))
      throw domain_error("branch '" + b.label + "' does not pass through the origin");
  }
  for (std::size_t i = 0; i < branches.size(); ++i) {
    for (std::size_t j = i + 1; j < branches.size(); ++j) {
      if (coincidence_order(branches[i].series, branches[j].series).is_infinite())
        throw duplicate_branch_error("branches '" + branches[i].label + "' and '" +
                                     branches[j].label + "' denote the same branch");
    }
  }

  ResolutionRecord rec;
  rec.input = branches;
  for (const Branch& b : branches) rec.traces[b.label] = {};

  int divisor_counter = 0;
  std::deque<Point> queue;
  {
    Point start;
    start.incoming = "L";
    start.level = 1;
    for (std::size_t i = 0; i < branches.size(); ++i)
      start.germs.push_back({i, 0, branches[i].series});
    queue.push_back(std::move(start));
  }

  while (!queue.empty()) {
    Point pt = std::move(queue.front());
    queue.pop_front();
    const bool initial = pt.incoming == "L";

    if (!initial && pt.germs.size() == 1) {
      const Germ& g = pt.germs[0];
      if (g.local.is_zero() || has_integer_exponents(g.local)) {
        // STEP 1: (E, C) is a cross here; the branch terminates.
        rec.arrows.push_back({pt.incoming, branches[g.branch].label});
        continue;
      }
    }

    // STEP 2: complete the incoming branch into a cross. The auxiliary branch
    // is the common consumed prefix of the germs at this point, i.e. the
    // truncation of the first active branch strictly below its next exponent.
    Trunk trunk;
    trunk.id = static_cast<int>(rec.trunks.size()) + 1;
    trunk.level = pt.level;
    trunk.base_label = pt.incoming;
    trunk.aux_label = "L" + std::to_string(trunk.id);
    PuiseuxSeries aux = original_prefix(branches[pt.germs[0].branch], pt.germs[0].consumed);
    for (const Germ& g : pt.germs) {
      if (g.local.is_zero()) trunk.merged_branches.push_back(branches[g.branch].label);
      trunk.local_series.emplace_back(branches[g.branch].label, g.local);
    }
    rec.auxiliaries.push_back(canonical_representative(aux));
    rec.levels = std::max(rec.levels, pt.level);

    // STEP 3: the Newton fan of the active germs, one ray per distinct order.
    std::set<Rat> ray_slopes;
    for (const Germ& g : pt.germs)
      if (!g.local.is_zero()) ray_slopes.insert(g.local.order().rat());
    std::map<Rat, std::string> ray_divisor;
    for (const Rat& s : ray_slopes) {
      std::string name = "E" + std::to_string(++divisor_counter);
      trunk.marks.push_back({s, name});
      ray_divisor[s] = name;
    }
    int trunk_id = trunk.id;
    rec.trunks.push_back(std::move(trunk));

    // STEP 4: group the germs of each ray by the point they pass through
    // (the orbit test alpha^c = beta^c) and renormalize.
    for (const Rat& s : ray_slopes) {
      const Int c = s.den();
      std::vector<std::vector<const Germ*>> groups;
      std::vector<PhasedRational> group_keys;
      for (const Germ& g : pt.germs) {
        if (g.local.is_zero() || !(g.local.order() == ExtRat(s))) continue;
        rec.traces[branches[g.branch].label].push_back(
            {pt.level, trunk_id, s, original_exponent(branches[g.branch], g.consumed),
             c > 1});
        PhasedRational key = g.local.leading_coefficient().pow(c);
        bool placed = false;
        for (std::size_t gi = 0; gi < groups.size(); ++gi) {
          if (group_keys[gi] == key) {
            groups[gi].push_back(&g);
            placed = true;
            break;
          }
        }
        if (!placed) {
          groups.push_back({&g});
          group_keys.push_back(key);
        }
      }
      for (const auto& group : groups) {
        PhasedRational alpha = group.front()->local.leading_coefficient();
        Point next;
        next.incoming = ray_divisor[s];
        next.level = pt.level + 1;
        bool any_alive = false;
        for (const Germ* g : group) {
          PuiseuxSeries renorm = renormalize(g->local, s, alpha);
          if (!renorm.is_zero()) any_alive = true;
          next.germs.push_back({g->branch, g->consumed + 1, std::move(renorm)});
        }
        if (!any_alive && group.size() == 1) {
          // Lone branch fully consumed: its strict transform is transversal
          // to the divisor of this ray.
          rec.arrows.push_back({next.incoming, branches[group.front()->branch].label});
          continue;
        }
        queue.push_back(std::move(next));
      }
    }
  }
  return rec;
}

std::vector<SingularPoint> singular_points(const ResolutionRecord& r) {
  std::vector<SingularPoint> out;
  for (const Trunk& t : r.trunks) {
    std::vector<ExtRat> rays{ExtRat(Rat(0))};
    for (const TrunkMark& m : t.marks) rays.emplace_back(m.slope);
    rays.push_back(ExtRat::infinity());
    for (std::size_t i = 0; i + 1 < rays.size(); ++i) {
      Int d = abs(det(primitive_of_slope(rays[i]), primitive_of_slope(rays[i + 1])));
      if (d != 1) out.push_back({t.id, rays[i], rays[i + 1], d});
    }
  }
  return out;
}

int FanTree::add_node(FTNode n) {
  int id = static_cast<int>(nodes_.size());
  if (n.parent >= 0) nodes_[n.parent].children.push_back(id);
  nodes_.push_back(std::move(n));
  return id;
}

int FanTree::node_of(const std::string& label) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const FTNode& n = nodes_[i];
    if (std::find(n.labels.begin(), n.labels.end(), label) != n.labels.end())
      return static_cast<int>(i);
  }
  throw domain_error("fan tree has no node labeled '" + label + "'");
}

std::vector<int> FanTree::path(int node) const {
  std::vector<int> p;
  for (int cur = node; cur >= 0; cur = nodes_[cur].parent) p.push_back(cur);
  std::reverse(p.begin(), p.end());
  return p;
}

FanTree fan_tree(const ResolutionRecord& r) {
  FanTree t;
  FTNode root;
  root.labels.push_back("L");
  root.slope = Rat(0);
  root.trunk = r.trunks.empty() ? -1 : r.trunks.front().id;
  t.add_node(root);
  for (const Trunk& trunk : r.trunks) {
    int attach = trunk.base_label == "L" ? t.root() : t.node_of(trunk.base_label);
    for (const TrunkMark& m : trunk.marks) {
      FTNode n;
      n.labels.push_back(m.divisor);
      n.slope = m.slope;
      n.trunk = trunk.id;
      n.parent = attach;
      attach = t.add_node(n);
    }
    FTNode end;
    end.labels.push_back(trunk.aux_label);
    for (const std::string& b : trunk.merged_branches) end.labels.push_back(b);
    end.slope = ExtRat::infinity();
    end.trunk = trunk.id;
    end.parent = attach;
    t.add_node(end);
  }
  for (const BranchArrow& a : r.arrows) {
    FTNode n;
    n.labels.push_back(a.branch);
    n.slope = ExtRat::infinity();
    n.trunk = -1;  // one-dimensional trunk [E, C]
    n.parent = t.node_of(a.divisor);
    t.add_node(n);
  }
  return t;
}

EWTree ew_from_fan_tree(const FanTree& t) {
  EWTree ew;
  // State carried along the fan tree: for each node, the accumulated index
  // product at its trunk and the exponent/contact at the trunk base.
  struct State {
    Int index_product;
    Rat e_base;
    Rat c_base;
  };
  std::vector<State> state(t.nodes().size());
  std::vector<int> ew_id(t.nodes().size(), -1);
  state[0] = {1, Rat(0), Rat(0)};
  EWNode root;
  root.exponent = Rat(0);
  root.index = 1;
  root.contact = Rat(0);
  root.labels = t.node(0).labels;
  ew_id[0] = ew.add_node(root);
  // Fan tree nodes are created parents-first; a single pass suffices.
  for (std::size_t i = 1; i < t.nodes().size(); ++i) {
    const FTNode& n = t.node(i);
    const FTNode& p = t.node(n.parent);
    State st;
    if (n.trunk == p.trunk && p.parent >= 0) {
      st = state[n.parent];  // same trunk, same base data
    } else {
      // n starts a new trunk at p (or hangs off the root).
      st.index_product = state[n.parent].index_product;
      if (p.parent >= 0 && p.slope.is_finite())
        st.index_product *= p.slope.rat().den();
      const EWNode& pe = ew.node(ew_id[n.parent]);
      st.e_base = pe.exponent.is_finite() ? pe.exponent.rat() : Rat(0);
      st.c_base = pe.contact.is_finite() ? pe.contact.rat() : Rat(0);
    }
    state[i] = st;
    EWNode out;
    out.labels = n.labels;
    out.parent = ew_id[n.parent];
    out.index = st.index_product;
    if (n.slope.is_finite()) {
      out.exponent = st.e_base + n.slope.rat() / Rat(st.index_product);
      out.contact =
          st.c_base + n.slope.rat() / (Rat(st.index_product) * Rat(st.index_product));
    } else {
      out.exponent = ExtRat::infinity();
      out.contact = ExtRat::infinity();
    }
    ew_id[i] = ew.add_node(out);
  }
  return ew;
}

}  // namespace plcurve
