#include "plcurve/ewtree.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace plcurve {

int EWTree::add_node(EWNode n) {
  int id = static_cast<int>(nodes_.size());
  if (n.parent >= 0) nodes_[n.parent].children.push_back(id);
  nodes_.push_back(std::move(n));
  return id;
}

int EWTree::leaf_of(const std::string& label) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const EWNode& n = nodes_[i];
    if (std::find(n.labels.begin(), n.labels.end(), label) != n.labels.end())
      return static_cast<int>(i);
  }
  throw domain_error("no node labeled '" + label + "'");
}

std::vector<int> EWTree::path(int node) const {
  std::vector<int> p;
  for (int cur = node; cur >= 0; cur = nodes_[cur].parent) p.push_back(cur);
  std::reverse(p.begin(), p.end());
  return p;
}

std::vector<Rat> EWTree::marked_exponents() const {
  std::set<Rat> out;
  for (const EWNode& n : nodes_) {
    if (n.parent < 0 || n.exponent.is_infinite()) continue;
    out.insert(n.exponent.rat());
  }
  return std::vector<Rat>(out.begin(), out.end());
}

namespace {

struct Builder {
  const std::vector<Branch>& branches;
  std::vector<std::vector<ExtRat>> k;  // pairwise coincidence orders
  EWTree tree;

  explicit Builder(const std::vector<Branch>& bs) : branches(bs) {
    k.assign(bs.size(), std::vector<ExtRat>(bs.size(), ExtRat::infinity()));
    for (std::size_t i = 0; i < bs.size(); ++i) {
      for (std::size_t j = i + 1; j < bs.size(); ++j) {
        ExtRat kij = coincidence_order(bs[i].series, bs[j].series);
        if (kij.is_infinite())
          throw duplicate_branch_error("branches '" + bs[i].label + "' and '" +
                                       bs[j].label + "' coincide");
        k[i][j] = k[j][i] = kij;
      }
    }
  }

  // Chain of characteristic-exponent nodes of branch b above `low`, ending in
  // the leaf of b.
  void chain_to(int parent, std::size_t b, const Rat& low, Int running, Rat c_run,
                Rat e_run) {
    for (const Rat& e : characteristic_exponents(branches[b].series)) {
      if (!(e > low)) continue;
      c_run += (e - e_run) / Rat(running);
      EWNode n;
      n.exponent = e;
      n.index = running;
      n.contact = c_run;
      n.parent = parent;
      parent = tree.add_node(n);
      running = lcm(running, e.den());
      e_run = e;
    }
    EWNode leaf;
    leaf.exponent = ExtRat::infinity();
    leaf.index = running;
    leaf.contact = ExtRat::infinity();
    leaf.labels.push_back(branches[b].label);
    leaf.parent = parent;
    tree.add_node(leaf);
  }

  void cluster(std::vector<std::size_t> set, int parent, Rat low, Int running,
               Rat c_run, Rat e_run) {
    if (set.size() == 1) {
      chain_to(parent, set[0], low, running, c_run, e_run);
      return;
    }
    // Smallest pairwise coincidence order in the set.
    Rat kappa = k[set[0]][set[1]].rat();
    for (std::size_t i = 0; i < set.size(); ++i)
      for (std::size_t j = i + 1; j < set.size(); ++j)
        kappa = std::min(kappa, k[set[i]][set[j]].rat());
    // Shared characteristic exponents strictly below kappa.
    int top = parent;
    for (const Rat& e : characteristic_exponents(branches[set[0]].series)) {
      if (!(e > low) || !(e < kappa)) continue;
      c_run += (e - e_run) / Rat(running);
      EWNode n;
      n.exponent = e;
      n.index = running;
      n.contact = c_run;
      n.parent = top;
      top = tree.add_node(n);
      running = lcm(running, e.den());
      e_run = e;
    }
    // Ramification node at kappa.
    c_run += (kappa - e_run) / Rat(running);
    EWNode ram;
    ram.exponent = kappa;
    ram.index = running;
    ram.contact = c_run;
    ram.parent = top;
    int ram_id = tree.add_node(ram);
    // Partition: same subtree iff coincidence strictly above kappa.
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t b : set) {
      bool placed = false;
      for (auto& g : groups) {
        if (ExtRat(kappa) < k[g[0]][b]) {
          g.push_back(b);
          placed = true;
          break;
        }
      }
      if (!placed) groups.push_back({b});
    }
    for (auto& g : groups) {
      // The index jumps at kappa only along branches ramifying there.
      const std::vector<Rat> chars = characteristic_exponents(branches[g[0]].series);
      bool is_char = std::find(chars.begin(), chars.end(), kappa) != chars.end();
      Int next_running = is_char ? lcm(running, kappa.den()) : running;
      cluster(std::move(g), ram_id, kappa, next_running, c_run, kappa);
    }
  }

  EWTree build() {
    EWNode root;
    root.exponent = Rat(0);
    root.index = 1;
    root.contact = Rat(0);
    root.labels.push_back("L");
    tree.add_node(root);
    std::vector<std::size_t> all(branches.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    if (!all.empty()) cluster(all, 0, Rat(0), 1, Rat(0), Rat(0));
    return tree;
  }
};

}  // namespace

EWTree build_ew_tree(const std::vector<Branch>& branches) {
  for (const Branch& b : branches) {
    ExtRat nu = b.series.order();
    if (nu.is_finite() && !(nu.rat() > Rat(0)))
      throw domain_error("branch '" + b.label + "' does not pass through the origin");
  }
  return Builder(branches).build();
}

ExtRat contact(const EWTree& t, int node) { return t.node(node).contact; }

Rat contact_at_exponent(const PuiseuxSeries& a, const Rat& e) {
  Int running = 1;
  Rat c(0), prev(0);
  for (const Rat& ch : characteristic_exponents(a)) {
    if (!(ch < e)) break;
    c += (ch - prev) / Rat(running);
    running = lcm(running, ch.den());
    prev = ch;
  }
  c += (e - prev) / Rat(running);
  return c;
}

Int intersection_number(const Branch& a, const Branch& b) {
  ExtRat k = coincidence_order(a.series, b.series);
  if (k.is_infinite())
    throw domain_error("intersection number of a branch with itself");
  Rat c = contact_at_exponent(a.series, k.rat());
  Rat total = c * Rat(a.series.index()) * Rat(b.series.index());
  if (!total.is_integer())
    throw domain_error("internal: non-integral intersection number");
  return total.num();
}

Int intersection_number_with_reference(const Branch& a) { return a.series.index(); }

Int multiplicity(const Branch& b) {
  if (b.series.is_zero()) return 1;
  Int n = b.series.index();
  Rat nu = b.series.order().rat();
  Rat m = Rat(n) * nu;
  if (!m.is_integer()) throw domain_error("internal: non-integral multiplicity bound");
  return std::min(n, m.num());
}

}  // namespace plcurve
