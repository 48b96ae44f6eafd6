#ifndef PLCURVE_EWTREE_HPP
#define PLCURVE_EWTREE_HPP

#include <string>
#include <vector>

#include "plcurve/puiseux.hpp"
#include "plcurve/rat.hpp"

namespace plcurve {

struct EWNode {
  ExtRat exponent;                  // infinity at leaves
  Int index;                        // lcm of marked denominators on [L, P)
  ExtRat contact;                   // infinity at leaves
  std::vector<std::string> labels;  // branch labels at leaves, divisor names if attached
  int parent = -1;
  std::vector<int> children;
};

// Rooted tree of a reduced curve relative to L = Z(x), carrying the exponent,
// index and contact-complexity functions. Node 0 is the root (e = 0, i = 1).
class EWTree {
 public:
  const std::vector<EWNode>& nodes() const { return nodes_; }
  const EWNode& node(int id) const { return nodes_.at(id); }
  int root() const { return 0; }

  int add_node(EWNode n);
  int leaf_of(const std::string& label) const;
  std::vector<int> path(int node) const;  // root .. node

  // Exponents of all marked points other than root and leaves, sorted.
  std::vector<Rat> marked_exponents() const;

 private:
  std::vector<EWNode> nodes_;
};

// Builds the Eggers-Wall tree of the given pairwise distinct branches,
// attaching each pair at its order of coincidence. Throws
// duplicate_branch_error when two branches coincide.
EWTree build_ew_tree(const std::vector<Branch>& branches);

ExtRat contact(const EWTree& t, int node);

// c_L(A /\ B) * i_L(A) * i_L(B); always an integer.
Int intersection_number(const Branch& a, const Branch& b);

// Intersection with the reference branch L = Z(x) itself.
Int intersection_number_with_reference(const Branch& a);

Int multiplicity(const Branch& b);

// Contact complexity of the point of exponent e on the path of branch a.
Rat contact_at_exponent(const PuiseuxSeries& a, const Rat& e);

}  // namespace plcurve

#endif
