#ifndef PLCURVE_ENGINE_HPP
#define PLCURVE_ENGINE_HPP

#include <map>
#include <string>
#include <vector>

#include "plcurve/ewtree.hpp"
#include "plcurve/puiseux.hpp"
#include "plcurve/rat.hpp"

namespace plcurve {

struct TrunkMark {
  Rat slope;
  std::string divisor;
};

// One cross at which a Newton fan was computed. The trunk is the segment
// [base, aux] marked by the fan rays.
struct Trunk {
  int id = 0;
  int level = 1;
  std::string base_label;  // "L" for the first trunk, a divisor name otherwise
  std::string aux_label;   // "L1", "L2", ...
  std::vector<TrunkMark> marks;
  // Branches whose strict transform coincides with the auxiliary branch.
  std::vector<std::string> merged_branches;
  // Local data at the cross: (branch label, renormalized series).
  std::vector<std::pair<std::string, PuiseuxSeries>> local_series;

  std::vector<Rat> fan_slopes() const;
};

// Terminal attachment of a branch: the stop cross [E, C].
struct BranchArrow {
  std::string divisor;
  std::string branch;
};

struct TraceStep {
  int level = 0;
  int trunk = 0;
  Rat slope;             // local slope of the consumed ray
  Rat original_exponent; // the consumed exponent in the input coordinates
  bool index_dropped = false;
};

struct ResolutionRecord {
  std::vector<Branch> input;
  std::vector<Trunk> trunks;
  std::vector<PuiseuxSeries> auxiliaries;  // canonical series of L1, L2, ...
  std::vector<BranchArrow> arrows;
  std::map<std::string, std::vector<TraceStep>> traces;
  int levels = 0;

  const Trunk& trunk_of_divisor(const std::string& divisor) const;
  // 1 + number of renormalization steps at which the local index dropped.
  int renormalization_depth(const std::string& branch_label) const;
};

// Runs the toroidal pseudo-resolution algorithm with the truncation strategy:
// the auxiliary branch at each cross is the consumed prefix of the first
// active branch there. The initial cross is always (L, L1) with L1 = Z(y).
ResolutionRecord pseudo_resolve(const std::vector<Branch>& branches);

struct SingularPoint {
  int trunk = 0;
  ExtRat lo;
  ExtRat hi;
  Int determinant;  // absolute value, > 1
};

// Non-regular consecutive ray pairs of the recorded fans, trunk endpoints
// 0 and infinity included.
std::vector<SingularPoint> singular_points(const ResolutionRecord& r);

struct FTNode {
  std::vector<std::string> labels;
  ExtRat slope;  // slope on the trunk this node was created on; 0 at the root
  int trunk = -1;
  int parent = -1;
  std::vector<int> children;
};

// Rooted tree glued from the trunks along equal labels, with the slope
// function restricted to each trunk.
class FanTree {
 public:
  const std::vector<FTNode>& nodes() const { return nodes_; }
  const FTNode& node(int id) const { return nodes_.at(id); }
  int root() const { return 0; }
  int add_node(FTNode n);
  int node_of(const std::string& label) const;
  std::vector<int> path(int node) const;

 private:
  std::vector<FTNode> nodes_;
};

FanTree fan_tree(const ResolutionRecord& r);

// Eggers-Wall tree carried by the fan tree: same labeled tree, with
//   i(P) = prod den(slp(Q)) over trunk junctions below P,
//   e(P) = int 1/i d slp,  c(P) = int 1/i^2 d slp.
EWTree ew_from_fan_tree(const FanTree& t);

}  // namespace plcurve

#endif
