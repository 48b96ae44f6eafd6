#ifndef PLCURVE_LOTUS_HPP
#define PLCURVE_LOTUS_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "plcurve/engine.hpp"
#include "plcurve/rat.hpp"

namespace plcurve {

struct LotusVertex {
  int id = 0;
  int membrane = 0;  // membrane where the vertex was created
  bool basic = false;
  std::vector<std::string> labels;
  ExtRat slope;  // slope in the basis of the creating membrane
};

struct Petal {
  int id = 0;
  int membrane = 0;
  int base1 = 0;  // positively oriented base (base1, base2)
  int base2 = 0;
  int apex = 0;
  int parent = -1;  // petal id; -1 for the base petal of a membrane
};

struct Membrane {
  int id = 0;
  int trunk = -1;  // trunk id for glued lotuses
  int e1 = 0;      // vertex ids of the base cross
  int e2 = 0;
  std::vector<int> petals;
  // Local lattice coordinates of every vertex this membrane touches.
  std::map<int, std::pair<Int, Int>> coords;
};

struct LotusArrow {
  int vertex = 0;
  std::string branch;
};

// Simplicial complex of petals grouped in membranes; the combinatorial record
// of a blow-up process. Membrane 0 carries the base edge.
class Lotus {
 public:
  std::vector<LotusVertex> vertices;
  std::vector<Petal> petals;
  std::vector<Membrane> membranes;
  std::vector<LotusArrow> arrows;

  int vertex_of(const std::string& label) const;
  std::vector<int> petals_containing(int vertex) const;
  // Lateral chain of a membrane: e1, apexes by increasing slope, e2.
  std::vector<int> lateral_chain(const Membrane& m) const;
  bool vertex_in_petal(int vertex, const Petal& p) const {
    return p.base1 == vertex || p.base2 == vertex || p.apex == vertex;
  }
};

// Lotus of a single Newton fan; marked slopes get labels "p(<slope>)".
Lotus build_newton_lotus(const std::vector<Rat>& slopes);

// Glues the Newton lotuses of all recorded fans along equally labeled
// vertices, plus one arrow membrane per terminal branch.
Lotus glue_lotuses(const ResolutionRecord& r);

// Vertex id -> number of petals containing it (the self-intersection of the
// corresponding divisor is the negative of this), for non-basic vertices.
std::map<int, Int> self_intersections(const Lotus& l);

struct DualGraphNode {
  int id = 0;
  std::vector<std::string> labels;
  bool weighted = false;
  Int weight;  // petal count; self-intersection is -weight
  bool arrowhead = false;
};

struct DualGraph {
  std::vector<DualGraphNode> nodes;
  std::vector<std::pair<int, int>> edges;

  bool is_chain() const;
  // Node ids in path order (only for chains), arrowheads excluded.
  std::vector<int> chain_order() const;
};

DualGraph dual_graph(const Lotus& l);

struct EnriquesTree {
  int root_vertex = -1;  // apex of the base petal; -1 for the petal-free lotus
  std::vector<std::pair<int, int>> edges;  // (parent vertex, child vertex)
};

EnriquesTree enriques_tree(const Lotus& l);

struct ProximityGraph {
  std::vector<int> vertices;  // non-basic vertices
  std::vector<std::pair<int, int>> edges;
};

ProximityGraph proximity_graph(const Lotus& l);

struct TruncatedLotus {
  // Vertex id -> incidence count with kept petals, semipetals and the axis.
  std::map<int, Int> weights;
  // Dual graph of the total transform of C alone.
  DualGraph dual;
};

TruncatedLotus truncate_lotus(const Lotus& l);

}  // namespace plcurve

#endif
