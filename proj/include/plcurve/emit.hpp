#ifndef PLCURVE_EMIT_HPP
#define PLCURVE_EMIT_HPP

#include <string>

#include "plcurve/engine.hpp"
#include "plcurve/ewtree.hpp"
#include "plcurve/lotus.hpp"

namespace plcurve {

// Names every node of a dual graph: basic labels are kept ("L" prints as
// Z(x), "L1" as Z(y)); unlabeled exceptional vertices continue the E-series.
std::string dual_node_name(const DualGraphNode& n);
void assign_divisor_names(DualGraph& g);

// Chain format "Z(y) -2 -2 -1* -5 -1* -3 Z(x)" when the graph is a path;
// an indented tree dump otherwise. Arrowheads print as '*' marks.
std::string dual_graph_text(const DualGraph& g);

std::string emit_dot(const DualGraph& g);
std::string emit_dot(const FanTree& t);
std::string emit_dot(const EWTree& t);
std::string emit_dot_enriques(const Lotus& l, const EnriquesTree& t);
std::string emit_dot_proximity(const Lotus& l, const ProximityGraph& g);

std::string fan_tree_text(const FanTree& t);
std::string ew_tree_text(const EWTree& t);

// One SVG polygon per petal, membranes laid out radially around their gluing
// vertices; marked points as filled circles, arrows and the base as lines.
std::string emit_svg(const Lotus& l);

// Display name of a lotus vertex (label, or membrane-local coordinates).
std::string lotus_vertex_name(const Lotus& l, int vertex);

}  // namespace plcurve

#endif
