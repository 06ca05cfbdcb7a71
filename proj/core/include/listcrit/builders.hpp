#pragma once

#include "listcrit/graph.hpp"

namespace listcrit::graphs {

Graph empty(int n);
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph star(int leaves);
Graph complete_bipartite(int a, int b);
/// Hub adjacent to every vertex of a rim cycle C_rim.
Graph wheel(int rim);
/// Join: a ∨ b with every cross pair adjacent.
Graph join(const Graph& a, const Graph& b);
Graph disjoint_union(const Graph& a, const Graph& b);
/// Two triangles sharing one vertex.
Graph bowtie();
/// Triangle with a pendant vertex.
Graph paw();
Graph petersen();
/// Two diamonds sharing an apex, far tips joined; 7 vertices, 11 edges, chi = 4.
Graph moser_spindle();

}  // namespace listcrit::graphs
