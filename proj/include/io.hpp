#pragma once

#include <string>

#include "egc.hpp"
#include "graph.hpp"

namespace tf {

// JSON object {"name","n","edges"}
std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

// JSON object {"kappa","colors"}; colors parallel to the sorted edge list
std::string coloring_to_json(const EdgeColoring& c, int kappa);
EdgeColoring coloring_from_json(const std::string& text, int* kappa = nullptr);

// JSON object {"status","coloring","certificate","nodes","millis"}
std::string verdict_to_json(const EgcVerdict& v, int kappa);

// Graphviz output; colors 1..5 map to red/blue/green/goldenrod/black.
// Pass an empty coloring for an uncolored graph.
std::string graph_to_dot(const Graph& g, const EdgeColoring& c);

std::string read_file(const std::string& path);   // "-" reads stdin
void write_file(const std::string& path, const std::string& text);  // "-" writes stdout

}  // namespace tf
