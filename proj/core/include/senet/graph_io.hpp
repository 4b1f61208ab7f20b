#ifndef SENET_GRAPH_IO_HPP
#define SENET_GRAPH_IO_HPP

#include <iosfwd>
#include <string>

#include "senet/graph.hpp"
#include "senet/partition.hpp"

namespace senet {

// Edge-list text format: one edge per line, `u v [w]`, whitespace-separated,
// `#` starts a comment, blank lines ignored. Vertex ids are non-negative
// integers; default weight 1.0. Vertex count is 1 + max id seen.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

// Partition text format: lines `v module_id`.
Partition read_partition(std::istream& in, int n);
Partition read_partition_file(const std::string& path, int n);
void write_partition(std::ostream& out, const Partition& p);
void write_partition_file(const std::string& path, const Partition& p);

}  // namespace senet

#endif
