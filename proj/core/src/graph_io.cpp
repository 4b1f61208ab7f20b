#include "senet/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace senet {

namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

long parse_vertex(const std::string& tok, long lineno) {
  size_t used = 0;
  long v;
  try {
    v = std::stol(tok, &used);
  } catch (const std::exception&) {
    throw ParseError("expected a vertex id, got '" + tok + "'", lineno);
  }
  if (used != tok.size())
    throw ParseError("expected a vertex id, got '" + tok + "'", lineno);
  if (v < 0) throw ParseError("negative vertex id '" + tok + "'", lineno);
  return v;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  long max_id = -1;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(strip_comment(line));
    std::string ut, vt, wt, extra;
    if (!(ss >> ut)) continue;  // blank
    if (!(ss >> vt)) throw ParseError("missing second endpoint", lineno);
    double w = 1.0;
    if (ss >> wt) {
      try {
        size_t used = 0;
        w = std::stod(wt, &used);
        if (used != wt.size()) throw std::invalid_argument(wt);
      } catch (const std::exception&) {
        throw ParseError("bad weight '" + wt + "'", lineno);
      }
    }
    if (ss >> extra) throw ParseError("trailing token '" + extra + "'", lineno);
    long u = parse_vertex(ut, lineno);
    long v = parse_vertex(vt, lineno);
    if (u == v) throw ParseError("self-loop at vertex " + ut, lineno);
    max_id = std::max({max_id, u, v});
    edges.push_back({static_cast<int>(u), static_cast<int>(v), w});
  }
  try {
    return Graph(static_cast<int>(max_id + 1), std::move(edges));
  } catch (const InputError& e) {
    throw ParseError(e.what(), 0);
  }
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges)
    if (e.u > e.v) std::swap(e.u, e.v);
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  char buf[64];
  for (const Edge& e : edges) {
    if (e.w == 1.0) {
      out << e.u << ' ' << e.v << '\n';
    } else {
      std::snprintf(buf, sizeof buf, "%.17g", e.w);
      out << e.u << ' ' << e.v << ' ' << buf << '\n';
    }
  }
}

void write_edge_list_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  write_edge_list(out, g);
}

Partition read_partition(std::istream& in, int n) {
  std::vector<int> assign(n, -1);
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(strip_comment(line));
    std::string vt, mt, extra;
    if (!(ss >> vt)) continue;
    if (!(ss >> mt)) throw ParseError("missing module id", lineno);
    if (ss >> extra) throw ParseError("trailing token '" + extra + "'", lineno);
    long v = parse_vertex(vt, lineno);
    long m = parse_vertex(mt, lineno);
    if (v >= n)
      throw ParseError("vertex " + vt + " out of range (n=" + std::to_string(n) + ")",
                       lineno);
    if (assign[v] != -1) throw ParseError("vertex " + vt + " assigned twice", lineno);
    assign[v] = static_cast<int>(m);
  }
  for (int v = 0; v < n; ++v)
    if (assign[v] == -1)
      throw ParseError("vertex " + std::to_string(v) + " unassigned", 0);
  return Partition(std::move(assign));
}

Partition read_partition_file(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  return read_partition(in, n);
}

void write_partition(std::ostream& out, const Partition& p) {
  for (int v = 0; v < p.size(); ++v)
    out << v << ' ' << p.module_of(v) << '\n';
}

void write_partition_file(const std::string& path, const Partition& p) {
  std::ofstream out(path);
  write_partition(out, p);
}

}  // namespace senet
