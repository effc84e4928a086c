#include "uniformize/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "uniformize/error.hpp"
#include "uniformize/format.hpp"

namespace uniformize {

namespace {

void write_header(std::ostream& out, const WeightedMetricGraph& g, const GraphMetadata& meta) {
  out << "nodes " << g.size() << " base " << g.base() << '\n';
  if (!g.frontier().empty()) {
    out << "frontier";
    for (NodeId f : g.frontier()) out << ' ' << f;
    out << '\n';
  }
  if (!meta.generator.empty()) out << "# meta generator=" << meta.generator << '\n';
  for (const auto& [key, value] : meta.params) out << "# meta " << key << '=' << value << '\n';
}

[[noreturn]] void bad_line(std::size_t number, const std::string& what) {
  throw Error("graph file line " + std::to_string(number) + ": " + what);
}

template <class Int>
Int expect_int(std::istringstream& in, std::size_t number, const char* what) {
  std::string token;
  if (!(in >> token)) bad_line(number, std::string("missing ") + what);
  auto value = parse_int<Int>(token);
  if (!value) bad_line(number, std::string("bad ") + what + " '" + token + "'");
  return *value;
}

}  // namespace

void write_graph(std::ostream& out, const WeightedMetricGraph& g) {
  write_header(out, g, g.metadata());
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << ' ' << format_double(e.length) << '\n';
}

WeightedMetricGraph read_graph(std::istream& in) {
  std::string line;
  std::size_t number = 0;
  bool have_header = false;
  std::size_t nodes = 0;
  NodeId base = 0;
  std::vector<NodeId> frontier;
  std::vector<Edge> edges;
  GraphMetadata meta;

  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind("# meta ", 0) == 0) {
      const auto body = line.substr(7);
      const auto eq = body.find('=');
      if (eq == std::string::npos) bad_line(number, "metadata needs key=value");
      const auto key = body.substr(0, eq);
      const auto value = body.substr(eq + 1);
      if (key == "generator") {
        meta.generator = value;
      } else {
        meta.params.emplace_back(key, value);
      }
      continue;
    }
    if (line.empty() || line[0] == '#') continue;
    if (line == "density") break;

    std::istringstream fields(line);
    if (!have_header) {
      std::string word;
      fields >> word;
      if (word != "nodes") bad_line(number, "expected 'nodes N base P'");
      nodes = expect_int<std::size_t>(fields, number, "node count");
      fields >> word;
      if (word != "base") bad_line(number, "expected 'nodes N base P'");
      base = expect_int<NodeId>(fields, number, "base node");
      have_header = true;
      continue;
    }
    if (line.rfind("frontier", 0) == 0) {
      std::string word;
      fields >> word;
      while (fields >> std::ws && !fields.eof()) frontier.push_back(expect_int<NodeId>(fields, number, "frontier node"));
      continue;
    }
    Edge e{};
    e.u = expect_int<NodeId>(fields, number, "edge endpoint");
    e.v = expect_int<NodeId>(fields, number, "edge endpoint");
    std::string token;
    if (!(fields >> token)) bad_line(number, "missing edge length");
    auto length = parse_double(token);
    if (!length) bad_line(number, "bad edge length '" + token + "'");
    e.length = *length;
    if (fields >> token) bad_line(number, "trailing text");
    edges.push_back(e);
  }
  if (!have_header) throw Error("graph file has no 'nodes N base P' header");
  return WeightedMetricGraph(nodes, std::move(edges), base, std::move(frontier), std::move(meta));
}

WeightedMetricGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open graph file '" + path + "'");
  return read_graph(in);
}

void write_deformed(std::ostream& out, const DeformedSpace& ds) {
  const auto& g = ds.graph();
  GraphMetadata meta = g.metadata();
  meta.params.emplace_back("epsilon", format_double(ds.epsilon()));
  meta.params.emplace_back("quadrature", to_string(ds.params().quadrature));
  write_header(out, g, meta);
  const auto lengths = ds.deformed_edge_lengths();
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const auto& e = g.edges()[i];
    out << e.u << ' ' << e.v << ' ' << format_double(lengths[i]) << '\n';
  }
  out << "density\n";
  for (NodeId x = 0; x < g.size(); ++x) out << x << ' ' << format_double(ds.density(x)) << '\n';
}

}  // namespace uniformize
