#include "lec/io.hpp"

#include <fstream>
#include <sstream>

namespace lec {

GraphFile parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  std::optional<MultiGraph> g;
  std::optional<CostVector> costs;
  int declared_m = 0, seen_m = 0;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;  // blank line
    if (tag == "c") continue;
    if (tag == "p") {
      if (g) throw parse_error(line_no, "duplicate problem line");
      std::string kind;
      int n, m, dir;
      if (!(ls >> kind >> n >> m >> dir) || kind != "graph" || n < 0 ||
          m < 0 || (dir != 0 && dir != 1))
        throw parse_error(line_no, "expected 'p graph <n> <m> <0|1>'");
      g.emplace(n, dir == 1);
      declared_m = m;
      continue;
    }
    if (tag == "e") {
      if (!g) throw parse_error(line_no, "edge before problem line");
      int u, v;
      if (!(ls >> u >> v)) throw parse_error(line_no, "expected 'e <u> <v> [cost]'");
      std::string cost_tok;
      bool has_cost = (bool)(ls >> cost_tok);
      std::string extra;
      if (ls >> extra) throw parse_error(line_no, "trailing tokens");
      try {
        g->add_edge(u, v);
      } catch (const std::exception& ex) {
        throw parse_error(line_no, ex.what());
      }
      ++seen_m;
      if (has_cost) {
        if (!costs) {
          if (seen_m > 1)
            throw parse_error(line_no, "cost present on some edges only");
          costs.emplace();
        }
        try {
          costs->push_back(Rat::parse(cost_tok));
        } catch (const std::exception& ex) {
          throw parse_error(line_no, ex.what());
        }
        if (costs->back() < Rat(0))
          throw parse_error(line_no, "negative cost");
      } else if (costs) {
        throw parse_error(line_no, "cost present on some edges only");
      }
      continue;
    }
    throw parse_error(line_no, "unknown line tag '" + tag + "'");
  }
  if (!g) throw parse_error(line_no, "missing problem line");
  if (seen_m != declared_m)
    throw parse_error(line_no, "edge count does not match problem line");
  return {*g, costs};
}

std::string serialize_graph(const GraphFile& f) {
  std::ostringstream out;
  out << "p graph " << f.g.node_count() << " " << f.g.edge_count() << " "
      << (f.g.directed() ? 1 : 0) << "\n";
  for (EdgeId e = 0; e < f.g.edge_count(); ++e) {
    out << "e " << f.g.edge(e).tail << " " << f.g.edge(e).head;
    if (f.costs) out << " " << (*f.costs)[e].str();
    out << "\n";
  }
  return out.str();
}

GraphFile load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

void save_graph(const std::string& path, const GraphFile& f) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << serialize_graph(f);
}

std::string instance_digest(const GraphFile& f) {
  std::string s = serialize_graph(f);
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
  return std::string(buf);
}

}  // namespace lec
