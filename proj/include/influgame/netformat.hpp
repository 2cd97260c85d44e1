#ifndef INFLUGAME_NETFORMAT_HPP
#define INFLUGAME_NETFORMAT_HPP

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "influgame/game.hpp"
#include "influgame/graph.hpp"

namespace influgame {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error(what + " at line " + std::to_string(line)), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parsed network file: line-oriented directives, '#' starts a comment.
///
///   nodes <n>
///   label <id> <string>
///   threshold <id> <int|inf>     (default 1)
///   edge <src> <dst> <weight>    (directed)
///   uedge <a> <b> <weight>       (expands to both arcs)
///   quota <q>                    (optional)
struct NetworkFile {
  int n = 0;
  std::vector<std::string> labels;
  std::vector<Threshold> thresholds;
  std::vector<Arc> arcs;
  std::optional<int> quota;
};

namespace detail {

inline bool parse_int(const std::string& tok, std::int64_t& out) {
  if (tok.empty()) return false;
  std::size_t pos = 0;
  try {
    out = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    return false;
  }
  return pos == tok.size();
}

}  // namespace detail

inline NetworkFile parse_network(std::string_view text) {
  NetworkFile file;
  bool have_nodes = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  auto need_node = [&](std::int64_t id, int line) {
    if (!have_nodes) throw ParseError("node reference before 'nodes' directive", line);
    if (id < 0 || id >= file.n) throw ParseError("node id out of range", line);
    return static_cast<int>(id);
  };
  auto add_arc = [&](int src, int dst, std::int64_t w, int line) {
    if (src == dst) throw ParseError("self-loop", line);
    if (w < 1) throw ParseError("weight must be >= 1", line);
    for (const Arc& a : file.arcs)
      if (a.src == src && a.dst == dst) throw ParseError("duplicate arc", line);
    file.arcs.push_back({src, dst, w});
  };
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream line(raw);
    std::string directive;
    if (!(line >> directive)) continue;
    if (directive == "nodes") {
      std::string tok;
      std::int64_t n = 0;
      if (have_nodes) throw ParseError("repeated 'nodes' directive", lineno);
      if (!(line >> tok) || !detail::parse_int(tok, n) || n < 0 || n > 1'000'000)
        throw ParseError("bad node count", lineno);
      file.n = static_cast<int>(n);
      file.labels.resize(file.n);
      for (int i = 0; i < file.n; ++i) file.labels[i] = std::to_string(i);
      file.thresholds.assign(file.n, Threshold::finite(1));
      have_nodes = true;
    } else if (directive == "label") {
      std::string tok;
      std::int64_t id = 0;
      if (!(line >> tok) || !detail::parse_int(tok, id))
        throw ParseError("bad label directive", lineno);
      const int i = need_node(id, lineno);
      std::string rest;
      std::getline(line, rest);
      const auto start = rest.find_first_not_of(" \t");
      const auto stop = rest.find_last_not_of(" \t\r");
      if (start == std::string::npos) throw ParseError("empty label", lineno);
      file.labels[i] = rest.substr(start, stop - start + 1);
    } else if (directive == "threshold") {
      std::string tok, val;
      std::int64_t id = 0, v = 0;
      if (!(line >> tok >> val) || !detail::parse_int(tok, id))
        throw ParseError("bad threshold directive", lineno);
      const int i = need_node(id, lineno);
      if (val == "inf") {
        file.thresholds[i] = Threshold::unconvincible();
      } else if (detail::parse_int(val, v) && v >= 1) {
        file.thresholds[i] = Threshold::finite(v);
      } else {
        throw ParseError("threshold must be a positive integer or 'inf'", lineno);
      }
    } else if (directive == "edge" || directive == "uedge") {
      std::string ta, tb, tw;
      std::int64_t a = 0, b = 0, w = 0;
      if (!(line >> ta >> tb >> tw) || !detail::parse_int(ta, a) ||
          !detail::parse_int(tb, b) || !detail::parse_int(tw, w))
        throw ParseError("bad edge directive", lineno);
      const int src = need_node(a, lineno);
      const int dst = need_node(b, lineno);
      add_arc(src, dst, w, lineno);
      if (directive == "uedge") add_arc(dst, src, w, lineno);
    } else if (directive == "quota") {
      std::string tok;
      std::int64_t q = 0;
      if (!(line >> tok) || !detail::parse_int(tok, q) || q < 0)
        throw ParseError("bad quota directive", lineno);
      if (!have_nodes) throw ParseError("quota before 'nodes' directive", lineno);
      if (q > file.n + 1) throw ParseError("quota exceeds n+1", lineno);
      file.quota = static_cast<int>(q);
    } else {
      throw ParseError("unknown directive '" + directive + "'", lineno);
    }
    std::string trailing;
    if (line >> trailing && directive != "label")
      throw ParseError("trailing tokens", lineno);
  }
  return file;
}

/// Canonical emitter; emit(parse(t)) parses back to an identical structure.
inline std::string emit_network(const NetworkFile& file) {
  std::ostringstream out;
  out << "nodes " << file.n << "\n";
  for (int i = 0; i < file.n; ++i) out << "label " << i << " " << file.labels[i] << "\n";
  for (int i = 0; i < file.n; ++i) {
    out << "threshold " << i << " ";
    if (file.thresholds[i].is_finite())
      out << file.thresholds[i].value();
    else
      out << "inf";
    out << "\n";
  }
  std::vector<Arc> arcs = file.arcs;
  std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
    return std::pair(a.src, a.dst) < std::pair(b.src, b.dst);
  });
  for (const Arc& a : arcs)
    out << "edge " << a.src << " " << a.dst << " " << a.weight << "\n";
  if (file.quota) out << "quota " << *file.quota << "\n";
  return out.str();
}

inline InfluenceGraph to_graph(const NetworkFile& file) {
  return InfluenceGraph(file.n, file.arcs, file.thresholds, file.labels);
}

inline NetworkFile load_network_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open network file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_network(buf.str());
}

}  // namespace influgame

#endif  // INFLUGAME_NETFORMAT_HPP
