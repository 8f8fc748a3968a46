#include "cartfact/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "cartfact/error.hpp"

namespace cartfact {

namespace {

class LineParser {
 public:
  LineParser(std::string_view line, std::size_t line_no) : rest_(line), line_no_(line_no) {}

  [[noreturn]] void fail(ErrorKind kind, const std::string& msg) const {
    throw Error(kind, "line " + std::to_string(line_no_) + ": " + msg);
  }

  std::optional<std::string_view> token() {
    const auto begin = rest_.find_first_not_of(" \t\r");
    if (begin == std::string_view::npos) {
      rest_ = {};
      return std::nullopt;
    }
    rest_.remove_prefix(begin);
    const auto end = std::min(rest_.find_first_of(" \t\r"), rest_.size());
    std::string_view tok = rest_.substr(0, end);
    rest_.remove_prefix(end);
    return tok;
  }

  std::uint64_t number() {
    auto tok = token();
    if (!tok) fail(ErrorKind::kParse, "expected a number");
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok->data(), tok->data() + tok->size(), value);
    if (ec != std::errc() || ptr != tok->data() + tok->size()) {
      fail(ErrorKind::kParse, "malformed number '" + std::string(*tok) + "'");
    }
    return value;
  }

  VertexId vertex(std::uint64_t n) {
    const std::uint64_t v = number();
    if (v >= n) fail(ErrorKind::kOutOfRange, "vertex id " + std::to_string(v) + " out of range (n = " + std::to_string(n) + ")");
    return static_cast<VertexId>(v);
  }

  bool at_end() { return !token().has_value(); }

 private:
  std::string_view rest_;
  std::size_t line_no_;
};

}  // namespace

GraphDocument parse_graph_document(std::string_view text) {
  std::optional<std::uint64_t> n;
  std::vector<Arc> arcs;
  std::vector<VertexId> loops;
  std::unordered_set<std::uint64_t> seen_arcs;
  std::vector<std::uint8_t> seen_loops;
  std::vector<CoordVector> coords;
  std::vector<std::uint8_t> seen_coords;
  std::vector<ColoredEdge> colors;

  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;

    LineParser p(line, line_no);
    auto kind = p.token();
    if (!kind || kind->front() == '#') continue;
    if (*kind == "n") {
      if (n) p.fail(ErrorKind::kParse, "duplicate 'n' line");
      n = p.number();
      if (*n >= kUnreachable) p.fail(ErrorKind::kOutOfRange, "vertex count too large");
      seen_loops.assign(*n, 0);
    } else if (!n) {
      p.fail(ErrorKind::kParse, "'n' line must come first");
    } else if (*kind == "a") {
      const VertexId u = p.vertex(*n);
      const VertexId v = p.vertex(*n);
      if (u == v) p.fail(ErrorKind::kParse, "arc endpoints must differ; use 'l' for loops");
      if (!seen_arcs.insert((std::uint64_t{u} << 32) | v).second) {
        p.fail(ErrorKind::kDuplicate, "duplicate arc " + std::to_string(u) + " " + std::to_string(v));
      }
      arcs.emplace_back(u, v);
    } else if (*kind == "l") {
      const VertexId v = p.vertex(*n);
      if (seen_loops[v]++) p.fail(ErrorKind::kDuplicate, "duplicate loop at " + std::to_string(v));
      loops.push_back(v);
    } else if (*kind == "c") {
      const VertexId v = p.vertex(*n);
      if (coords.empty()) {
        coords.resize(*n);
        seen_coords.assign(*n, 0);
      }
      if (seen_coords[v]++) p.fail(ErrorKind::kDuplicate, "duplicate coordinates for " + std::to_string(v));
      CoordVector c;
      while (auto tok = p.token()) {
        std::uint32_t value = 0;
        auto [ptr, ec] = std::from_chars(tok->data(), tok->data() + tok->size(), value);
        if (ec != std::errc() || ptr != tok->data() + tok->size()) p.fail(ErrorKind::kParse, "malformed coordinate");
        c.push_back(value);
      }
      coords[v] = std::move(c);
      continue;
    } else if (*kind == "e") {
      const VertexId u = p.vertex(*n);
      const VertexId v = p.vertex(*n);
      const auto color = p.number();
      colors.push_back(ColoredEdge{u, v, static_cast<std::uint32_t>(color)});
    } else {
      p.fail(ErrorKind::kParse, "unknown line type '" + std::string(*kind) + "'");
    }
    if (!p.at_end()) p.fail(ErrorKind::kParse, "trailing tokens");
  }
  if (!n) throw Error(ErrorKind::kParse, "missing 'n' line");
  if (!coords.empty()) {
    for (std::size_t v = 0; v < coords.size(); ++v) {
      if (!seen_coords[v]) throw Error(ErrorKind::kParse, "coordinate table misses vertex " + std::to_string(v));
      if (coords[v].size() != coords[0].size()) throw Error(ErrorKind::kParse, "coordinate vectors differ in length");
    }
  }
  return GraphDocument{DiGraph(*n, std::move(arcs), std::move(loops)), std::move(coords), std::move(colors)};
}

DiGraph parse_graph(std::string_view text) { return parse_graph_document(text).graph; }

std::string serialize_graph(const DiGraph& g) {
  std::ostringstream out;
  out << "n " << g.num_vertices() << '\n';
  for (const auto& [u, v] : g.arcs()) out << "a " << u << ' ' << v << '\n';
  for (VertexId v : g.loops()) out << "l " << v << '\n';
  return out.str();
}

std::string serialize_coordinates(const std::vector<CoordVector>& table) {
  std::ostringstream out;
  for (std::size_t v = 0; v < table.size(); ++v) {
    out << "c " << v;
    for (auto c : table[v]) out << ' ' << c;
    out << '\n';
  }
  return out.str();
}

std::string serialize_colors(const std::vector<ColoredEdge>& colors) {
  std::ostringstream out;
  for (const ColoredEdge& e : colors) out << "e " << e.u << ' ' << e.v << ' ' << e.color << '\n';
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kInvalidArgument, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kInvalidArgument, "cannot write " + path.string());
  out << content;
}

}  // namespace cartfact
