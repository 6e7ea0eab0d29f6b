#pragma once

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ohg/core.hpp"

namespace ohg::io {

// Text format (.ohg):
//   # comment
//   vertices <n>
//   edge <name> <+v|-v> ...
// Every vertex token carries an explicit sign.

namespace detail {

inline std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline bool parse_unsigned(std::string_view s, std::uint64_t& out) {
  if (s.empty()) return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && p == s.data() + s.size();
}

[[noreturn]] inline void syntax(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::syntax_error, "line " + std::to_string(line) + ": " + what, std::nullopt, line);
}

}  // namespace detail

/// Parses the text format. Validation errors carry the line of the edge.
inline OrientedHypergraph parse_text(std::string_view text) {
  std::optional<std::size_t> n;
  std::vector<EdgeSpec> specs;
  std::vector<std::size_t> edge_lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto toks = detail::tokens(line);
    if (toks.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (toks[0] == "vertices") {
      std::uint64_t v = 0;
      if (toks.size() != 2 || !detail::parse_unsigned(toks[1], v)) detail::syntax(line_no, "expected 'vertices <n>'");
      if (n) detail::syntax(line_no, "duplicate vertices header");
      n = static_cast<std::size_t>(v);
    } else if (toks[0] == "edge") {
      if (toks.size() < 2) detail::syntax(line_no, "edge needs a name");
      EdgeSpec spec{std::string(toks[1]), {}};
      for (std::size_t t = 2; t < toks.size(); ++t) {
        auto tok = toks[t];
        std::uint64_t v = 0;
        if (tok.size() < 2 || (tok[0] != '+' && tok[0] != '-') || !detail::parse_unsigned(tok.substr(1), v))
          detail::syntax(line_no, "vertex token '" + std::string(tok) + "' must be +<id> or -<id>");
        const auto label = static_cast<std::int64_t>(v);
        for (auto prev : spec.labels)
          if ((prev < 0 ? -prev : prev) == label)
            throw Error(ErrorCode::duplicate_vertex_in_edge,
                        "line " + std::to_string(line_no) + ": vertex " + std::to_string(v) + " repeated in edge " +
                            spec.name,
                        specs.size(), line_no);
        spec.labels.push_back(tok[0] == '-' ? -label : label);
      }
      if (!n) detail::syntax(line_no, "edge before 'vertices' header");
      specs.push_back(std::move(spec));
      edge_lines.push_back(line_no);
    } else {
      detail::syntax(line_no, "unknown directive '" + std::string(toks[0]) + "'");
    }
    if (end == text.size()) break;
  }
  if (!n) detail::syntax(line_no, "missing 'vertices' header");
  try {
    return build(*n, specs);
  } catch (const Error& e) {
    if (e.edge() && *e.edge() < edge_lines.size()) {
      const auto ln = edge_lines[*e.edge()];
      throw Error(e.code(), "line " + std::to_string(ln) + ": " + e.message(), e.edge(), ln);
    }
    throw;
  }
}

/// Canonical text: header, then one line per edge in order with incidences
/// sorted by vertex.
inline std::string serialize_text(const OrientedHypergraph& g) {
  std::ostringstream os;
  os << "vertices " << g.vertex_count() << '\n';
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    os << "edge " << g.structure().edge_name(e);
    auto members = g.structure().edge(e);
    auto signs = g.orientations(e);
    for (std::size_t i = 0; i < members.size(); ++i)
      os << ' ' << (signs[i] == Sign::positive ? '+' : '-') << members[i] + 1;
    os << '\n';
  }
  return os.str();
}

/// JSON mirror: {"n": n, "edges": [{"name": ..., "incidences": [{"v": 1, "sign": 1}]}]}.
inline nlohmann::json to_json(const OrientedHypergraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    nlohmann::json inc = nlohmann::json::array();
    auto members = g.structure().edge(e);
    auto signs = g.orientations(e);
    for (std::size_t i = 0; i < members.size(); ++i) inc.push_back({{"v", members[i] + 1}, {"sign", value(signs[i])}});
    edges.push_back({{"name", g.structure().edge_name(e)}, {"incidences", std::move(inc)}});
  }
  return {{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

inline OrientedHypergraph from_json(const nlohmann::json& j) {
  try {
    const auto n = j.at("n").get<std::size_t>();
    std::vector<EdgeSpec> specs;
    for (const auto& e : j.at("edges")) {
      EdgeSpec spec;
      if (e.contains("name")) spec.name = e["name"].get<std::string>();
      for (const auto& i : e.at("incidences")) {
        const auto v = i.at("v").get<std::int64_t>();
        const auto s = i.at("sign").get<int>();
        if (v <= 0) throw Error(ErrorCode::vertex_out_of_range, "vertex id " + std::to_string(v), specs.size());
        if (s != 1 && s != -1) throw Error(ErrorCode::syntax_error, "sign must be 1 or -1");
        spec.labels.push_back(s < 0 ? -v : v);
      }
      specs.push_back(std::move(spec));
    }
    return build(n, specs);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::syntax_error, std::string("JSON instance: ") + ex.what());
  }
}

inline std::string serialize_json(const OrientedHypergraph& g) { return to_json(g).dump(2) + "\n"; }

/// Dispatches on content: a leading '{' selects the JSON mirror.
inline OrientedHypergraph parse(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
      throw Error(ErrorCode::syntax_error, std::string("JSON instance: ") + ex.what());
    }
    return from_json(j);
  }
  return parse_text(text);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::syntax_error, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline OrientedHypergraph parse_file(const std::string& path) { return parse(read_file(path)); }

}  // namespace ohg::io
