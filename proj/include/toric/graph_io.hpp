#pragma once

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "toric/error.hpp"
#include "toric/graph.hpp"

namespace toric {

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline bool parse_nonnegative(std::string_view s, long& out) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

} // namespace detail

/// Parses an edge list: one "u v" pair per line, '#' starts a comment, and an
/// optional "n=<k>" line fixes the vertex count (the only way to express
/// isolated vertices).
///
/// If every token is a nonnegative integer the vertices are those integers;
/// otherwise tokens are labels, numbered in order of first appearance.
inline Graph parse_edge_list(std::string_view text, int cap = default_vertex_cap) {
  long declared = -1;
  std::vector<std::pair<std::string, std::string>> pairs;
  std::vector<int> line_of;

  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    ++lineno;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;

    if (line.starts_with("n=") || line.starts_with("n =")) {
      std::string_view value = detail::trim(line.substr(line.find('=') + 1));
      if (declared >= 0) throw parse_error("line " + std::to_string(lineno) + ": duplicate n= header");
      if (!pairs.empty()) throw parse_error("line " + std::to_string(lineno) + ": n= header must precede the edges");
      if (!detail::parse_nonnegative(value, declared)) {
        throw parse_error("line " + std::to_string(lineno) + ": bad vertex count '" + std::string(value) + "'");
      }
      continue;
    }

    const auto tokens = detail::split_ws(line);
    if (tokens.size() != 2) {
      throw parse_error("line " + std::to_string(lineno) + ": expected two vertices, got '" + std::string(line) + "'");
    }
    if (tokens[0] == tokens[1]) {
      throw parse_error("line " + std::to_string(lineno) + ": self-loop at '" + std::string(tokens[0]) + "'");
    }
    pairs.emplace_back(std::string(tokens[0]), std::string(tokens[1]));
    line_of.push_back(lineno);
  }

  if (declared > cap) throw cap_exceeded(static_cast<int>(std::min<long>(declared, max_vertex_cap + 1)), cap);

  bool numeric = true;
  for (const auto& [a, b] : pairs) {
    long tmp;
    if (!detail::parse_nonnegative(a, tmp) || !detail::parse_nonnegative(b, tmp)) {
      numeric = false;
      break;
    }
  }

  std::vector<Edge> edges;
  std::vector<std::string> labels;
  long n = 0;
  if (numeric) {
    long max_index = -1;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      long u = 0, v = 0;
      detail::parse_nonnegative(pairs[i].first, u);
      detail::parse_nonnegative(pairs[i].second, v);
      if (u == v) throw parse_error("line " + std::to_string(line_of[i]) + ": self-loop at " + std::to_string(u));
      if (declared >= 0 && std::max(u, v) >= declared) {
        throw parse_error("line " + std::to_string(line_of[i]) + ": vertex " + std::to_string(std::max(u, v)) +
                          " not below declared n=" + std::to_string(declared));
      }
      if (std::max(u, v) >= cap) throw cap_exceeded(static_cast<int>(std::min<long>(std::max(u, v) + 1, max_vertex_cap + 1)), cap);
      max_index = std::max({max_index, u, v});
      edges.push_back({static_cast<int>(u), static_cast<int>(v)});
    }
    n = declared >= 0 ? declared : max_index + 1;
  } else {
    std::map<std::string, int> index;
    auto id = [&](const std::string& label) {
      auto [it, inserted] = index.emplace(label, static_cast<int>(labels.size()));
      if (inserted) {
        labels.push_back(label);
        if (static_cast<int>(labels.size()) > cap) throw cap_exceeded(static_cast<int>(labels.size()), cap);
      }
      return it->second;
    };
    for (const auto& [a, b] : pairs) {
      const int u = id(a);
      const int v = id(b);
      edges.push_back({u, v});
    }
    n = static_cast<long>(labels.size());
    if (declared >= 0) {
      if (declared < n) {
        throw parse_error("declared n=" + std::to_string(declared) + " but " + std::to_string(n) + " labels appear");
      }
      for (long i = n; i < declared; ++i) labels.push_back("#" + std::to_string(i));
      n = declared;
    }
  }

  check_cap(static_cast<int>(n), cap);
  return Graph(static_cast<int>(n), edges, std::move(labels));
}

/// Decodes one graph6 line (upper triangle, column-major, six bits per byte
/// offset by 63).
inline Graph parse_graph6(std::string_view text, int cap = default_vertex_cap) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw parse_error("graph6: empty input");
  for (char c : text) {
    if (static_cast<unsigned char>(c) < 63 || static_cast<unsigned char>(c) > 126) {
      throw parse_error("graph6: byte outside the printable range 63..126");
    }
  }
  auto value = [&](std::size_t i) { return static_cast<unsigned>(static_cast<unsigned char>(text[i]) - 63); };

  unsigned long n = 0;
  std::size_t header = 0;
  if (value(0) < 63) {
    n = value(0);
    header = 1;
  } else if (text.size() >= 4 && value(1) < 63) {
    n = (static_cast<unsigned long>(value(1)) << 12) | (value(2) << 6) | value(3);
    header = 4;
  } else if (text.size() >= 8 && value(1) == 63) {
    n = 0;
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | value(i);
    header = 8;
  } else {
    throw parse_error("graph6: bad length header");
  }
  if (n > static_cast<unsigned long>(cap)) throw cap_exceeded(static_cast<int>(std::min<unsigned long>(n, max_vertex_cap + 1)), cap);

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - header != bytes) {
    throw parse_error("graph6: expected " + std::to_string(bytes) + " data bytes for n=" + std::to_string(n) + ", got " +
                      std::to_string(text.size() - header));
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < static_cast<int>(n); ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const unsigned byte = value(header + k / 6);
      if ((byte >> (5 - k % 6)) & 1u) edges.push_back({i, j});
    }
  }
  return Graph(static_cast<int>(n), edges);
}

inline std::string encode_graph6(const Graph& g) {
  const int n = g.vertex_count();
  std::string out;
  out.push_back(static_cast<char>(63 + n)); // n <= 32 fits the one-byte header
  unsigned acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

/// Parses "name:args" with name in path|cycle|complete|star|multipartite,
/// e.g. "cycle:6" or "multipartite:2,3".
inline GraphFamily parse_family_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw parse_error("family spec '" + std::string(spec) + "' lacks ':'");
  const std::string_view name = spec.substr(0, colon);
  std::string_view args = spec.substr(colon + 1);

  std::vector<int> values;
  while (true) {
    const auto comma = args.find(',');
    std::string_view tok = detail::trim(args.substr(0, comma));
    long v = 0;
    if (!detail::parse_nonnegative(tok, v) || v > 1000000) {
      throw parse_error("family spec '" + std::string(spec) + "': bad integer '" + std::string(tok) + "'");
    }
    values.push_back(static_cast<int>(v));
    if (comma == std::string_view::npos) break;
    args.remove_prefix(comma + 1);
  }

  auto single = [&]() {
    if (values.size() != 1) throw parse_error("family '" + std::string(name) + "' takes one size");
    return values.front();
  };
  if (name == "path") return Path{single()};
  if (name == "cycle") return Cycle{single()};
  if (name == "complete") return Complete{single()};
  if (name == "star") return Star{single()};
  if (name == "multipartite" || name == "bipartite") return CompleteMultipartite{values};
  throw parse_error("unknown family '" + std::string(name) + "'");
}

} // namespace toric
