#ifndef SILVERBIG_IO_HPP
#define SILVERBIG_IO_HPP

#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "certificate.hpp"
#include "coloring.hpp"
#include "common.hpp"
#include "design.hpp"
#include "graph.hpp"

namespace silverbig::io {

namespace detail {

inline std::string strip_comment(std::string line) {
  if (auto pos = line.find('#'); pos != std::string::npos)
    line.erase(pos);
  while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
    line.pop_back();
  return line;
}

inline bool blank(const std::string &line) {
  return line.find_first_not_of(" \t") == std::string::npos;
}

inline std::vector<int> parse_ints(const std::string &text, int line_no) {
  std::istringstream ss(text);
  std::vector<int> out;
  std::string tok;
  while (ss >> tok) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(tok, &used);
    } catch (const std::exception &) {
      used = 0;
    }
    if (used != tok.size())
      throw ParseError("line " + std::to_string(line_no) + ": expected an integer, got '" + tok +
                       "'");
    out.push_back(value);
  }
  return out;
}

inline int parse_key(const std::string &tok, const std::string &key, int line_no) {
  if (tok.rfind(key + "=", 0) != 0)
    throw ParseError("line " + std::to_string(line_no) + ": expected " + key + "=<int>");
  auto v = parse_ints(tok.substr(key.size() + 1), line_no);
  if (v.size() != 1)
    throw ParseError("line " + std::to_string(line_no) + ": bad value for " + key);
  return v[0];
}

} // namespace detail

// Design text format:
//   v=<int> k=<int> lambda=<int>
//   one block per line, space-separated 0-based points
//   "%class <name>" starts a parallel class holding the blocks that follow
//   '#' starts a comment
// The writer emits canonical order (classes in resolution order, blocks
// ascending within each class). The reader accepts any order and
// canonicalizes.
inline void write_design(std::ostream &os, const Design &d) {
  os << "v=" << d.v << " k=" << d.k << " lambda=" << d.lambda << "\n";
  auto put = [&](const Block &blk) {
    for (std::size_t i = 0; i < blk.size(); ++i)
      os << (i ? " " : "") << blk[i];
    os << "\n";
  };
  if (d.resolution) {
    for (std::size_t c = 0; c < d.resolution->classes.size(); ++c) {
      os << "%class " << c << "\n";
      for (int bi : d.resolution->classes[c])
        put(d.blocks.at(bi));
    }
  } else {
    for (const auto &blk : d.blocks)
      put(blk);
  }
}

inline Design read_design(std::istream &is) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  int v = 0, k = 0, lambda = 0;
  std::vector<Block> blocks;
  std::vector<std::vector<int>> classes;
  bool any_class = false, unclassed = false;
  while (std::getline(is, line)) {
    ++line_no;
    line = detail::strip_comment(line);
    if (detail::blank(line))
      continue;
    if (!have_header) {
      std::istringstream ss(line);
      std::string a, b, c, extra;
      ss >> a >> b >> c;
      if (ss >> extra)
        throw ParseError("line " + std::to_string(line_no) + ": trailing text in header");
      v = detail::parse_key(a, "v", line_no);
      k = detail::parse_key(b, "k", line_no);
      lambda = detail::parse_key(c, "lambda", line_no);
      have_header = true;
      continue;
    }
    auto first = line.find_first_not_of(" \t");
    if (line[first] == '%') {
      std::istringstream ss(line.substr(first));
      std::string tag;
      ss >> tag;
      if (tag != "%class")
        throw ParseError("line " + std::to_string(line_no) + ": unknown directive " + tag);
      classes.emplace_back();
      any_class = true;
      continue;
    }
    Block blk = detail::parse_ints(line, line_no);
    if (static_cast<int>(blk.size()) != k)
      throw ParseError("line " + std::to_string(line_no) + ": block has " +
                       std::to_string(blk.size()) + " points, expected " + std::to_string(k));
    for (int p : blk)
      if (p < 0 || p >= v)
        throw ParseError("line " + std::to_string(line_no) + ": point " + std::to_string(p) +
                         " out of range");
    std::sort(blk.begin(), blk.end());
    if (std::adjacent_find(blk.begin(), blk.end()) != blk.end())
      throw ParseError("line " + std::to_string(line_no) + ": repeated point in block");
    if (any_class)
      classes.back().push_back(static_cast<int>(blocks.size()));
    else
      unclassed = true;
    blocks.push_back(std::move(blk));
  }
  if (!have_header)
    throw ParseError("missing header line 'v=<int> k=<int> lambda=<int>'");
  if (any_class && unclassed)
    throw ParseError("blocks before the first %class line in a resolved design");
  try {
    if (any_class)
      return make_design(v, k, lambda, std::move(blocks), std::move(classes));
    return make_design(v, k, lambda, std::move(blocks));
  } catch (const ParameterError &e) {
    throw ParseError(e.what());
  }
}

// Graph text format: "p <n> <m>" then m lines "e <u> <v>" (u < v, 0-based).
inline void write_graph(std::ostream &os, const Graph &g) {
  os << "p " << g.order() << " " << g.edge_count() << "\n";
  for (auto [u, v] : g.edges())
    os << "e " << u << " " << v << "\n";
}

inline Graph read_graph(std::istream &is) {
  std::string line;
  int line_no = 0;
  Graph g;
  bool have_header = false;
  long long declared = 0, seen = 0;
  while (std::getline(is, line)) {
    ++line_no;
    line = detail::strip_comment(line);
    if (detail::blank(line))
      continue;
    std::istringstream ss(line);
    std::string tag;
    ss >> tag;
    if (tag == "c")
      continue;
    std::string rest;
    std::getline(ss, rest);
    auto nums = detail::parse_ints(rest, line_no);
    if (tag == "p") {
      if (have_header || nums.size() != 2 || nums[0] < 0 || nums[1] < 0)
        throw ParseError("line " + std::to_string(line_no) + ": bad problem line");
      g = Graph(nums[0]);
      declared = nums[1];
      have_header = true;
    } else if (tag == "e") {
      if (!have_header)
        throw ParseError("line " + std::to_string(line_no) + ": edge before problem line");
      if (nums.size() != 2)
        throw ParseError("line " + std::to_string(line_no) + ": edge needs two endpoints");
      int u = nums[0], v = nums[1];
      if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v)
        throw ParseError("line " + std::to_string(line_no) + ": bad edge");
      if (g.adjacent(u, v))
        throw ParseError("line " + std::to_string(line_no) + ": duplicate edge");
      g.add_edge(u, v);
      ++seen;
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unknown line type '" + tag + "'");
    }
  }
  if (!have_header)
    throw ParseError("missing problem line 'p <n> <m>'");
  if (seen != declared)
    throw ParseError("problem line declares " + std::to_string(declared) + " edges, found " +
                     std::to_string(seen));
  return g;
}

// Coloring text format: "c <num_colors>" then one "<vertex> <color>" line
// per vertex.
inline void write_coloring(std::ostream &os, const Coloring &c) {
  os << "c " << c.num_colors << "\n";
  for (std::size_t u = 0; u < c.colors.size(); ++u)
    os << u << " " << c.colors[u] << "\n";
}

inline Coloring read_coloring(std::istream &is) {
  std::string line;
  int line_no = 0;
  Coloring c;
  bool have_header = false;
  std::vector<std::pair<int, int>> entries;
  while (std::getline(is, line)) {
    ++line_no;
    line = detail::strip_comment(line);
    if (detail::blank(line))
      continue;
    if (!have_header) {
      std::istringstream ss(line);
      std::string tag, rest;
      ss >> tag;
      std::getline(ss, rest);
      auto nums = detail::parse_ints(rest, line_no);
      if (tag != "c" || nums.size() != 1 || nums[0] < 1)
        throw ParseError("line " + std::to_string(line_no) + ": expected 'c <num_colors>'");
      c.num_colors = nums[0];
      have_header = true;
      continue;
    }
    auto nums = detail::parse_ints(line, line_no);
    if (nums.size() != 2 || nums[0] < 0)
      throw ParseError("line " + std::to_string(line_no) + ": expected '<vertex> <color>'");
    if (nums[1] < 0 || nums[1] >= c.num_colors)
      throw ParseError("line " + std::to_string(line_no) + ": color out of range");
    entries.emplace_back(nums[0], nums[1]);
  }
  if (!have_header)
    throw ParseError("missing header 'c <num_colors>'");
  c.colors.assign(entries.size(), -1);
  for (auto [u, col] : entries) {
    if (u >= static_cast<int>(entries.size()) || c.colors[u] != -1)
      throw ParseError("vertices must be listed exactly once, 0..n-1");
    c.colors[u] = col;
  }
  return c;
}

// Alpha-set format: one line of space-separated vertex ids.
inline void write_vertex_set(std::ostream &os, const std::vector<int> &set) {
  for (std::size_t i = 0; i < set.size(); ++i)
    os << (i ? " " : "") << set[i];
  os << "\n";
}

inline std::vector<int> read_vertex_set(std::istream &is) {
  std::string line, text;
  int line_no = 0, content_lines = 0;
  while (std::getline(is, line)) {
    ++line_no;
    line = detail::strip_comment(line);
    if (detail::blank(line))
      continue;
    if (++content_lines > 1)
      throw ParseError("line " + std::to_string(line_no) + ": vertex set must be a single line");
    text = line;
  }
  auto set = detail::parse_ints(text, line_no);
  std::sort(set.begin(), set.end());
  if (std::adjacent_find(set.begin(), set.end()) != set.end())
    throw ParseError("repeated vertex in set");
  for (int x : set)
    if (x < 0)
      throw ParseError("negative vertex id");
  return set;
}

// Certificate block:
//   certificate triple
//   b <b1> <b2> <b3>
//   n12 <ids>   (N(b1)&N(b2))
//   n23 <ids>
//   n13 <ids>
//   total <int>
//   colors <r+1>
inline void write_certificate(std::ostream &os, const TripleCertificate &c) {
  static const char *names[3] = {"n12", "n23", "n13"};
  os << "certificate triple\n";
  os << "b " << c.b1 << " " << c.b2 << " " << c.b3 << "\n";
  for (int i = 0; i < 3; ++i) {
    os << names[i];
    for (int u : c.pairwise_common[i])
      os << " " << u;
    os << "\n";
  }
  os << "total " << c.total << "\n";
  os << "colors " << c.num_colors << "\n";
}

inline TripleCertificate read_certificate(std::istream &is) {
  TripleCertificate c;
  std::string line;
  int line_no = 0;
  unsigned seen = 0;
  while (std::getline(is, line)) {
    ++line_no;
    line = detail::strip_comment(line);
    if (detail::blank(line))
      continue;
    std::istringstream ss(line);
    std::string tag, rest;
    ss >> tag;
    std::getline(ss, rest);
    if (tag == "certificate") {
      seen |= 1;
      continue;
    }
    auto nums = detail::parse_ints(rest, line_no);
    if (tag == "b" && nums.size() == 3) {
      c.b1 = nums[0];
      c.b2 = nums[1];
      c.b3 = nums[2];
      seen |= 2;
    } else if (tag == "n12") {
      c.pairwise_common[0] = nums;
      seen |= 4;
    } else if (tag == "n23") {
      c.pairwise_common[1] = nums;
      seen |= 8;
    } else if (tag == "n13") {
      c.pairwise_common[2] = nums;
      seen |= 16;
    } else if (tag == "total" && nums.size() == 1) {
      c.total = nums[0];
      seen |= 32;
    } else if (tag == "colors" && nums.size() == 1) {
      c.num_colors = nums[0];
      seen |= 64;
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unexpected '" + tag + "'");
    }
  }
  if (seen != 127)
    throw ParseError("incomplete certificate");
  return c;
}

// Whole-file helpers. Writers go through a temporary file and a rename so a
// reader never sees a half-written file.
template <typename F> void write_file(const std::filesystem::path &path, F &&writer) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream os(tmp);
    if (!os)
      throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    writer(os);
    os.flush();
    if (!os)
      throw std::runtime_error("write to " + tmp.string() + " failed");
  }
  std::filesystem::rename(tmp, path);
}

template <typename F> auto read_file(const std::filesystem::path &path, F &&reader) {
  std::ifstream is(path);
  if (!is)
    throw ParseError("cannot open " + path.string());
  try {
    return reader(is);
  } catch (const ParseError &e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

inline Design load_design(const std::filesystem::path &p) { return read_file(p, read_design); }
inline Graph load_graph(const std::filesystem::path &p) { return read_file(p, read_graph); }
inline Coloring load_coloring(const std::filesystem::path &p) {
  return read_file(p, read_coloring);
}
inline std::vector<int> load_vertex_set(const std::filesystem::path &p) {
  return read_file(p, read_vertex_set);
}
inline TripleCertificate load_certificate(const std::filesystem::path &p) {
  return read_file(p, read_certificate);
}

inline void save_design(const std::filesystem::path &p, const Design &d) {
  write_file(p, [&](std::ostream &os) { write_design(os, d); });
}
inline void save_graph(const std::filesystem::path &p, const Graph &g) {
  write_file(p, [&](std::ostream &os) { write_graph(os, g); });
}
inline void save_coloring(const std::filesystem::path &p, const Coloring &c) {
  write_file(p, [&](std::ostream &os) { write_coloring(os, c); });
}
inline void save_vertex_set(const std::filesystem::path &p, const std::vector<int> &s) {
  write_file(p, [&](std::ostream &os) { write_vertex_set(os, s); });
}
inline void save_certificate(const std::filesystem::path &p, const TripleCertificate &c) {
  write_file(p, [&](std::ostream &os) { write_certificate(os, c); });
}

} // namespace silverbig::io

#endif
