#include "listcrit/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace listcrit {

namespace {

// Yields (line_number, content) for non-comment, non-blank lines.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}
  bool next(int& line_no, std::string& content) {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++line_;
      size_t i = raw.find_first_not_of(" \t\r");
      if (i == std::string::npos || raw[i] == '#') continue;
      line_no = line_;
      content = raw;
      return true;
    }
    return false;
  }
  int line() const { return line_; }

 private:
  std::istream& in_;
  int line_ = 0;
};

bool parse_two_ints(const std::string& s, long long& a, long long& b) {
  std::istringstream is(s);
  if (!(is >> a >> b)) return false;
  std::string rest;
  if (is >> rest) return false;
  return true;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  LineReader reader(in);
  int line_no;
  std::string content;
  if (!reader.next(line_no, content)) throw ParseError(reader.line() + 1, "missing header line `n m`");
  long long n, m;
  if (!parse_two_ints(content, n, m) || n < 0 || m < 0)
    throw ParseError(line_no, "expected header `n m` with n, m >= 0");
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<long long, long long>> seen;
  for (long long i = 0; i < m; ++i) {
    if (!reader.next(line_no, content))
      throw ParseError(reader.line() + 1, "expected " + std::to_string(m) + " edge lines, got " +
                                              std::to_string(i));
    long long u, v;
    if (!parse_two_ints(content, u, v)) throw ParseError(line_no, "expected edge line `u v`");
    if (u == v) throw ParseError(line_no, "loop " + std::to_string(u) + " " + std::to_string(v));
    if (u < 0 || v >= n || u >= v)
      throw ParseError(line_no, "edge endpoints must satisfy 0 <= u < v < n");
    if (!seen.insert({u, v}).second)
      throw ParseError(line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  if (reader.next(line_no, content)) throw ParseError(line_no, "trailing data after last edge");
  return Graph(static_cast<int>(n), std::move(edges));
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << " " << g.size() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

std::vector<int> read_list_sizes(std::istream& in, int n) {
  LineReader reader(in);
  std::vector<int> f(n, -1);
  int line_no;
  std::string content;
  while (reader.next(line_no, content)) {
    long long v, fv;
    if (!parse_two_ints(content, v, fv)) throw ParseError(line_no, "expected `v f(v)`");
    if (v < 0 || v >= n) throw ParseError(line_no, "vertex out of range");
    if (fv < 0) throw ParseError(line_no, "f(v) must be nonnegative");
    if (f[v] != -1) throw ParseError(line_no, "vertex " + std::to_string(v) + " assigned twice");
    f[v] = static_cast<int>(fv);
  }
  for (int v = 0; v < n; ++v)
    if (f[v] == -1)
      throw ParseError(reader.line() + 1, "vertex " + std::to_string(v) + " has no f value");
  return f;
}

std::vector<int> read_list_sizes_file(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_list_sizes(in, n);
}

}  // namespace listcrit
