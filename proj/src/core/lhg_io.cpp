#include "hypersat/lhg_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "hypersat/error.hpp"

namespace hypersat {

namespace {

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

bool is_blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + what,
              line_no);
}

}  // namespace

LinearHypergraph read_lhg(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  long long r = 0;
  long long n = 0;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_lines;

  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = strip_comment(line);
    if (is_blank(body)) continue;
    std::istringstream tokens(body);
    if (!have_header) {
      std::string magic;
      tokens >> magic >> r >> n;
      std::string extra;
      if (magic != "lhg" || tokens.fail() || (tokens >> extra)) {
        parse_fail(line_no, "expected header 'lhg <r> <n>'");
      }
      if (r < 2 || n < 0) parse_fail(line_no, "header needs r >= 2 and n >= 0");
      have_header = true;
      continue;
    }
    Edge e;
    std::string tok;
    while (tokens >> tok) {
      std::size_t used = 0;
      long long value = -1;
      try {
        value = std::stoll(tok, &used);
      } catch (const std::exception&) {
        parse_fail(line_no, "not an integer: '" + tok + "'");
      }
      if (used != tok.size() || value < 0) parse_fail(line_no, "bad vertex id '" + tok + "'");
      if (value >= n) {
        throw Error(ErrorCode::UnknownVertex,
                    "line " + std::to_string(line_no) + ": vertex " + tok +
                        " outside [0," + std::to_string(n) + ")",
                    line_no);
      }
      e.push_back(static_cast<Vertex>(value));
    }
    edges.push_back(std::move(e));
    edge_lines.push_back(line_no);
  }
  if (!have_header) parse_fail(line_no, "missing header");

  try {
    return LinearHypergraph::build(static_cast<int>(r), static_cast<std::size_t>(n),
                                   std::move(edges));
  } catch (const Error& err) {
    if (err.item() && *err.item() < edge_lines.size()) {
      const std::size_t at = edge_lines[*err.item()];
      throw Error(err.code(), "line " + std::to_string(at) + ": " + err.what(), at);
    }
    throw;
  }
}

LinearHypergraph read_lhg_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  return read_lhg(in);
}

void write_lhg(std::ostream& out, const LinearHypergraph& g) {
  std::vector<Edge> sorted(g.edges().begin(), g.edges().end());
  std::sort(sorted.begin(), sorted.end());
  out << "lhg " << g.r() << ' ' << g.id_bound() << '\n';
  for (const Edge& e : sorted) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) out << ' ';
      out << e[i];
    }
    out << '\n';
  }
}

std::string to_lhg_string(const LinearHypergraph& g) {
  std::ostringstream os;
  write_lhg(os, g);
  return os.str();
}

}  // namespace hypersat
