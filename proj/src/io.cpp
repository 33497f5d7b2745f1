#include "hcp/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

namespace hcp {
namespace {

// strict reader: single spaces between fields, LF only
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& line) {
    if (!std::getline(in_, line)) return false;
    ++lineno_;
    if (line.find('\r') != std::string::npos) fail("carriage return found (LF line endings required)");
    return true;
  }
  std::string require(const char* what) {
    std::string line;
    if (!next(line)) fail(std::string("unexpected end of input, expected ") + what);
    return line;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("line " + std::to_string(lineno_) + ": " + msg);
  }
  std::vector<std::string_view> fields(std::string_view line) const {
    std::vector<std::string_view> out;
    if (line.empty()) return out;
    std::size_t start = 0;
    while (true) {
      auto sp = line.find(' ', start);
      auto tok = line.substr(start, sp == std::string_view::npos ? std::string_view::npos : sp - start);
      if (tok.empty()) fail("empty field (fields are separated by single spaces)");
      out.push_back(tok);
      if (sp == std::string_view::npos) break;
      start = sp + 1;
    }
    return out;
  }
  std::uint64_t number(std::string_view tok) const {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) fail("not a non-negative integer: '" + std::string(tok) + "'");
    return v;
  }
  void expect_end() {
    std::string line;
    if (std::getline(in_, line)) {
      ++lineno_;
      fail("trailing content after the declared records");
    }
  }

 private:
  std::istream& in_;
  std::size_t lineno_ = 0;
};

}  // namespace

void write_hypergraph(std::ostream& out, const Hypergraph& g) {
  out << g.uniformity() << ' ' << g.vertex_count() << ' ' << g.edge_count() << '\n';
  std::string buf;
  g.for_each_edge([&](std::span<const Vertex> e) {
    buf.clear();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) buf += ' ';
      buf += std::to_string(e[i]);
    }
    buf += '\n';
    out << buf;
  });
}

Hypergraph read_hypergraph(std::istream& in) {
  LineReader r(in);
  const auto head_line = r.require("header 'k n m'");
  auto head = r.fields(head_line);
  if (head.size() != 3) r.fail("header must be 'k n m'");
  auto k = r.number(head[0]), n = r.number(head[1]), m = r.number(head[2]);
  if (k < 2 || k > 64) r.fail("uniformity must be in [2, 64]");
  if (n > 0xFFFFFFFFull) r.fail("too many vertices");
  HypergraphBuilder b(static_cast<int>(k), static_cast<Vertex>(n));
  std::vector<Vertex> e(k);
  for (std::uint64_t i = 0; i < m; ++i) {
    const auto line = r.require("edge line");
    auto f = r.fields(line);
    if (f.size() != k) r.fail("edge line must list exactly k vertices");
    for (std::size_t j = 0; j < k; ++j) {
      auto v = r.number(f[j]);
      if (v >= n) r.fail("vertex id out of range");
      if (j > 0 && v <= e[j - 1]) r.fail("edge vertices must be strictly increasing");
      e[j] = static_cast<Vertex>(v);
    }
    if (!b.insert(e)) r.fail("duplicate edge");
  }
  r.expect_end();
  return b.build();
}

void write_certificate(std::ostream& out, const CycleCertificate& cert) {
  out << to_string(cert.mode) << ' ' << cert.k << ' ' << cert.order.size() << '\n';
  std::string buf;
  for (std::size_t i = 0; i < cert.order.size(); ++i) {
    if (i) buf += ' ';
    buf += std::to_string(cert.order[i]);
  }
  buf += '\n';
  out << buf;
}

CycleCertificate read_certificate(std::istream& in) {
  LineReader r(in);
  const auto head_line = r.require("header 'mode k n'");
  auto head = r.fields(head_line);
  if (head.size() != 3) r.fail("header must be 'mode k n'");
  CycleCertificate c;
  try {
    c.mode = parse_mode(head[0]);
  } catch (const std::invalid_argument& e) {
    r.fail(e.what());
  }
  auto k = r.number(head[1]);
  if (k < 1 || k > 63) r.fail("k must be in [1, 63]");
  c.k = static_cast<int>(k);
  auto n = r.number(head[2]);
  const auto ids_line = r.require("ordering line");
  auto ids = r.fields(ids_line);
  if (ids.size() != n) r.fail("ordering must list exactly n vertices");
  c.order.reserve(n);
  for (auto tok : ids) {
    auto v = r.number(tok);
    if (v >= n) r.fail("vertex id out of range");
    c.order.push_back(static_cast<Vertex>(v));
  }
  r.expect_end();
  return c;
}

Hypergraph load_hypergraph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return read_hypergraph(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void save_hypergraph(const std::string& path, const Hypergraph& g) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_hypergraph(out, g);
  if (!out) throw std::runtime_error("write failed: " + path);
}

CycleCertificate load_certificate(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return read_certificate(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void save_certificate(const std::string& path, const CycleCertificate& cert) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_certificate(out, cert);
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace hcp
