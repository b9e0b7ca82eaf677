#include "spex/graph6.hpp"

#include <cstdint>

namespace spex {

namespace {

void check_byte(unsigned char c) {
  if (c < 63 || c > 126)
    throw std::invalid_argument("graph6: byte outside printable range [63,126]");
}

}  // namespace

Graph graph6_decode(const std::string& line) {
  if (line.empty()) throw std::invalid_argument("graph6: empty input");
  std::size_t pos = 0;
  auto next = [&]() -> unsigned {
    if (pos >= line.size()) throw std::invalid_argument("graph6: truncated header");
    unsigned char c = static_cast<unsigned char>(line[pos++]);
    check_byte(c);
    return c - 63u;
  };

  long long n;
  unsigned c0 = next();
  if (c0 < 63) {
    n = c0;
  } else {
    unsigned c1 = next();
    if (c1 < 63) {
      n = (static_cast<long long>(c1) << 12) | (next() << 6) | next();
    } else {
      n = 0;
      for (int i = 0; i < 6; ++i) n = (n << 6) | next();
    }
  }
  if (n > kMaxVertices)
    throw std::length_error("graph6: graph larger than capacity");

  long long nbits = n * (n - 1) / 2;
  long long nbytes = (nbits + 5) / 6;
  if (static_cast<long long>(line.size()) - static_cast<long long>(pos) != nbytes)
    throw std::invalid_argument("graph6: payload length mismatch");

  Graph g(static_cast<int>(n));
  long long bit = 0;
  int u = 0, v = 1;  // upper triangle column by column
  for (long long i = 0; i < nbytes; ++i) {
    unsigned char c = static_cast<unsigned char>(line[pos + i]);
    check_byte(c);
    unsigned payload = c - 63u;
    for (int b = 5; b >= 0; --b, ++bit) {
      int on = (payload >> b) & 1;
      if (bit >= nbits) {
        if (on) throw std::invalid_argument("graph6: nonzero padding bits");
        continue;
      }
      if (on) g.add_edge(u, v);
      if (++u == v) {
        u = 0;
        ++v;
      }
    }
  }
  return g;
}

std::string graph6_encode(const Graph& g) {
  long long n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  unsigned acc = 0;
  int nbits = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1u : 0u);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

}  // namespace spex
