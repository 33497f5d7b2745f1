#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "hcp/certificate.hpp"
#include "hcp/hypergraph.hpp"

namespace hcp {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Line 1 "k n m", then m lines of k strictly increasing ids. Edges are
/// written in lexicographic order, so equal hypergraphs give equal bytes.
void write_hypergraph(std::ostream& out, const Hypergraph& g);
Hypergraph read_hypergraph(std::istream& in);

/// Line 1 "mode k n", line 2 the n ids of the cyclic order.
void write_certificate(std::ostream& out, const CycleCertificate& cert);
CycleCertificate read_certificate(std::istream& in);

Hypergraph load_hypergraph(const std::string& path);
void save_hypergraph(const std::string& path, const Hypergraph& g);
CycleCertificate load_certificate(const std::string& path);
void save_certificate(const std::string& path, const CycleCertificate& cert);

}  // namespace hcp
