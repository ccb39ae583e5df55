#pragma once

#include <iosfwd>
#include <string>

#include "streamcert/digraph.hpp"
#include "streamcert/stream.hpp"

namespace streamcert {

// Graph text: first line "n m", then m lines "u v".
Digraph read_graph(std::istream& in);
Digraph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Digraph& g);

// Stream text: first line "n ins|turn", then lines "+ u v" or "- u v".
ArcStream read_stream(std::istream& in);
ArcStream read_stream_file(const std::string& path);
void write_stream(std::ostream& out, const ArcStream& s);

// Accepts either format; graphs become insertion-only streams.
ArcStream read_graph_or_stream_file(const std::string& path);

}  // namespace streamcert
