#ifndef PROXIGRAPH_IO_HPP
#define PROXIGRAPH_IO_HPP

#include <map>
#include <stdexcept>
#include <string>

#include "proxigraph/bigraph.hpp"
#include "proxigraph/realize.hpp"
#include "proxigraph/space.hpp"
#include "proxigraph/sweep.hpp"

namespace proxigraph {

/// Malformed input: unreadable files, bad JSON, missing keys, wrong
/// shapes, unparseable rationals. The CLI maps this to exit code 2;
/// DomainError stays exit code 1.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path);

/// Space file: {"points": [...], "distances": [[...]], "parts": {...}}.
/// Distances are strings, either integer literals or "p/q" (unnormalized
/// accepted); bare JSON integers are tolerated on input. Parsing stops at
/// shape; the semimetric axioms are validate_space's job.
RawSpace parse_space(const std::string& text);
std::string serialize_space(const FiniteSpace& space);

/// Graph file: {"A": [...], "B": [...], "edges": [["a","b"], ...],
/// "infinite": {"A": false, "B": false}}; "infinite" is optional and
/// defaults to both false.
RawGraph parse_graph(const std::string& text);
std::string serialize_graph(const BipartiteGraph& g);

/// Map file: {"map": {"a1": "b2", ...}}.
std::map<std::string, std::string> parse_map_table(const std::string& text);
std::string serialize_map_table(const std::map<std::string, std::string>& table);

std::string serialize_classification(const SpaceClass& cls,
                                     const FiniteSpace& space);
/// Families render as {"kind": ..., "params": {}}; the kind alone
/// reconstructs the family.
std::string serialize_decision(const Decision& decision);
std::string serialize_partition(const BallPartition& partition,
                                const FiniteSpace& space);
std::string serialize_sweep(const SweepResult& result);

/// Byte-stable DOT text: part A on rank source, part B on rank sink,
/// undirected edges, declaration order throughout.
std::string export_dot(const BipartiteGraph& g);

}  // namespace proxigraph

#endif
