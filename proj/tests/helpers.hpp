// Shared shorthand for the test binaries: build validated spaces and
// graphs from literals, capture DomainError codes, locate fixtures.
#ifndef TESTS_HELPERS_HPP
#define TESTS_HELPERS_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "proxigraph/bigraph.hpp"
#include "proxigraph/errors.hpp"
#include "proxigraph/space.hpp"

namespace testhelp {

inline proxigraph::FiniteSpace space_of(
    std::vector<std::string> points, std::vector<std::vector<long long>> rows,
    std::map<std::string, std::vector<std::string>> parts = {}) {
  proxigraph::RawSpace raw;
  raw.points = std::move(points);
  for (const auto& row : rows) {
    std::vector<proxigraph::Rat> converted;
    for (long long v : row) converted.push_back(proxigraph::rat(v));
    raw.distances.push_back(std::move(converted));
  }
  raw.parts = std::move(parts);
  return proxigraph::validate_space(raw);
}

inline proxigraph::BipartiteGraph graph_of(
    std::vector<std::string> a, std::vector<std::string> b,
    std::vector<std::pair<std::string, std::string>> edges, bool a_inf = false,
    bool b_inf = false) {
  proxigraph::RawGraph raw{std::move(a), std::move(b), std::move(edges), a_inf,
                           b_inf};
  return proxigraph::validate_graph(raw);
}

/// Runs f, which must throw DomainError, and hands back the code.
template <class F>
proxigraph::Errc thrown_code(F&& f) {
  try {
    std::forward<F>(f)();
  } catch (const proxigraph::DomainError& e) {
    return e.code();
  }
  throw std::logic_error("expected a DomainError");
}

inline std::string fixture(const std::string& name) {
  return std::string(FIXTURES_DIR) + "/" + name;
}

}  // namespace testhelp

#endif
