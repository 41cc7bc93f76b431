#pragma once
// Weighted dual graph of a total divisor: exceptional components carrying
// self-intersections, strict-transform arrows, optional multiplicities.

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace folpi {

using Int = mpz_class;

struct GraphError : std::runtime_error {
  explicit GraphError(const std::string& m) : std::runtime_error(m) {}
};

struct DualGraph {
  struct Vertex {
    int id = 0;
    bool arrow = false;       // strict-transform branch marker
    long self = 0;            // self-intersection; exceptional vertices only
  };

  std::vector<Vertex> vertices;            // creation order
  std::vector<std::pair<int, int>> edges;  // unordered pairs, stored (min,max)
  std::map<int, Int> mult;                 // optional, exceptional ids only

  bool has_vertex(int id) const;
  const Vertex& vertex(int id) const;
  bool is_exceptional(int id) const;
  std::vector<int> neighbors(int id) const;   // ascending
  int valence(int id) const;                  // intersection points, arrows included
  std::vector<int> exceptional_ids() const;   // ascending
  std::vector<int> arrow_ids() const;         // ascending
  int arrows_on(int id) const;                // arrows attached to an exceptional id

  void add_exceptional(int id, long self);
  void add_arrow(int id, int attach_to);
  void add_edge(int a, int b);
  void remove_edge(int a, int b);
};

// Line format: `V <id> exc <self>` | `V <id> arrow` | `E <a> <b>` | `M <id> <m>`,
// `#` starts a comment. serialize emits the canonical form (ids ascending);
// serialize(parse(serialize(g))) == serialize(g) byte for byte.
DualGraph parse_graph(const std::string& text);
std::string serialize_graph(const DualGraph& g);

// Connectivity, no loops, single edges, arrows of valence exactly 1.
void validate_graph(const DualGraph& g);

// Leading principal minors of the exceptional intersection matrix alternate
// in sign, starting negative.
bool negative_definite(const DualGraph& g);

}  // namespace folpi
