#include "folpi/dual_graph.hpp"

#include <algorithm>
#include <sstream>

namespace folpi {

bool DualGraph::has_vertex(int id) const {
  for (const auto& v : vertices)
    if (v.id == id) return true;
  return false;
}

const DualGraph::Vertex& DualGraph::vertex(int id) const {
  for (const auto& v : vertices)
    if (v.id == id) return v;
  throw GraphError("unknown vertex id " + std::to_string(id));
}

bool DualGraph::is_exceptional(int id) const { return !vertex(id).arrow; }

std::vector<int> DualGraph::neighbors(int id) const {
  std::vector<int> r;
  for (const auto& [a, b] : edges) {
    if (a == id) r.push_back(b);
    if (b == id) r.push_back(a);
  }
  std::sort(r.begin(), r.end());
  return r;
}

int DualGraph::valence(int id) const { return static_cast<int>(neighbors(id).size()); }

std::vector<int> DualGraph::exceptional_ids() const {
  std::vector<int> r;
  for (const auto& v : vertices)
    if (!v.arrow) r.push_back(v.id);
  std::sort(r.begin(), r.end());
  return r;
}

std::vector<int> DualGraph::arrow_ids() const {
  std::vector<int> r;
  for (const auto& v : vertices)
    if (v.arrow) r.push_back(v.id);
  std::sort(r.begin(), r.end());
  return r;
}

int DualGraph::arrows_on(int id) const {
  int c = 0;
  for (int nb : neighbors(id))
    if (vertex(nb).arrow) ++c;
  return c;
}

void DualGraph::add_exceptional(int id, long self) {
  if (has_vertex(id)) throw GraphError("duplicate vertex id " + std::to_string(id));
  vertices.push_back({id, false, self});
}

void DualGraph::add_arrow(int id, int attach_to) {
  if (has_vertex(id)) throw GraphError("duplicate vertex id " + std::to_string(id));
  vertices.push_back({id, true, 0});
  add_edge(id, attach_to);
}

void DualGraph::add_edge(int a, int b) {
  if (a == b) throw GraphError("self-loop on vertex " + std::to_string(a));
  edges.emplace_back(std::min(a, b), std::max(a, b));
}

void DualGraph::remove_edge(int a, int b) {
  const std::pair<int, int> key{std::min(a, b), std::max(a, b)};
  auto it = std::find(edges.begin(), edges.end(), key);
  if (it == edges.end())
    throw GraphError("no edge " + std::to_string(a) + "-" + std::to_string(b));
  edges.erase(it);
}

DualGraph parse_graph(const std::string& text) {
  DualGraph g;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    auto fail = [&](const std::string& what) {
      throw GraphError("graph file line " + std::to_string(lineno) + ": " + what);
    };
    if (tag == "V") {
      int id;
      std::string kind;
      if (!(ls >> id >> kind)) fail("expected 'V <id> exc <self>' or 'V <id> arrow'");
      if (kind == "exc") {
        long self;
        if (!(ls >> self)) fail("missing self-intersection");
        if (g.has_vertex(id)) fail("duplicate vertex id");
        g.vertices.push_back({id, false, self});
      } else if (kind == "arrow") {
        if (g.has_vertex(id)) fail("duplicate vertex id");
        g.vertices.push_back({id, true, 0});
      } else {
        fail("unknown vertex kind '" + kind + "'");
      }
    } else if (tag == "E") {
      int a, b;
      if (!(ls >> a >> b)) fail("expected 'E <a> <b>'");
      if (a == b) fail("self-loop");
      g.edges.emplace_back(std::min(a, b), std::max(a, b));
    } else if (tag == "M") {
      int id;
      std::string m;
      if (!(ls >> id >> m)) fail("expected 'M <id> <mult>'");
      g.mult[id] = Int(m);
    } else {
      fail("unknown record '" + tag + "'");
    }
    std::string extra;
    if (ls >> extra) fail("trailing tokens");
  }
  for (const auto& [a, b] : g.edges)
    if (!g.has_vertex(a) || !g.has_vertex(b))
      throw GraphError("edge references unknown vertex");
  for (const auto& [id, m] : g.mult) {
    if (!g.has_vertex(id) || !g.is_exceptional(id))
      throw GraphError("multiplicity on non-exceptional id " + std::to_string(id));
    if (m <= 0) throw GraphError("non-positive multiplicity");
  }
  return g;
}

std::string serialize_graph(const DualGraph& g) {
  std::ostringstream out;
  auto vs = g.vertices;
  std::sort(vs.begin(), vs.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  for (const auto& v : vs) {
    if (v.arrow)
      out << "V " << v.id << " arrow\n";
    else
      out << "V " << v.id << " exc " << v.self << "\n";
  }
  auto es = g.edges;
  std::sort(es.begin(), es.end());
  for (const auto& [a, b] : es) out << "E " << a << " " << b << "\n";
  for (const auto& [id, m] : g.mult) out << "M " << id << " " << m.get_str() << "\n";
  return out.str();
}

void validate_graph(const DualGraph& g) {
  if (g.vertices.empty()) throw GraphError("empty graph");
  auto es = g.edges;
  std::sort(es.begin(), es.end());
  if (std::adjacent_find(es.begin(), es.end()) != es.end())
    throw GraphError("duplicate edge (normal crossings allow at most one)");
  for (const auto& v : g.vertices)
    if (v.arrow) {
      if (g.valence(v.id) != 1)
        throw GraphError("arrow vertex " + std::to_string(v.id) + " must have valence 1");
      const int nb = g.neighbors(v.id)[0];
      if (!g.is_exceptional(nb))
        throw GraphError("arrow vertex " + std::to_string(v.id) +
                         " must attach to an exceptional component");
    }
  // connectivity
  std::vector<int> stack{g.vertices.front().id};
  std::map<int, bool> seen{{stack[0], true}};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int nb : g.neighbors(v))
      if (!seen[nb]) {
        seen[nb] = true;
        stack.push_back(nb);
      }
  }
  for (const auto& v : g.vertices)
    if (!seen[v.id]) throw GraphError("graph is not connected");
}

bool negative_definite(const DualGraph& g) {
  const auto ids = g.exceptional_ids();
  const int n = static_cast<int>(ids.size());
  if (n == 0) return true;
  std::map<int, int> pos;
  for (int i = 0; i < n; ++i) pos[ids[i]] = i;
  std::vector<std::vector<Int>> M(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i) M[i][i] = g.vertex(ids[i]).self;
  for (const auto& [a, b] : g.edges)
    if (g.is_exceptional(a) && g.is_exceptional(b)) {
      M[pos[a]][pos[b]] += 1;
      M[pos[b]][pos[a]] += 1;
    }
  // leading principal minors by fraction-free elimination, per size
  for (int k = 1; k <= n; ++k) {
    std::vector<std::vector<Int>> A(k, std::vector<Int>(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) A[i][j] = M[i][j];
    Int det = 1;
    int sign = 1;
    Int prev = 1;
    bool singular = false;
    for (int col = 0; col < k && !singular; ++col) {
      int piv = -1;
      for (int r = col; r < k; ++r)
        if (A[r][col] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) {
        singular = true;
        break;
      }
      if (piv != col) {
        std::swap(A[piv], A[col]);
        sign = -sign;
      }
      for (int r = col + 1; r < k; ++r) {
        for (int c = col + 1; c < k; ++c)
          A[r][c] = (A[r][c] * A[col][col] - A[r][col] * A[col][c]) / prev;
        A[r][col] = 0;
      }
      prev = A[col][col];
    }
    det = singular ? Int(0) : Int(sign * A[k - 1][k - 1]);
    const bool want_positive = k % 2 == 0;
    if (det == 0) return false;
    if ((det > 0) != want_positive) return false;
  }
  return true;
}

}  // namespace folpi
