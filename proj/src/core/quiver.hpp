#ifndef QDGA_CORE_QUIVER_HPP
#define QDGA_CORE_QUIVER_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdga {

struct Arrow {
  std::string name;
  int src = -1;
  int dst = -1;
};

// Finite quiver with labelled vertices and named arrows.
class Quiver {
 public:
  int add_vertex(const std::string& label);
  int add_arrow(const std::string& name, int src, int dst);

  int n_vertices() const { return static_cast<int>(labels_.size()); }
  int n_arrows() const { return static_cast<int>(arrows_.size()); }
  const std::string& vertex_label(int v) const { return labels_.at(v); }
  const Arrow& arrow(int a) const { return arrows_.at(a); }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  int vertex_id(const std::string& label) const;
  int arrow_id(const std::string& name) const;
  bool has_vertex(const std::string& label) const { return vtx_by_label_.count(label) > 0; }
  bool has_arrow(const std::string& name) const { return arr_by_name_.count(name) > 0; }

  const std::vector<int>& arrows_from(int v) const { return out_.at(v); }
  const std::vector<int>& arrows_to(int v) const { return in_.at(v); }

  bool operator==(const Quiver& o) const;

 private:
  std::vector<std::string> labels_;
  std::vector<Arrow> arrows_;
  std::map<std::string, int> vtx_by_label_;
  std::map<std::string, int> arr_by_name_;
  std::vector<std::vector<int>> out_, in_;
};

// Quiver with a Z-grading on arrows.
struct GradedQuiver {
  Quiver q;
  std::vector<int> deg;  // per arrow id

  int add_arrow(const std::string& name, int src, int dst, int degree) {
    int id = q.add_arrow(name, src, dst);
    deg.resize(q.n_arrows(), 0);
    deg[id] = degree;
    return id;
  }
  int degree(int arrow) const { return deg.at(arrow); }
  bool operator==(const GradedQuiver& o) const { return q == o.q && deg == o.deg; }
};

}  // namespace qdga

#endif
