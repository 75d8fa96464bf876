#include "core/quiver.hpp"

namespace qdga {

int Quiver::add_vertex(const std::string& label) {
  if (vtx_by_label_.count(label)) throw std::invalid_argument("duplicate vertex label: " + label);
  int id = n_vertices();
  labels_.push_back(label);
  vtx_by_label_[label] = id;
  out_.emplace_back();
  in_.emplace_back();
  return id;
}

int Quiver::add_arrow(const std::string& name, int src, int dst) {
  if (arr_by_name_.count(name)) throw std::invalid_argument("duplicate arrow name: " + name);
  if (src < 0 || src >= n_vertices() || dst < 0 || dst >= n_vertices())
    throw std::invalid_argument("arrow endpoint out of range: " + name);
  int id = n_arrows();
  arrows_.push_back({name, src, dst});
  arr_by_name_[name] = id;
  out_[src].push_back(id);
  in_[dst].push_back(id);
  return id;
}

int Quiver::vertex_id(const std::string& label) const {
  auto it = vtx_by_label_.find(label);
  if (it == vtx_by_label_.end()) throw std::invalid_argument("unknown vertex: " + label);
  return it->second;
}

int Quiver::arrow_id(const std::string& name) const {
  auto it = arr_by_name_.find(name);
  if (it == arr_by_name_.end()) throw std::invalid_argument("unknown arrow: " + name);
  return it->second;
}

bool Quiver::operator==(const Quiver& o) const {
  if (labels_ != o.labels_) return false;
  if (arrows_.size() != o.arrows_.size()) return false;
  for (size_t i = 0; i < arrows_.size(); ++i) {
    if (arrows_[i].name != o.arrows_[i].name || arrows_[i].src != o.arrows_[i].src ||
        arrows_[i].dst != o.arrows_[i].dst)
      return false;
  }
  return true;
}

}  // namespace qdga
