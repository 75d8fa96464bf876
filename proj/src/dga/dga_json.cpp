#include "dga/dga_json.hpp"

#include "core/text.hpp"

namespace qdga {

nlohmann::ordered_json dga_to_json(const SemiFreeDGA& dga) {
  nlohmann::ordered_json j;
  j["ring"] = ring_name(dga.ring);
  j["composition"] = "right-to-left";
  const Quiver& q = dga.quiver();
  j["vertices"] = nlohmann::ordered_json::array();
  for (int v = 0; v < q.n_vertices(); ++v) j["vertices"].push_back(q.vertex_label(v));
  j["arrows"] = nlohmann::ordered_json::array();
  for (int a = 0; a < q.n_arrows(); ++a) {
    nlohmann::ordered_json ja;
    ja["name"] = q.arrow(a).name;
    ja["src"] = q.vertex_label(q.arrow(a).src);
    ja["dst"] = q.vertex_label(q.arrow(a).dst);
    ja["deg"] = dga.gq.degree(a);
    j["arrows"].push_back(ja);
  }
  j["invertible_pairs"] = nlohmann::ordered_json::array();
  for (auto [g, gi] : dga.inv_pairs)
    j["invertible_pairs"].push_back({q.arrow(g).name, q.arrow(gi).name});
  nlohmann::ordered_json d;
  for (int a = 0; a < q.n_arrows(); ++a)
    if (!dga.diff.at(a).is_zero()) d[q.arrow(a).name] = dga.diff.at(a).str(q);
  j["differential"] = d;
  return j;
}

SemiFreeDGA dga_from_json(const nlohmann::json& j) {
  SemiFreeDGA dga;
  dga.ring = ring_from_name(j.at("ring").get<std::string>());
  for (const auto& v : j.at("vertices")) dga.gq.q.add_vertex(v.get<std::string>());
  for (const auto& a : j.at("arrows")) {
    dga.gq.add_arrow(a.at("name").get<std::string>(),
                     dga.gq.q.vertex_id(a.at("src").get<std::string>()),
                     dga.gq.q.vertex_id(a.at("dst").get<std::string>()),
                     a.at("deg").get<int>());
  }
  dga.diff.assign(dga.gq.q.n_arrows(), NCPoly(dga.ring));
  if (j.contains("invertible_pairs"))
    for (const auto& p : j.at("invertible_pairs"))
      dga.add_invertible_pair(dga.quiver().arrow_id(p.at(0).get<std::string>()),
                              dga.quiver().arrow_id(p.at(1).get<std::string>()));
  if (j.contains("differential"))
    for (const auto& [name, text] : j.at("differential").items())
      dga.set_diff(name, text.get<std::string>());
  dga.validate();
  return dga;
}

}  // namespace qdga
