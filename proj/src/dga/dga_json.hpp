#ifndef QDGA_DGA_DGA_JSON_HPP
#define QDGA_DGA_DGA_JSON_HPP

#include <json.hpp>

#include "dga/dga.hpp"

namespace qdga {

// {"ring": ..., "vertices": [...], "arrows": [{"name","src","dst","deg"}],
//  "invertible_pairs": [[g, ginv], ...], "differential": {"gen": "<text>"}}
// Path composition in the text is right to left.
nlohmann::ordered_json dga_to_json(const SemiFreeDGA& dga);
SemiFreeDGA dga_from_json(const nlohmann::json& j);

}  // namespace qdga

#endif
