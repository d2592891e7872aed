#pragma once

#include <string>

#include "pottsym/classify.hpp"
#include "pottsym/model.hpp"

namespace pottsym {

// Model document: {"vertices": [...], "edges": [{"u","v","weight"?}...],
// "default_weight": "1", "q": 2}. Weights are exact strings such as "1",
// "1/2", or "3+1/2i"; integer JSON numbers are accepted too.
PottsModel parse_model(const std::string& text);
PottsModel load_model_file(const std::string& path);
std::string serialize_model(const PottsModel& model);

// Representation document: {"d": k, "entries": n x n array of k x k arrays}.
// Elements are exact strings or doubles; the exact verifier is used when every
// element is a string.
NumericRep parse_rep(const std::string& text, const PottsModel& model);
NumericRep load_rep_file(const std::string& path, const PottsModel& model);

std::string read_file(const std::string& path);

}  // namespace pottsym
