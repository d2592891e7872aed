#include "pottsym/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace pottsym {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed document: ") + e.what());
  }
}

GaussianRational weight_from_json(const json& w, const std::string& where) {
  try {
    if (w.is_string()) return GaussianRational::parse(w.get<std::string>());
    if (w.is_number_integer()) return GaussianRational(Rational(w.get<long>()));
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what());
  }
  throw InputError(where + ": weight must be an exact string like \"1/2\" or an integer");
}

}  // namespace

PottsModel parse_model(const std::string& text) {
  json doc = parse_json(text);
  if (!doc.is_object()) throw InputError("model document must be a JSON object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw InputError("vertices: required list of vertex labels");
  std::vector<std::string> labels;
  for (size_t k = 0; k < doc["vertices"].size(); ++k) {
    const json& v = doc["vertices"][k];
    if (!v.is_string())
      throw InputError("vertices[" + std::to_string(k) + "]: labels must be strings");
    labels.push_back(v.get<std::string>());
  }
  if (!doc.contains("q") || !doc["q"].is_number_integer())
    throw InputError("q: required integer >= 2 is missing");
  int q = doc["q"].get<int>();
  if (q < 2) throw InputError("q: must be >= 2, got " + std::to_string(q));

  GaussianRational defaultWeight(1);
  if (doc.contains("default_weight"))
    defaultWeight = weight_from_json(doc["default_weight"], "default_weight");

  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::tuple<std::string, std::string, GaussianRational>> weights;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw InputError("edges: must be a list");
    for (size_t k = 0; k < doc["edges"].size(); ++k) {
      const json& e = doc["edges"][k];
      std::string where = "edges[" + std::to_string(k) + "]";
      if (!e.is_object() || !e.contains("u") || !e.contains("v") || !e["u"].is_string() ||
          !e["v"].is_string())
        throw InputError(where + ": each edge needs string fields u and v");
      std::string u = e["u"].get<std::string>(), v = e["v"].get<std::string>();
      edges.emplace_back(u, v);
      if (e.contains("weight"))
        weights.emplace_back(u, v, weight_from_json(e["weight"], where + ".weight"));
    }
  }
  return build_model(labels, edges, weights, defaultWeight, q);
}

PottsModel load_model_file(const std::string& path) {
  try {
    return parse_model(read_file(path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string serialize_model(const PottsModel& model) {
  json doc;
  doc["vertices"] = model.labels();
  json edges = json::array();
  for (const Edge& e : model.edges()) {
    json je;
    je["u"] = model.labels()[e.u];
    je["v"] = model.labels()[e.v];
    je["weight"] = model.J(e.u, e.v).str();
    edges.push_back(je);
  }
  doc["edges"] = edges;
  doc["default_weight"] = "1";
  doc["q"] = model.q();
  return doc.dump(2) + "\n";
}

NumericRep parse_rep(const std::string& text, const PottsModel& model) {
  json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("d") || !doc["d"].is_number_integer())
    throw InputError("rep document needs an integer dimension field d");
  int d = doc["d"].get<int>();
  if (d < 1) throw InputError("d: must be >= 1");
  int n = model.n();
  if (!doc.contains("entries") || !doc["entries"].is_array() ||
      static_cast<int>(doc["entries"].size()) != n)
    throw InputError("entries: expected an " + std::to_string(n) + " x " + std::to_string(n) +
                     " array of matrices");
  NumericRep rep;
  rep.n = n;
  rep.d = d;
  rep.exact = true;
  rep.exactEntries.assign(static_cast<size_t>(n) * n * d * d, GaussianRational());
  rep.entries.assign(static_cast<size_t>(n) * n * d * d, {0.0, 0.0});
  for (int i = 0; i < n; ++i) {
    const json& row = doc["entries"][i];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw InputError("entries[" + std::to_string(i) + "]: expected " + std::to_string(n) +
                       " matrices");
    for (int j = 0; j < n; ++j) {
      const json& m = row[j];
      std::string where = "entries[" + std::to_string(i) + "][" + std::to_string(j) + "]";
      if (!m.is_array() || static_cast<int>(m.size()) != d)
        throw InputError(where + ": expected a " + std::to_string(d) + " x " + std::to_string(d) +
                         " matrix");
      for (int r = 0; r < d; ++r) {
        const json& mr = m[r];
        if (!mr.is_array() || static_cast<int>(mr.size()) != d)
          throw InputError(where + ": expected a " + std::to_string(d) + " x " +
                           std::to_string(d) + " matrix");
        for (int c = 0; c < d; ++c) {
          const json& el = mr[c];
          if (el.is_string()) {
            GaussianRational g = GaussianRational::parse(el.get<std::string>());
            rep.exactAt(i, j, r, c) = g;
            rep.at(i, j, r, c) = {g.reDouble(), g.imDouble()};
          } else if (el.is_number()) {
            rep.exact = false;
            rep.at(i, j, r, c) = {el.get<double>(), 0.0};
          } else {
            throw InputError(where + ": matrix elements must be exact strings or numbers");
          }
        }
      }
    }
  }
  if (!rep.exact) rep.exactEntries.clear();
  return rep;
}

NumericRep load_rep_file(const std::string& path, const PottsModel& model) {
  try {
    return parse_rep(read_file(path), model);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace pottsym
