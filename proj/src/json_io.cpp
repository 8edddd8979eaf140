#include "gitstrata/json_io.hpp"

namespace gitstrata {

using nlohmann::json;

Rational rational_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer())
    return Rational(j.get<long long>());
  if (!j.is_string()) throw FieldError(path, "expected a rational string");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    throw FieldError(path, e.what());
  }
}

QVector qvector_from_json(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) throw FieldError(path, "expected a nonempty array");
  std::vector<Rational> coords;
  for (size_t i = 0; i < j.size(); ++i)
    coords.push_back(rational_from_json(j[i], path + "[" + std::to_string(i) + "]"));
  return QVector(std::move(coords));
}

namespace {

QMatrix matrix_from_json(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) throw FieldError(path, "expected a nonempty array of rows");
  std::vector<std::vector<Rational>> rows;
  for (size_t i = 0; i < j.size(); ++i) {
    const std::string rp = path + "[" + std::to_string(i) + "]";
    if (!j[i].is_array()) throw FieldError(rp, "expected an array");
    std::vector<Rational> row;
    for (size_t k = 0; k < j[i].size(); ++k)
      row.push_back(rational_from_json(j[i][k], rp + "[" + std::to_string(k) + "]"));
    rows.push_back(std::move(row));
  }
  try {
    return QMatrix(std::move(rows));
  } catch (const std::exception& e) {
    throw FieldError(path, e.what());
  }
}

}  // namespace

WeightSystem weight_system_from_json(const json& j) {
  if (!j.is_object()) throw FieldError("$", "expected an object");
  if (!j.contains("dimension") || !j["dimension"].is_number_unsigned())
    throw FieldError("dimension", "expected a positive integer");
  size_t dim = j["dimension"].get<size_t>();
  if (!j.contains("weights")) throw FieldError("weights", "missing");
  const json& jw = j["weights"];
  if (!jw.is_array() || jw.empty()) throw FieldError("weights", "expected a nonempty array");
  std::vector<QVector> weights;
  for (size_t i = 0; i < jw.size(); ++i) {
    QVector w = qvector_from_json(jw[i], "weights[" + std::to_string(i) + "]");
    if (w.dim() != dim)
      throw FieldError("weights[" + std::to_string(i) + "]", "dimension mismatch");
    weights.push_back(std::move(w));
  }
  InnerProduct ip = InnerProduct::identity(dim);
  if (j.contains("inner_product")) {
    try {
      ip = InnerProduct(matrix_from_json(j["inner_product"], "inner_product"));
    } catch (const FieldError&) {
      throw;
    } catch (const std::exception& e) {
      throw FieldError("inner_product", e.what());
    }
  }
  std::optional<std::vector<QMatrix>> weyl;
  if (j.contains("weyl")) {
    if (!j["weyl"].is_array()) throw FieldError("weyl", "expected an array of matrices");
    std::vector<QMatrix> ms;
    for (size_t i = 0; i < j["weyl"].size(); ++i)
      ms.push_back(matrix_from_json(j["weyl"][i], "weyl[" + std::to_string(i) + "]"));
    weyl = std::move(ms);
  }
  std::optional<std::vector<QVector>> chamber;
  if (j.contains("chamber")) {
    if (!j["chamber"].is_array()) throw FieldError("chamber", "expected an array of vectors");
    std::vector<QVector> cs;
    for (size_t i = 0; i < j["chamber"].size(); ++i)
      cs.push_back(qvector_from_json(j["chamber"][i], "chamber[" + std::to_string(i) + "]"));
    chamber = std::move(cs);
  }
  std::optional<std::vector<Rational>> adjoint;
  if (j.contains("adjoint_weights")) {
    if (!j["adjoint_weights"].is_array())
      throw FieldError("adjoint_weights", "expected an array of rationals");
    std::vector<Rational> as;
    for (size_t i = 0; i < j["adjoint_weights"].size(); ++i)
      as.push_back(
          rational_from_json(j["adjoint_weights"][i], "adjoint_weights[" + std::to_string(i) + "]"));
    adjoint = std::move(as);
  }
  try {
    return WeightSystem(dim, std::move(weights), std::move(ip), std::move(weyl),
                        std::move(chamber), std::move(adjoint));
  } catch (const std::exception& e) {
    throw FieldError("$", e.what());
  }
}

namespace {

EpsWeight epsweight_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) throw FieldError(path, "expected {main, eps}");
  Rational main = j.contains("main") ? rational_from_json(j["main"], path + ".main") : Rational();
  Rational eps = j.contains("eps") ? rational_from_json(j["eps"], path + ".eps") : Rational();
  return EpsWeight(std::move(main), std::move(eps));
}

}  // namespace

std::vector<StratumCell> cells_from_json(const json& j) {
  if (!j.is_object() || !j.contains("cells")) throw FieldError("cells", "missing");
  const json& jc = j["cells"];
  if (!jc.is_array() || jc.empty()) throw FieldError("cells", "expected a nonempty array");
  std::vector<StratumCell> out;
  for (size_t i = 0; i < jc.size(); ++i) {
    const std::string p = "cells[" + std::to_string(i) + "]";
    const json& c = jc[i];
    if (!c.is_object()) throw FieldError(p, "expected an object");
    StratumCell cell;
    if (!c.contains("id") || !c["id"].is_string()) throw FieldError(p + ".id", "expected a string");
    cell.id = c["id"].get<std::string>();
    if (c.contains("label")) cell.label = c["label"].get<std::string>();
    if (!c.contains("ustab_dim") || !c["ustab_dim"].is_number_integer())
      throw FieldError(p + ".ustab_dim", "expected an integer");
    cell.ustab_dim = c["ustab_dim"].get<int>();
    if (cell.ustab_dim < 0) throw FieldError(p + ".ustab_dim", "must be nonnegative");
    if (!c.contains("flows_to") || !c["flows_to"].is_string())
      throw FieldError(p + ".flows_to", "expected a cell id");
    cell.flows_to = c["flows_to"].get<std::string>();
    if (!c.contains("lambda_weights") || !c["lambda_weights"].is_array() ||
        c["lambda_weights"].empty())
      throw FieldError(p + ".lambda_weights", "expected a nonempty array");
    for (size_t k = 0; k < c["lambda_weights"].size(); ++k)
      cell.lambda_weights.push_back(epsweight_from_json(
          c["lambda_weights"][k], p + ".lambda_weights[" + std::to_string(k) + "]"));
    if (c.contains("closed_in"))
      for (const auto& id : c["closed_in"]) cell.closed_in.push_back(id.get<std::string>());
    if (c.contains("exceptional")) cell.exceptional = c["exceptional"].get<bool>();
    out.push_back(std::move(cell));
  }
  return out;
}

json epsweight_to_json(const EpsWeight& w) {
  return json{{"main", w.main.to_string()}, {"eps", w.eps.to_string()}};
}

json trace_to_json(const std::vector<StepRecord>& trace) {
  json out = json::array();
  for (const auto& r : trace) {
    json step{{"step", r.step},
              {"case", r.case_tag},
              {"centre", r.centre_ids},
              {"new_exceptional", r.new_exceptional_ids},
              {"d_max_after", r.d_max_after}};
    step["r_min"] = r.r_min ? epsweight_to_json(*r.r_min) : json(nullptr);
    out.push_back(std::move(step));
  }
  return out;
}

std::string content_hash(const std::string& payload) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : payload) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

std::string make_report(const std::string& command, const std::string& input_hash,
                        const json& outputs) {
  json report{{"command", command},
              {"engine_version", kEngineVersion},
              {"input_hash", input_hash},
              {"outputs", outputs}};
  return report.dump(2) + "\n";
}

}  // namespace gitstrata
