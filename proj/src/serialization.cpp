#include "ilrc/serialization.hpp"

namespace ilrc {

namespace {

template <class T>
T get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing key \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw FormatError(std::string("bad value for \"") + key + "\"");
  }
}

}  // namespace

Json to_json(const FiniteField& field) {
  return Json{{"p", field.characteristic()}, {"m", field.degree()}, {"poly", field.polynomial()}};
}

FiniteField field_from_json(const Json& j) {
  const auto p = get<std::uint64_t>(j, "p");
  const auto m = get<unsigned>(j, "m");
  const auto poly = j.contains("poly") ? get<std::uint64_t>(j, "poly") : 0;
  try {
    if (m == 1 || poly == 0) return FiniteField::create(p, m);
    return FiniteField::create(p, m, poly);
  } catch (const FieldError& e) {
    throw FormatError(std::string("invalid field: ") + e.what());
  }
}

Json to_json(const GFMatrix& m) {
  Json data = Json::array();
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) data.push_back(m(i, j));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

GFMatrix matrix_from_json(const FiniteField& field, const Json& j) {
  const auto rows = get<Index>(j, "rows");
  const auto cols = get<Index>(j, "cols");
  const auto data = get<std::vector<std::uint64_t>>(j, "data");
  if (rows < 0 || cols < 0 || static_cast<std::size_t>(rows * cols) != data.size())
    throw FormatError("matrix data length does not match rows x cols");
  GFMatrix m(field, rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index c = 0; c < cols; ++c) {
      const auto v = data[static_cast<std::size_t>(i * cols + c)];
      if (!field.contains(v)) throw FormatError("matrix entry outside the field");
      m(i, c) = v;
    }
  return m;
}

Json matrix_document(const GFMatrix& m) {
  Json j{{"field", to_json(m.field())}};
  j.update(to_json(m));
  return j;
}

GFMatrix matrix_from_document(const Json& j) {
  return matrix_from_json(field_from_json(get<Json>(j, "field")), j);
}

Json to_json(const LocalityPartition& p) {
  Json groups = Json::array();
  for (const auto& g : p.groups) groups.push_back(g);
  return Json{{"r", p.r}, {"rho", p.rho}, {"groups", std::move(groups)}};
}

LocalityPartition partition_from_json(const Json& j) {
  LocalityPartition p;
  p.r = get<int>(j, "r");
  p.rho = get<int>(j, "rho");
  p.groups = get<std::vector<IndexSet>>(j, "groups");
  return p;
}

Json to_json(const LinearCode& code) {
  Json j{{"field", to_json(code.field())},
         {"n", code.length()},
         {"k", code.dimension()},
         {"generator", to_json(code.generator())}};
  if (code.locality()) j["locality"] = to_json(*code.locality());
  if (code.known_distance()) j["distance"] = *code.known_distance();
  return j;
}

LinearCode code_from_json(const Json& j) {
  const FiniteField field = field_from_json(get<Json>(j, "field"));
  const auto n = get<Index>(j, "n");
  const auto k = get<Index>(j, "k");
  const GFMatrix g = matrix_from_json(field, get<Json>(j, "generator"));
  if (g.cols() != n || g.rows() != k) throw FormatError("generator shape does not match n and k");
  LinearCode code(g);
  if (code.dimension() != k) throw FormatError("generator rows are dependent");
  try {
    if (j.contains("locality") && !j.at("locality").is_null()) {
      LocalityPartition p = partition_from_json(j.at("locality"));
      p.validate(n);
      code = code.with_locality(std::move(p));
    }
  } catch (const CodeError& e) {
    throw FormatError(std::string("invalid locality: ") + e.what());
  }
  if (j.contains("distance") && !j.at("distance").is_null()) code = code.with_distance(get<Index>(j, "distance"));
  return code;
}

Json to_json(const DecodeOutcome& out) {
  Json j{{"status", to_string(out.status)},
         {"support", out.support},
         {"syndrome_rank", out.syndrome_rank},
         {"locator_degree", out.locator_degree},
         {"reason", out.reason}};
  if (out.codeword) j["codeword"] = to_json(*out.codeword);
  if (out.error) j["error"] = to_json(*out.error);
  return j;
}

DecodeStatus decode_status_from_string(const std::string& s) {
  if (s == "success") return DecodeStatus::success;
  if (s == "failure") return DecodeStatus::failure;
  if (s == "miscorrection_detected") return DecodeStatus::miscorrection_detected;
  throw FormatError("unknown decode status \"" + s + "\"");
}

}  // namespace ilrc
