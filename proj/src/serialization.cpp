#include "hyperinv/serialization.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hyperinv/errors.hpp"

namespace hyperinv {

namespace {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

TensorDocument parse_tensor_document(const std::string& json_text, const std::string& origin) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(origin + ": " + e.what());
  }
  if (!j.is_object()) throw ParseError(origin + ": top-level value must be an object");

  static const char* known[] = {"rank", "dim", "layout", "variance", "data", "symmetric"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : known) ok = ok || it.key() == k;
    if (!ok) throw ParseError(origin + ": unknown field \"" + it.key() + "\"");
  }
  for (const char* k : {"rank", "dim", "layout", "variance", "data"})
    if (!j.contains(k)) throw ParseError(origin + ": missing field \"" + std::string(k) + "\"");

  if (!j["rank"].is_number_integer() || !j["dim"].is_number_integer())
    throw ParseError(origin + ": \"rank\" and \"dim\" must be integers");
  const int rank = j["rank"].get<int>();
  const int dim = j["dim"].get<int>();
  if (rank < 1 || dim < 1) throw ParseError(origin + ": rank and dim must be positive");

  if (!j["layout"].is_string() || j["layout"].get<std::string>() != "row-major")
    throw ParseError(origin + ": \"layout\" must be \"row-major\"");

  const std::string var = j["variance"].is_string() ? j["variance"].get<std::string>() : "";
  Variance variance;
  if (var == "covariant")
    variance = Variance::covariant;
  else if (var == "contravariant")
    variance = Variance::contravariant;
  else
    throw ParseError(origin + ": \"variance\" must be \"covariant\" or \"contravariant\"");

  if (!j["data"].is_array()) throw ParseError(origin + ": \"data\" must be an array");
  std::size_t expect = 1;
  for (int i = 0; i < rank; ++i) expect *= static_cast<std::size_t>(dim);
  if (j["data"].size() != expect)
    throw ParseError(origin + ": \"data\" length " + std::to_string(j["data"].size()) +
                     " != dim^rank = " + std::to_string(expect));
  std::vector<double> data;
  data.reserve(expect);
  for (std::size_t i = 0; i < j["data"].size(); ++i) {
    const auto& v = j["data"][i];
    if (!v.is_number()) throw ParseError(origin + ": \"data\"[" + std::to_string(i) + "] is not a number");
    data.push_back(v.get<double>());
  }

  TensorDocument doc{HyperMatrix(rank, dim, variance, std::move(data)), std::nullopt};
  if (j.contains("symmetric")) {
    if (!j["symmetric"].is_boolean()) throw ParseError(origin + ": \"symmetric\" must be a boolean");
    doc.symmetric = j["symmetric"].get<bool>();
    if (*doc.symmetric && !is_symmetric(doc.tensor))
      throw ParseError(origin + ": tensor declared symmetric but is not (1e-12 relative)");
  }
  return doc;
}

TensorDocument load_tensor_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_tensor_document(ss.str(), path);
}

std::string emit_tensor_document(const HyperMatrix& tensor, std::optional<bool> symmetric) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"rank\": " << tensor.rank() << ",\n";
  os << "  \"dim\": " << tensor.dim() << ",\n";
  os << "  \"layout\": \"row-major\",\n";
  os << "  \"variance\": \"" << to_string(tensor.variance()) << "\",\n";
  os << "  \"data\": [";
  for (std::size_t i = 0; i < tensor.size(); ++i) {
    if (i) os << ", ";
    os << format_double(tensor[i]);
  }
  os << "]";
  if (symmetric.has_value()) os << ",\n  \"symmetric\": " << (*symmetric ? "true" : "false");
  os << "\n}\n";
  return os.str();
}

std::string emit_expansion_json(const InvariantExpansion& expansion) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"rank\": " << expansion.rank << ",\n";
  os << "  \"order\": " << expansion.order << ",\n";
  os << "  \"prefactor_denominator\": " << expansion.prefactor_denominator << ",\n";
  os << "  \"terms\": [\n";
  for (std::size_t t = 0; t < expansion.terms.size(); ++t) {
    const auto& term = expansion.terms[t];
    os << "    {\"square\": [";
    for (int i = 0; i < term.square.n; ++i) {
      if (i) os << ", ";
      os << '[';
      for (int j = 0; j < term.square.n; ++j) {
        if (j) os << ", ";
        os << term.square.at(i, j);
      }
      os << ']';
    }
    os << "], \"coefficient\": " << term.coefficient << ", \"class_size\": " << term.class_size
       << '}' << (t + 1 < expansion.terms.size() ? "," : "") << '\n';
  }
  os << "  ]\n}\n";
  return os.str();
}

std::string emit_expansion_latex(const InvariantExpansion& expansion) {
  std::ostringstream os;
  os << "% rank " << expansion.rank << ", order " << expansion.order << " expansion\n";
  os << "\\frac{1}{" << expansion.prefactor_denominator << "}\\Big[\n";
  for (std::size_t t = 0; t < expansion.terms.size(); ++t) {
    const auto& term = expansion.terms[t];
    const std::int64_t c = term.coefficient;
    os << (c >= 0 ? "  + " : "  - ");
    if (std::abs(c) != 1) os << std::abs(c) << "\\,";
    os << "\\begin{pmatrix}";
    for (int i = 0; i < term.square.n; ++i) {
      if (i) os << " \\\\ ";
      for (int j = 0; j < term.square.n; ++j) {
        if (j) os << " & ";
        os << term.square.at(i, j);
      }
    }
    os << "\\end{pmatrix}";
    os << '\n';
  }
  os << "\\Big]\n";
  return os.str();
}

}  // namespace hyperinv
