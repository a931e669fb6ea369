#pragma once

#include <optional>
#include <string>

#include "hyperinv/invariant.hpp"
#include "hyperinv/tensor.hpp"

namespace hyperinv {

/// On-disk tensor: {"rank", "dim", "layout": "row-major", "variance",
/// "data": [...], "symmetric"?}.  Unknown fields are rejected; numbers are
/// emitted with 17 significant digits so parse(emit(T)) == T exactly.
struct TensorDocument {
  HyperMatrix tensor;
  std::optional<bool> symmetric;
};

TensorDocument parse_tensor_document(const std::string& json_text,
                                     const std::string& origin = "<string>");
TensorDocument load_tensor_document(const std::string& path);
std::string emit_tensor_document(const HyperMatrix& tensor,
                                 std::optional<bool> symmetric = std::nullopt);

/// Expansion export: {"rank", "order", "prefactor_denominator",
/// "terms": [{"square": [[...]], "coefficient", "class_size"}]}.
std::string emit_expansion_json(const InvariantExpansion& expansion);

/// Table of signed squares in display-math form, one term per line.
std::string emit_expansion_latex(const InvariantExpansion& expansion);

}  // namespace hyperinv
