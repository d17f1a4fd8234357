#pragma once

#include <filesystem>

#include <json.hpp>

#include "algflow/algebra.hpp"
#include "algflow/classification.hpp"
#include "algflow/cubic_tensor.hpp"
#include "algflow/isomorphism.hpp"

// JSON formats. All indices in files are 0-based; nested arrays run i -> j -> k
// from outermost to innermost.
//
//   tensor:   {"dim": m, "c": [[[..]]]}
//   algebra:  {"dim": 2, "c2x4": [[4 reals], [4 reals]]}, or the tensor form
//   verdict:  {"kind": "...", "certificate": [[..],[..]], "residual": r, "reason": "..."}
//   label:    {"class": "ACosPlus", "c": 0.5}
//   form:     {"family": 2, "params": [0.5, 0.0, -0.5]}
//
// Readers throw std::invalid_argument on malformed input.

namespace algflow::io {

using json = nlohmann::json;

json to_json(const CubicTensor& t);
CubicTensor tensor_from_json(const json& j);

/// 2x4 form for dim 2, tensor form otherwise.
json to_json(const Algebra& a);
/// Accepts either the "c2x4" or the "c" form.
Algebra algebra_from_json(const json& j);

json to_json(const Matrix& m);
json to_json(const StructMatrix2x4& m);
json to_json(const BasisChange& p);
BasisChange basis_change_from_json(const json& j);

json to_json(const IsoVerdict& v);
IsoVerdict verdict_from_json(const json& j);

json to_json(const FlowClassLabel& label);
FlowClassLabel label_from_json(const json& j);

json to_json(const BekbaevForm& f);
BekbaevForm bekbaev_from_json(const json& j);

json to_json(const InvariantSignature& s);

Algebra load_algebra(const std::filesystem::path& path);
void save_algebra(const std::filesystem::path& path, const Algebra& a);

}  // namespace algflow::io
