#pragma once

// JSON encodings.
//
//   scalar   {"a": ["num", "den"], "b": ["num", "den"]}   (a + b*w, decimal strings)
//   tensor   {"dim": n, "entries": [{"m":1,"i":1,"k":2,"l":1,"value": scalar}, ...]}
//            sparse, 1-based, zero entries omitted
//   cubic    {"n": n, "entries": [[i, j, k, scalar], ...]}   sparse, 1-based
//   rect     {"rows": m, "cols": n, "data": [[scalar, ...], ...]}
//
// Decoding errors throw FormatError naming the offending JSON location.

#include "omegalie/classify2d.hpp"
#include "omegalie/eis_scalar.hpp"
#include "omegalie/matrix_constructions.hpp"
#include "omegalie/structure_tensor.hpp"

#include <json.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>

namespace omegalie {

using Json = nlohmann::ordered_json;

struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json to_json(const Rational& x);
Json to_json(const EisScalar& x);
Json to_json(const StructureTensor& c);
Json to_json(const CubicMatrix& x);
Json to_json(const EisMatrix& m);
// layout names the index tuple, e.g. {"m","i","k","l"}
Json to_json(const CheckReport& r, const std::vector<std::string>& layout);
Json to_json(const ClassReport& r);
Json to_json(const IsoResult& r);

Rational rational_from_json(const Json& j, const std::string& where = "$");
EisScalar scalar_from_json(const Json& j, const std::string& where = "$");
StructureTensor tensor_from_json(const Json& j);
CubicMatrix cubic_from_json(const Json& j);
EisMatrix rect_from_json(const Json& j);

// Parse errors report line and column.
Json parse_json_text(const std::string& text, const std::string& source = "<input>");
Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

std::string dump(const Json& j);  // two-space indent, trailing newline

} // namespace omegalie
