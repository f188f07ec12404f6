#include "omegalie/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace omegalie {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw FormatError(where + ": " + what);
}

std::string integer_text(const Json& j, const std::string& where) {
  if (j.is_string())
    return j.get<std::string>();
  if (j.is_number_integer())
    return j.dump();
  fail(where, "expected an integer or a decimal string");
}

std::size_t count_field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key))
    fail(where, std::string("missing field \"") + key + "\"");
  const Json& v = obj.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 1)
    fail(where + "." + key, "expected a positive integer");
  return v.get<std::size_t>();
}

std::size_t index_value(const Json& j, std::size_t bound, const std::string& where) {
  if (!j.is_number_integer())
    fail(where, "expected an integer index");
  const long long v = j.get<long long>();
  if (v < 1 || static_cast<std::size_t>(v) > bound)
    fail(where, "index " + std::to_string(v) + " out of range 1.." + std::to_string(bound));
  return static_cast<std::size_t>(v - 1);
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key))
    fail(where, std::string("missing field \"") + key + "\"");
  return obj.at(key);
}

} // namespace

Json to_json(const Rational& x) { return Json::array({x.get_num().get_str(), x.get_den().get_str()}); }

Json to_json(const EisScalar& x) {
  Json j = Json::object();
  j["a"] = to_json(x.a());
  j["b"] = to_json(x.b());
  return j;
}

Json to_json(const StructureTensor& c) {
  Json entries = Json::array();
  const std::size_t n = c.dim();
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const EisScalar& v = c(m, i, k, l);
          if (v.is_zero())
            continue;
          Json e = Json::object();
          e["m"] = m + 1;
          e["i"] = i + 1;
          e["k"] = k + 1;
          e["l"] = l + 1;
          e["value"] = to_json(v);
          entries.push_back(std::move(e));
        }
  Json j = Json::object();
  j["dim"] = n;
  j["entries"] = std::move(entries);
  return j;
}

Json to_json(const CubicMatrix& x) {
  Json entries = Json::array();
  const std::size_t n = x.order();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!x(i, j, k).is_zero())
          entries.push_back(Json::array({i + 1, j + 1, k + 1, to_json(x(i, j, k))}));
  Json j = Json::object();
  j["n"] = n;
  j["entries"] = std::move(entries);
  return j;
}

Json to_json(const EisMatrix& m) {
  Json data = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c)
      row.push_back(to_json(m(r, c)));
    data.push_back(std::move(row));
  }
  Json j = Json::object();
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["data"] = std::move(data);
  return j;
}

Json to_json(const CheckReport& r, const std::vector<std::string>& layout) {
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    Json e = Json::object();
    for (std::size_t i = 0; i < v.indices.size(); ++i)
      e[i < layout.size() ? layout[i] : "x" + std::to_string(i + 1)] = v.indices[i];
    e["residual"] = to_json(v.residual);
    violations.push_back(std::move(e));
  }
  Json j = Json::object();
  j["passed"] = r.passed;
  j["checked"] = r.checked;
  j["violation_count"] = r.violation_count;
  j["violations"] = std::move(violations);
  return j;
}

Json to_json(const ClassReport& r) {
  Json inv = Json::object();
  inv["is_zero"] = r.invariants.is_zero;
  inv["in_W"] = r.invariants.in_W;
  inv["disc_zero"] = r.invariants.disc_zero;
  inv["in_V"] = r.invariants.in_V;
  Json j = Json::object();
  j["label"] = to_string(r.label);
  j["invariants"] = std::move(inv);
  j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  return j;
}

Json to_json(const IsoResult& r) {
  Json j = Json::object();
  j["isomorphic_witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  j["reason"] = r.reason;
  return j;
}

Rational rational_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2)
    fail(where, "expected [numerator, denominator]");
  try {
    return parse_rational(integer_text(j[0], where + "[0]"), integer_text(j[1], where + "[1]"));
  } catch (const std::invalid_argument& e) {
    fail(where, e.what());
  }
}

EisScalar scalar_from_json(const Json& j, const std::string& where) {
  if (!j.is_object())
    fail(where, "expected an object {\"a\": [n, d], \"b\": [n, d]}");
  for (const auto& [key, _] : j.items())
    if (key != "a" && key != "b")
      fail(where, "unexpected field \"" + key + "\"");
  const Rational a = j.contains("a") ? rational_from_json(j["a"], where + ".a") : Rational(0);
  const Rational b = j.contains("b") ? rational_from_json(j["b"], where + ".b") : Rational(0);
  return {a, b};
}

StructureTensor tensor_from_json(const Json& j) {
  const std::size_t n = count_field(j, "dim", "$");
  StructureTensor c(n);
  const Json& entries = field(j, "entries", "$");
  if (!entries.is_array())
    fail("$.entries", "expected an array");
  std::set<std::size_t> seen;
  for (std::size_t e = 0; e < entries.size(); ++e) {
    const std::string where = "$.entries[" + std::to_string(e) + "]";
    const Json& entry = entries[e];
    const std::size_t m = index_value(field(entry, "m", where), n, where + ".m");
    const std::size_t i = index_value(field(entry, "i", where), n, where + ".i");
    const std::size_t k = index_value(field(entry, "k", where), n, where + ".k");
    const std::size_t l = index_value(field(entry, "l", where), n, where + ".l");
    if (!seen.insert(c.offset(m, i, k, l)).second)
      fail(where, "duplicate entry");
    c(m, i, k, l) = scalar_from_json(field(entry, "value", where), where + ".value");
  }
  return c;
}

CubicMatrix cubic_from_json(const Json& j) {
  const std::size_t n = count_field(j, "n", "$");
  CubicMatrix x(n);
  const Json& entries = field(j, "entries", "$");
  if (!entries.is_array())
    fail("$.entries", "expected an array");
  std::set<std::array<std::size_t, 3>> seen;
  for (std::size_t e = 0; e < entries.size(); ++e) {
    const std::string where = "$.entries[" + std::to_string(e) + "]";
    const Json& entry = entries[e];
    if (!entry.is_array() || entry.size() != 4)
      fail(where, "expected [i, j, k, value]");
    std::array<std::size_t, 3> idx{};
    for (std::size_t t = 0; t < 3; ++t)
      idx[t] = index_value(entry[t], n, where + "[" + std::to_string(t) + "]");
    if (!seen.insert(idx).second)
      fail(where, "duplicate entry");
    x(idx[0], idx[1], idx[2]) = scalar_from_json(entry[3], where + "[3]");
  }
  return x;
}

EisMatrix rect_from_json(const Json& j) {
  const std::size_t rows = count_field(j, "rows", "$");
  const std::size_t cols = count_field(j, "cols", "$");
  const Json& data = field(j, "data", "$");
  if (!data.is_array() || data.size() != rows)
    fail("$.data", "expected " + std::to_string(rows) + " rows");
  EisMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string where = "$.data[" + std::to_string(r) + "]";
    if (!data[r].is_array() || data[r].size() != cols)
      fail(where, "expected " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = scalar_from_json(data[r][c], where + "[" + std::to_string(c) + "]");
  }
  return m;
}

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // locate the byte offset as line:column
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::ostringstream os;
    os << source << ":" << line << ":" << col << ": invalid JSON (" << e.what() << ")";
    throw FormatError(os.str());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw FormatError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), path.string());
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error(path.string() + ": cannot open for writing");
  out << dump(j);
  if (!out)
    throw std::runtime_error(path.string() + ": write failed");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

} // namespace omegalie
