#include "omegalie/io.hpp"

#include <doctest.h>

#include <filesystem>
#include <functional>
#include <fstream>
#include <random>

using namespace omegalie;

namespace {

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const std::exception& e) {
    return e.what();
  }
  return "";
}

} // namespace

TEST_CASE("scalars") {
  const EisScalar x(make_rational(-3, 4), make_rational(5));
  const Json j = to_json(x);
  CHECK(j.dump() == R"({"a":["-3","4"],"b":["5","1"]})");
  CHECK(scalar_from_json(j) == x);
  CHECK(scalar_from_json(Json::parse(R"({"a":["2","-4"],"b":["0","3"]})")) ==
        EisScalar(make_rational(-1, 2)));
  CHECK(error_of([] { scalar_from_json(Json::parse(R"({"a":["1","0"],"b":["0","1"]})")); })
            .find("$.a") != std::string::npos);
  // hand-written input may omit a zero part and use JSON integers
  CHECK(scalar_from_json(Json::parse(R"({"a":["1","1"]})")) == EisScalar(1));
  CHECK(scalar_from_json(Json::parse(R"({"b":[2,1]})")) == EisScalar::omega() * 2);
  CHECK_THROWS_AS(scalar_from_json(Json::parse(R"({"a":[1.5,1]})")), FormatError);
  CHECK_THROWS_AS(scalar_from_json(Json::parse(R"({"a":["1"]})")), FormatError);
  CHECK_THROWS_AS(scalar_from_json(Json::parse(R"({"a":["1","1"],"c":["1","1"]})")), FormatError);
  CHECK_THROWS_AS(scalar_from_json(Json::parse(R"([1, 2])")), FormatError);
}

TEST_CASE("tensors round-trip bit-identically") {
  std::mt19937_64 rng(83);
  for (std::size_t dim : {1, 2, 3}) {
    const StructureTensor c = random_omega_symmetric(dim, rng);
    const std::string text = dump(to_json(c));
    const StructureTensor back = tensor_from_json(parse_json_text(text));
    CHECK(back == c);
    CHECK(dump(to_json(back)) == text);
  }
  const Json z = to_json(StructureTensor(2));
  CHECK(z["entries"].empty());
  CHECK(tensor_from_json(z).is_zero());
}

TEST_CASE("tensor decoding errors carry locations") {
  const Json good = to_json(canonical(ClassLabel::II));
  Json bad = good;
  bad["entries"][3]["value"]["a"] = "x";
  CHECK(error_of([&] { tensor_from_json(bad); }).find("$.entries[3].value.a") !=
        std::string::npos);
  bad = good;
  bad["entries"][0]["m"] = 3;
  CHECK(error_of([&] { tensor_from_json(bad); }).find("$.entries[0]") != std::string::npos);
  bad = good;
  bad["entries"].push_back(good["entries"][1]);
  CHECK_THROWS_AS(tensor_from_json(bad), FormatError);
  bad = good;
  bad.erase("dim");
  CHECK_THROWS_AS(tensor_from_json(bad), FormatError);
  bad = good;
  bad["dim"] = 0;
  CHECK_THROWS_AS(tensor_from_json(bad), FormatError);

  const std::string msg = error_of([] { parse_json_text("{\n  \"dim\": 2,\n  oops\n}", "t.json"); });
  CHECK(msg.find("t.json:3:") != std::string::npos);
}

TEST_CASE("cubic and rectangular matrices") {
  std::mt19937_64 rng(89);
  const CubicMatrix x = random_like(CubicMatrix(2), rng);
  CHECK(cubic_from_json(to_json(x)) == x);
  const EisMatrix m = random_like(EisMatrix(2, 3), rng);
  CHECK(rect_from_json(to_json(m)) == m);
  CHECK_THROWS_AS(rect_from_json(Json::parse(R"({"rows":1,"cols":2,"data":[[]]})")), FormatError);
  CHECK_THROWS_AS(cubic_from_json(Json::parse(R"({"n":2,"entries":[[3,1,1,{"a":["1","1"],"b":["0","1"]}]]})")),
                  FormatError);
}

TEST_CASE("reports") {
  const Json r = to_json(classify(canonical(ClassLabel::II)));
  CHECK(r["label"] == "II");
  CHECK(r["invariants"]["in_W"] == true);
  CHECK(r["invariants"]["disc_zero"] == false);
  StructureTensor c = canonical(ClassLabel::II);
  c(0, 1, 0, 1) += 1;
  const Json check = to_json(check_omega_symmetry(c), {"m", "i", "k", "l"});
  CHECK(check["passed"] == false);
  CHECK(check["violations"][0].contains("m"));
  const Json iso = to_json(iso_witness(canonical(ClassLabel::II), canonical(ClassLabel::III)));
  CHECK(iso["isomorphic_witness"].is_null());
  CHECK(iso["reason"] == reason_not_isomorphic);
}

TEST_CASE("files") {
  const auto path = std::filesystem::temp_directory_path() / "omegalie_io_test.json";
  const Json j = to_json(canonical(ClassLabel::IV));
  write_json_file(path, j);
  CHECK(read_json_file(path) == j);
  std::ifstream in(path);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text == dump(j));
  CHECK(text.back() == '\n');
  std::filesystem::remove(path);
  CHECK_THROWS(read_json_file(path));
}
