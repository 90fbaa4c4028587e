#include <filesystem>

#include "helpers.hpp"

using namespace ainf;
using namespace ainf::test;
using nlohmann::ordered_json;

namespace {

std::string error_where(const ordered_json& j) {
  try {
    (void)load_document(j);
  } catch (const DocumentError& e) {
    return e.where();
  }
  return "";
}

}  // namespace

TEST_SUITE("documents") {
  TEST_CASE("save then load is the identity on the corpus") {
    for (const auto& d : builtin_corpus()) {
      CAPTURE(d.name);
      const ordered_json j = save_document(d);
      const AlgebraDocument back = load_document(j);
      CHECK(save_document(back) == j);
      CHECK(*back.algebra == *d.algebra);
      CHECK(back.expect_fail == d.expect_fail);
      CHECK(back.gauge.size() == d.gauge.size());
    }
  }

  TEST_CASE("files round-trip byte for byte") {
    const auto dir = std::filesystem::temp_directory_path() / "ainf-doc-test";
    std::filesystem::create_directories(dir);
    const AlgebraDocument d = builtin_document("ext1-pulled");
    save_file(d, dir / "a.json");
    save_file(load_file(dir / "a.json"), dir / "b.json");
    CHECK(std::filesystem::file_size(dir / "a.json") == std::filesystem::file_size(dir / "b.json"));
    CHECK(save_document(load_file(dir / "b.json")) == save_document(d));
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("errors carry a JSON pointer") {
    const ordered_json good = save_document(builtin_document("ext1"));
    ordered_json j = good;
    j["m"][1]["output"] = 0;  // 1 * theta landing in degree 0
    CHECK(error_where(j) == "/m/1");
    j = good;
    j["surprise"] = 1;
    CHECK(error_where(j) == "");  // pointer to the root object
    CHECK_THROWS_AS((void)load_document(j), DocumentError);
    j = good;
    j["m"][0]["coeff"] = "1/0";
    CHECK(error_where(j).rfind("/m/0", 0) == 0);
    j = good;
    j["schema_version"] = 99;
    CHECK(error_where(j) == "/schema_version");
    j = good;
    j["basis"]["unit"] = 1;
    CHECK_FALSE(error_where(j).empty());
  }

  TEST_CASE("builtin names and documents agree") {
    const auto names = builtin_names();
    CHECK(names.size() == builtin_corpus().size());
    CHECK(builtin_document(names.back()).name == names.back());
    CHECK_THROWS_AS(builtin_document("nope"), std::out_of_range);
    CHECK_THROWS_AS((void)builtin_document("ext1").morphism("nope"), DocumentError);
  }
}
