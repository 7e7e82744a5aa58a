#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "fsq/cache.hpp"
#include "fsq/constructive.hpp"
#include "fsq/serialize.hpp"

using namespace fsq;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("fsq-test-" + std::to_string(::getpid()) + "-" +
            std::to_string(counter()++));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

bool reports_equal(const SweepReport& a, const SweepReport& b) {
  return a.rho == b.rho && a.bound == b.bound && a.kvals == b.kvals &&
         a.exceptional == b.exceptional && a.infinite == b.infinite &&
         a.max_finite_k == b.max_finite_k &&
         a.infinite_list_complete == b.infinite_list_complete;
}

}  // namespace

TEST_CASE("certificate JSON matches the pinned schema") {
  Certificate cert = represent_avoiding(ForbiddenValue(5), 79);
  CHECK(certificate_to_json(cert) ==
        "{\"n\":79,\"rho\":5,\"parts\":[8,3,2,1,1],"
        "\"method\":\"small-case-dp\",\"minimal\":true}\n");
}

TEST_CASE("certificate JSON round-trips through the validator") {
  for (auto [rho, n] : std::vector<std::pair<uint64_t, uint64_t>>{
           {5, 79}, {1, 550}, {2, 24}, {9, 1000003}}) {
    Certificate cert = represent_avoiding(ForbiddenValue(rho), n);
    Certificate back = certificate_from_json(certificate_to_json(cert));
    CHECK(back.n == cert.n);
    CHECK(back.rho == cert.rho);
    CHECK(back.parts == cert.parts);
    CHECK(back.method == cert.method);
    CHECK(back.minimal == cert.minimal);
    validate_certificate(back);
  }
}

TEST_CASE("sweep CSV lists exceptional rows ascending") {
  SweepReport report = sweep(ForbiddenValue(1), 60);
  std::string csv = sweep_to_csv(report);
  CHECK(csv.find("n,k\n") == 0);
  CHECK(csv.find("23,inf\n") != std::string::npos);
  CHECK(csv.find("39,6\n") != std::string::npos);
  CHECK(csv.find("30,5\n") != std::string::npos);
  // ascending order: 23 before 30 before 39
  CHECK(csv.find("23,inf") < csv.find("30,5"));
  CHECK(csv.find("30,5") < csv.find("39,6"));
}

TEST_CASE("diff markdown states PASS with zero mismatches") {
  DiffReport d;
  d.pass = true;
  CHECK(diff_to_markdown(d) == "PASS (0 mismatches)\n");
  d.pass = false;
  d.mismatches.push_back({8, "8", "4"});
  std::string md = diff_to_markdown(d);
  CHECK(md.find("FAIL (1 mismatches)") == 0);
  CHECK(md.find("| 8 | 8 | 4 |") != std::string::npos);
}

TEST_CASE("sweep JSON serializes infinity as the string inf") {
  SweepReport report = sweep(ForbiddenValue(1), 29);
  std::string json = sweep_to_json(report);
  CHECK(json.find("\"infinite\":[1,2,3,5,6,7,10,11,14,15,19,23]") !=
        std::string::npos);
  CHECK(json.find("\"5\":[") == std::string::npos);  // no k=5 below 30
}

TEST_CASE("format parsing") {
  CHECK(parse_format("json") == ExportFormat::Json);
  CHECK(parse_format("csv") == ExportFormat::Csv);
  CHECK(parse_format("markdown") == ExportFormat::Markdown);
  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}

TEST_CASE("cache cold and warm paths reproduce direct sweeps") {
  TempDir dir;
  SweepReport direct = sweep(ForbiddenValue(3), 200);
  SweepReport cold = cache_get_or_compute(ForbiddenValue(3), 200, dir.path.string());
  CHECK(reports_equal(direct, cold));
  CHECK(std::filesystem::exists(cache_file_path(dir.path.string(), 3)));

  // warm: served from the superset on disk
  SweepReport warm = cache_get_or_compute(ForbiddenValue(3), 120, dir.path.string());
  CHECK(reports_equal(warm, sweep(ForbiddenValue(3), 120)));

  // a larger request recomputes and overwrites
  SweepReport bigger = cache_get_or_compute(ForbiddenValue(3), 500, dir.path.string());
  CHECK(reports_equal(bigger, sweep(ForbiddenValue(3), 500)));
}

TEST_CASE("corrupt cache files are recomputed") {
  TempDir dir;
  cache_get_or_compute(ForbiddenValue(2), 100, dir.path.string());
  std::string path = cache_file_path(dir.path.string(), 2);

  {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << "garbage";
  }
  SweepReport fixed = cache_get_or_compute(ForbiddenValue(2), 100, dir.path.string());
  CHECK(reports_equal(fixed, sweep(ForbiddenValue(2), 100)));

  // truncated payload
  {
    std::ifstream in(path, std::ios::binary);
    std::string full((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << full.substr(0, full.size() / 2);
  }
  SweepReport again = cache_get_or_compute(ForbiddenValue(2), 100, dir.path.string());
  CHECK(reports_equal(again, sweep(ForbiddenValue(2), 100)));
}

TEST_CASE("write_file errors on unwritable paths") {
  CHECK_THROWS_AS(write_file("/nonexistent-dir/x/y.json", "{}"),
                  std::runtime_error);
}
