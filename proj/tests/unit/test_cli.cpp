#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

int run(const std::string& args) {
  const std::string command = std::string(GBD_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::filesystem::path write(const std::string& name, const std::string& text) {
  auto dir = std::filesystem::temp_directory_path() / "gbd_cli_tests";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / name) << text;
  return dir / name;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("usage errors exit with 2") {
  CHECK(run("") == 2);
  CHECK(run("table") == 2);
  CHECK(run("table --id 7") == 2);
  CHECK(run("figure --id 13 --out /tmp/gbd_cli_f13.csv") == 2);
  CHECK(run("figure --id 1 --points 10 --out /tmp/gbd_cli_f1.csv") == 2);
  CHECK(run("figure --id 1 --out /tmp/gbd_cli_f1.csv --format png") == 2);
  CHECK(run("moments --family tilde3 --n 4 --x 1/3") == 2);
  CHECK(run("moments --family tilde4 --n 6 --x 1/3") == 2);
  CHECK(run("bound --n 10 --function g7") == 2);
  CHECK(run("order --family tilde2 --x 0.3 --n-list 16 32") == 2);
}

TEST_CASE("successful commands exit with 0") {
  CHECK(run("moments --family tilde2 --n 10 --x 1/2") == 0);
  CHECK(run("bound --n 10 --function g1") == 0);
  CHECK(run("figure --id 6 --points 51 --out /tmp/gbd_cli_f6.csv --format csv") == 0);
  CHECK(std::filesystem::exists("/tmp/gbd_cli_f6.csv"));
  CHECK(run("order --family modified1 --x 0.3 --n-list 16 32 64 128 256 --expected -1 --tolerance 0.2") == 0);
  CHECK(run("suite --config " + write("empty.json", R"({"tasks": []})").string()) == 0);
}

TEST_CASE("failed checks exit with 1") {
  CHECK(run("order --family modified1 --x 0.3 --n-list 16 32 64 128 256 --expected -3 --tolerance 0.2") == 1);
  const auto config = write("tilde3.json", R"({"tasks": [
    {"kind": "order", "family": "tilde3", "function": "g3", "x": 0.3, "n_list": [4, 8, 16, 32]}]})");
  CHECK(run("suite --config " + config.string()) == 1);
}

TEST_CASE("config errors exit with 2") {
  CHECK(run("suite --config " + write("broken.json", "{\"tasks\": [\n  {\"kind\": }\n]}").string()) == 2);
  CHECK(run("suite --config /nonexistent/config.json") == 2);
}
}
