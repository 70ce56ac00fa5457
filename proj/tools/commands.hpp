#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace coinv::cli {

/// What every subcommand produces. `lines` is the human rendering of
/// `result`; both are built from the same values.
struct RunReport {
  std::string command;
  std::string inputs;  // canonical text of everything the run read
  nlohmann::ordered_json result = nlohmann::ordered_json::object();
  std::vector<std::string> lines;
  int exit_status = 0;

  std::string digest() const;
  nlohmann::ordered_json to_json() const;
};

std::uint64_t fnv1a64(const std::string& bytes);

/// Reads a file, or standard input for "-".
std::string read_input(const std::string& path);

RunReport cmd_predict(const std::string& group);

struct TorsionArgs {
  std::string group;
  std::string fixture;
  bool random = false;
  std::uint64_t seed = 1;
  std::size_t max_labels = 4;
};
RunReport cmd_torsion(const TorsionArgs& args);

struct SkewArgs {
  std::string x, y, pair;
  std::optional<std::size_t> levels;
};
RunReport cmd_skew(const SkewArgs& args);

RunReport cmd_snf(const std::string& path);

struct ExampleArgs {
  std::string name;
  std::size_t levels = 4;
  std::string digits = "2,2,2";
  std::string group = "2,2";
  std::string long_label = "(1,0)";
  std::string short_label = "(0,1)";
  std::string x, y;
};
RunReport cmd_example(const ExampleArgs& args);

struct ClassifyArgs {
  std::string element;
  std::string group;
  std::string fixture;
};
RunReport cmd_classify(const ClassifyArgs& args);

}  // namespace coinv::cli
