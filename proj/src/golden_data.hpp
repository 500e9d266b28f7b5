#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tomseq::detail {

struct GoldenSpec {
  std::string id;
  char family;
  std::string description;
  std::vector<std::string> columns;
  std::vector<std::vector<std::int64_t>> rows;  // rows[n - 1]
};

const std::vector<GoldenSpec>& golden_specs();

}  // namespace tomseq::detail
