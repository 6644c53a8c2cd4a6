#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gsk/report.hpp"

namespace gsk::cli {

namespace fs = std::filesystem;

RunReport cmd_euler(const fs::path& complex_file);
RunReport cmd_marks(const fs::path& group_file);
RunReport cmd_burnside_mul(const fs::path& group_file, const std::vector<std::int64_t>& a,
                           const std::vector<std::int64_t>& b);
RunReport cmd_mackey_check(const fs::path& group_file);
RunReport cmd_span_compose(const fs::path& first, const fs::path& second);
RunReport cmd_k0(const fs::path& presentation_file, const std::optional<std::pair<std::string, std::string>>& classes,
                 const std::optional<fs::path>& invariant_file);
RunReport cmd_slice(int p);
RunReport cmd_selftest(std::uint64_t seed);

/// Text lines followed by one PASS/FAIL line per check.
std::string render_text(const RunReport& r);

}  // namespace gsk::cli
