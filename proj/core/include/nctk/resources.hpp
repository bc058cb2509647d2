#pragma once

#include <filesystem>
#include <string_view>

namespace nctk {

// Directory holding the bundled data files: $NCTK_DATA_DIR if set, else the
// directory configured at build time.
std::filesystem::path data_dir();
std::filesystem::path data_file(std::string_view name);

}  // namespace nctk
