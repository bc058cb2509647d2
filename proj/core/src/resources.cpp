#include "nctk/resources.hpp"

#include <cstdlib>

#ifndef NCTK_DEFAULT_DATA_DIR
#define NCTK_DEFAULT_DATA_DIR "data"
#endif

namespace nctk {

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("NCTK_DATA_DIR"); env && *env) return env;
  return NCTK_DEFAULT_DATA_DIR;
}

std::filesystem::path data_file(std::string_view name) { return data_dir() / name; }

}  // namespace nctk
