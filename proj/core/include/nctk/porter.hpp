#pragma once

#include <string>
#include <string_view>

namespace nctk {

// Porter (1980) suffix stripping; expects a lowercase word.
std::string porter_stem(std::string_view word);

}  // namespace nctk
