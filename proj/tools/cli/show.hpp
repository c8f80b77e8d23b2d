#pragma once

#include <string>
#include <vector>

#include "sl2coh/harness/config.hpp"

namespace sl2coh::cli {

struct ShowArgs {
  int p = 2;
  int r = 1;
  int j = 0;
  int m = 1;
};

const std::vector<std::string>& show_selectors();
/// Throws harness::ConfigError for unknown selectors and parameters beyond the caps.
std::string show(const std::string& selector, const ShowArgs& args, const harness::Caps& caps = {});

}  // namespace sl2coh::cli
