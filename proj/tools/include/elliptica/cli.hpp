#pragma once

#include <string>
#include <vector>

namespace elliptica::cli {

struct Result {
  int code = 0;  // 0 success/PASS, 1 negative verdict, 2 usage or parse error
  std::string out;
  std::string err;
};

// args excludes the program name.
Result run(const std::vector<std::string>& args);

}  // namespace elliptica::cli
