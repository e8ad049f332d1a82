#pragma once

#include <complex>
#include <string>
#include <vector>

namespace arakzeta::cli {

// "re", "re,im", or "start:stop:count" with complex endpoints; count >= 1.
std::vector<std::complex<double>> parse_range(const std::string& text);

// Exit codes: 0 success, 1 failed check or computation, 2 usage or input error.
int run(int argc, char** argv);

}  // namespace arakzeta::cli
