// SPDX-License-Identifier: Apache-2.0
#include <cstdio>

#include "qinv/cli_core.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    auto result = qinv::run(args);
    std::fputs(result.rendered.c_str(), stdout);
    std::fputc('\n', stdout);
    return result.exit_code;
}
