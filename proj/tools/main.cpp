#include "bott/cli.hpp"
#include "bott/error.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    bott::CommandResult r;
    try {
        r = bott::run(args);
    } catch (const bott::Error& e) {
        std::cerr << bott::Json{{"error", bott::error_name(e.code())}, {"message", e.what()}}.dump() << "\n";
        return 1;
    }
    std::cout << r.out;
    std::cerr << r.err;
    return r.exit_code;
}
