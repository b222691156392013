#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include "graphlink/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string input;
    // Only slurp stdin when a command asks for it.
    for (const auto& a : args)
        if (a == "-") {
            input.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
            break;
        }
    if (args.empty()) args.push_back("--help");
    const auto r = graphlink::run_command(args, input);
    std::cout << r.out;
    std::cerr << r.err;
    return r.exit_code;
}
