#include <exception>
#include <iostream>

#include "dsclust/cli.hpp"

int main(int argc, char** argv) {
    try {
        const auto config = dsclust::cli::parse_args({argv + 1, argv + argc});
        return dsclust::cli::run_cli(config);
    } catch (const dsclust::UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
