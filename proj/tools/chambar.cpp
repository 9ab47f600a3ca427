#include <CLI11.hpp>

#include <cstdio>

int main(int argc, char** argv) {
    CLI::App app{"symbolic-numeric toolkit for barycentric vector field tuples"};
    app.require_subcommand(0, 1);
    CLI11_PARSE(app, argc, argv);
    if (app.get_subcommands().empty()) {
        std::puts(app.help().c_str());
        return 0;
    }
    return 0;
}
