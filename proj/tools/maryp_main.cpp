#include <maryp/cli.hpp>

int main(int argc, char** argv) { return maryp::cli::run(argc, argv); }
