#include "dp5/cli.hpp"

int main(int argc, char** argv) { return dp5::cli::run(argc, argv); }
