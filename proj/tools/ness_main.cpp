#include "ness/cli.hpp"

int main(int argc, char** argv) { return ness::cli::run_cli(argc, argv); }
