#include "angelesco/cli.hpp"

int main(int argc, char** argv) { return angelesco::cli::run_cli(argc, argv); }
