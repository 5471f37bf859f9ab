#include "fq/cli.hpp"

int main(int argc, char **argv) { return fq::cli::run_command(argc, argv); }
