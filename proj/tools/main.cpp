#include "sgb/cli.hpp"

int main(int argc, char** argv) { return sgb::cli_run(argc, argv); }
