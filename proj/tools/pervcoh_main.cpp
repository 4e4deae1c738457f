#include "pervcoh/cli.hpp"

int main(int argc, char** argv) { return pervcoh::run_cli(argc, argv); }
