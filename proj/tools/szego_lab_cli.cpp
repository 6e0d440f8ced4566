#include "szego_lab/cli.hpp"

int main(int argc, char** argv) { return szego_lab::run_cli(argc, argv); }
