#include "treenergy/cli.hpp"

int main(int argc, char** argv) { return treenergy::run_cli(argc, argv); }
