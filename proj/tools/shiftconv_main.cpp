#include "shiftconv/cli.hpp"

int main(int argc, char** argv) { return shiftconv::run_cli(argc, argv); }
