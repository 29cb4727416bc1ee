#include "sphconv/cli.hpp"

int main(int argc, char** argv) { return sphconv::cli_main(argc, argv); }
