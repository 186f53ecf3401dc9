#include "secnoma/cli.hpp"

int main(int argc, char** argv) { return secnoma::cli_main(argc, argv); }
