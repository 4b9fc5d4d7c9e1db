#include "monlat/cli.hpp"

int main(int argc, char** argv) { return monlat::run_command(argc, argv); }
