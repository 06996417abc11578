#include "cli.hpp"

int main(int argc, char** argv) { return surfcol::cli::run(argc, argv); }
