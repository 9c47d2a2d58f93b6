#include "nuframe/cli.hpp"

int main(int argc, char** argv) { return nuframe::cli::run(argc, argv); }
