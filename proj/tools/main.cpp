#include "entrogeo/cli.hpp"

int main(int argc, char** argv) { return entrogeo::cli::run(argc, argv); }
