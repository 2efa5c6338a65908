#include "rootgate/cli.hpp"

int main(int argc, char** argv) { return rootgate::cli::run(argc, argv); }
