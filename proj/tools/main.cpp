#include "stieltjes/cli.hpp"

int main(int argc, char** argv) { return stieltjes::cli::run(argc, argv); }
