#include "hubloc/cli.hpp"

int main(int argc, char** argv) { return hubloc::cli::run(argc, argv); }
