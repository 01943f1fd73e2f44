#include "skein/cli.hpp"

int main(int argc, char** argv) { return skein::cli::run(argc, argv); }
