#include "qslab/cli.hpp"

int main(int argc, char** argv) { return qslab::cli::run(argc, argv); }
