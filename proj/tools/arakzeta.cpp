#include "arakzeta/cli.hpp"

int main(int argc, char** argv) { return arakzeta::cli::run(argc, argv); }
