#include "cli.hpp"

int main(int argc, char** argv) { return semicomm::cli::run(argc, argv); }
