#include "cli.hpp"

int main(int argc, char** argv) { return sfcrel::cli::run(argc, argv); }
