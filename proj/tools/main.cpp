#include "hamfree/cli.hpp"

int main(int argc, char** argv) { return hamfree::run_cli(argc, argv); }
