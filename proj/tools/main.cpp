#include "uniformize/cli.hpp"

int main(int argc, char** argv) { return uniformize::run_cli(argc, argv); }
