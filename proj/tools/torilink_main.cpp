#include "torilink/cli.hpp"

int main(int argc, char** argv) { return torilink::run_cli(argc, argv); }
