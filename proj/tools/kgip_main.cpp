#include "kgip/cli.hpp"

int main(int argc, char** argv) { return kgip::cli::main_entry(argc, argv); }
