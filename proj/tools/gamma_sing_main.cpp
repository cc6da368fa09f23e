#include <gsing/cli.hpp>

int main(int argc, char** argv) { return gsing::cli::main_entry(argc, argv); }
