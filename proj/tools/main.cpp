#include "cli.hpp"

int main(int argc, char** argv) { return sofd::cli::dispatch(argc, argv); }
