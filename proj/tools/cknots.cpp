#include "ck/cli.hpp"

int main(int argc, char** argv) { return ck::run(argc, argv); }
