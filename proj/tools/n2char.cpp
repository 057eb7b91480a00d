#include <iostream>
#include <string>
#include <vector>

#include "n2char/cli.hpp"

int main(int argc, char** argv)
{
	std::vector<std::string> args(argv + 1, argv + argc);
	return n2char::cli::run(args, std::cout, std::cerr);
}
