#include "wordcx/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return wordcx::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
