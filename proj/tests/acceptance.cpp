#include "splitric/validate.hpp"

#include <iostream>

int main() { return splitric::run_validation(std::cout) == 0 ? 0 : 1; }
