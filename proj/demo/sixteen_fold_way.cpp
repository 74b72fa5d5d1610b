// Builds the free-fermion family, checks one member, and prints the Gauss
// sums of the sixteen minimal modular extensions of sVec.

#include <iostream>

#include "mtc/extension.hpp"
#include "mtc/free_fermion.hpp"
#include "mtc/modular_data.hpp"

int main() {
  const mtc::GradedData f16 = mtc::ising_like(16);
  std::cout << mtc::validate(f16.base) << "\n";
  std::cout << mtc::check_minimal_extension(f16) << "\n";
  std::cout << mtc::sixteen_table(f16);
  return 0;
}
