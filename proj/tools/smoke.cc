//
// Project PatChem - Copyright 2026 PatChem Contributors.
// SPDX-License-Identifier: Apache-2.0
//

#include <iostream>

#include "patchem/chem/smiles.hpp"

int main(int argc, char **argv) {
  for (int i = 1; i < argc; ++i) {
    try {
      std::cout << argv[i] << " -> " << patchem::chem::standardize(argv[i])
                << "\n";
    } catch (const patchem::chem::SmilesError &e) {
      std::cout << argv[i] << " !! " << e.what() << "\n";
    }
  }
  return 0;
}
