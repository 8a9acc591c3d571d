// Walkthrough: build set codes, evaluate membership, complement, and read a
// coded function's value bit by bit.

#include <iostream>

#include "ramsel/ramsel.hpp"

using namespace ramsel;

int main() {
  // Union of the cylinders "00" and "10" (coordinates 3 and 5).
  LabeledTree u = cylinder_union_tree({3, 5});
  for (const char* bits : {"0010", "0110", "1010"}) {
    std::cout << "x=" << bits << " in union(00,10): "
              << (tree_member(io::bits_from_string(bits), u) ? "yes" : "no")
              << "\n";
  }

  LabeledTree g = complement_tree(u);
  std::cout << "complement code: " << io::tree_to_json(g).dump() << "\n";
  std::cout << "x=0110 in the complement: "
            << (tree_member(io::bits_from_string("0110"), g) ? "yes" : "no")
            << "\n";

  // Coordinate n of the coded function tests the cylinder 0^(n+1).
  FuncCode F;
  F.coords = {cylinder_tree(1), cylinder_tree(3), cylinder_tree(7)};
  std::cout << "coded function at 000..: "
            << io::bits_to_string(omega_eval(io::bits_from_string("0000"), F,
                                             3))
            << "\n";
  std::cout << "coded function at 010..: "
            << io::bits_to_string(omega_eval(io::bits_from_string("0100"), F,
                                             3))
            << "\n";
  return 0;
}
