// Builds the pure braid A_13 on four strands, compiles it to a word, and reads
// the linking of strands 1 and 3 back from the word around strand 4.

#include <iostream>

#include "gbraid/gbraid.hpp"

int main() {
  using namespace gbraid;

  const MoveProgram a13 = pure_braid_generator_program(4, 1, 3);
  const CompileOutput out = compile(a13);
  std::cout << "word: " << to_string(out.word) << "\n";

  const ClassifiedWord cw = classify_word(out.word);
  std::cout << "realisable: " << (cw.realisable() ? "yes" : "no") << "\n";

  const CylWord cyl = reconstruct_axis(out.word, 4);
  std::cout << "cylindrical: " << to_string(cyl) << "\n";
  std::cout << to_string(annular_invariants(cyl));
  std::cout << "geometric linking(1,3): " << to_string(geometric_linking(a13, 1, 3)) << "\n";

  // A full twist moves every point but never makes three of them collinear.
  std::cout << "full twist word: \"" << to_string(compile(full_twist_program(4, 1)).word) << "\"\n";
  std::cout << "witness for A_13: " << to_string(kernel_witness(out.word)) << "\n";
}
