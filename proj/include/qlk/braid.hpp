#pragma once

#include <string>
#include <vector>

namespace qlk {

// Word in the Artin generators; letter +i is sigma_i, -i its inverse.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  friend bool operator==(const BraidWord& a, const BraidWord& b) {
    return a.strands == b.strands && a.letters == b.letters;
  }
};

// Tokens "s<i>" or "-s<i>" separated by whitespace.
BraidWord parse_braid(const std::string& text, int strands);
std::string to_string(const BraidWord& b);
// "s1 s1 s1 @2" style key: word plus strand count.
std::string braid_key(const BraidWord& b);

// The permutation of the closure: strand at position k ends at permutation()[k].
std::vector<int> permutation(const BraidWord& b);
int closure_components(const BraidWord& b);
bool is_knot(const BraidWord& b);
int writhe(const BraidWord& b);

BraidWord mirror(const BraidWord& b);
// Closure with the opposite orientation: the word read backwards.
BraidWord reverse(const BraidWord& b);

// Conjugates by every generator and its inverse, cyclic rotations of the word,
// and the positive and negative stabilizations.
std::vector<BraidWord> markov_variants(const BraidWord& b);

struct KnotPresentation {
  BraidWord braid;
  int framing = 0;
  std::string name;
};

// unknot, trefoil-right (T+), trefoil-left (T-), figure-eight.
KnotPresentation catalog_knot(const std::string& name);
std::vector<std::string> catalog_names();

}  // namespace qlk
