#include "qlk/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "qlk/errors.hpp"

namespace qlk {

namespace {

void check_letters(const BraidWord& b) {
  if (b.strands < 1) throw UsageError("a braid needs at least one strand");
  for (int l : b.letters)
    if (l == 0 || std::abs(l) > b.strands - 1)
      throw UsageError("generator index out of range for " + std::to_string(b.strands) + " strands");
}

}  // namespace

BraidWord parse_braid(const std::string& text, int strands) {
  BraidWord b;
  b.strands = strands;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    int sign = 1;
    size_t pos = 0;
    if (tok[0] == '-') {
      sign = -1;
      pos = 1;
    }
    if (pos >= tok.size() || (tok[pos] != 's' && tok[pos] != 'S'))
      throw UsageError("bad braid token '" + tok + "'");
    std::string digits = tok.substr(pos + 1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("bad braid token '" + tok + "'");
    b.letters.push_back(sign * std::stoi(digits));
  }
  check_letters(b);
  return b;
}

std::string to_string(const BraidWord& b) {
  std::string s;
  for (int l : b.letters) {
    if (!s.empty()) s += ' ';
    s += (l < 0 ? "-s" : "s") + std::to_string(std::abs(l));
  }
  return s;
}

std::string braid_key(const BraidWord& b) { return to_string(b) + " @" + std::to_string(b.strands); }

std::vector<int> permutation(const BraidWord& b) {
  check_letters(b);
  // where[k] = strand currently at position k
  std::vector<int> where(static_cast<size_t>(b.strands));
  std::iota(where.begin(), where.end(), 0);
  for (int l : b.letters) std::swap(where[std::abs(l) - 1], where[std::abs(l)]);
  std::vector<int> perm(static_cast<size_t>(b.strands));
  for (int k = 0; k < b.strands; ++k) perm[where[k]] = k;
  return perm;
}

int closure_components(const BraidWord& b) {
  std::vector<int> perm = permutation(b);
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (size_t k = 0; k < perm.size(); ++k) {
    if (seen[k]) continue;
    ++cycles;
    for (size_t x = k; !seen[x]; x = static_cast<size_t>(perm[x])) seen[x] = true;
  }
  return cycles;
}

bool is_knot(const BraidWord& b) { return closure_components(b) == 1; }

int writhe(const BraidWord& b) {
  int w = 0;
  for (int l : b.letters) w += l > 0 ? 1 : -1;
  return w;
}

BraidWord mirror(const BraidWord& b) {
  BraidWord r = b;
  for (int& l : r.letters) l = -l;
  return r;
}

BraidWord reverse(const BraidWord& b) {
  BraidWord r = b;
  r.letters.assign(b.letters.rbegin(), b.letters.rend());
  return r;
}

std::vector<BraidWord> markov_variants(const BraidWord& b) {
  check_letters(b);
  std::vector<BraidWord> out;
  for (int i = 1; i < b.strands; ++i)
    for (int s : {1, -1}) {
      BraidWord c = b;
      c.letters.insert(c.letters.begin(), s * i);
      c.letters.push_back(-s * i);
      out.push_back(c);
    }
  for (size_t r = 1; r < b.letters.size(); ++r) {
    BraidWord c = b;
    std::rotate(c.letters.begin(), c.letters.begin() + static_cast<long>(r), c.letters.end());
    out.push_back(c);
  }
  for (int s : {1, -1}) {
    BraidWord c = b;
    c.strands = b.strands + 1;
    c.letters.push_back(s * b.strands);
    out.push_back(c);
  }
  return out;
}

KnotPresentation catalog_knot(const std::string& name) {
  if (name == "unknot") return {parse_braid("", 1), 0, name};
  if (name == "trefoil-right" || name == "T+") return {parse_braid("s1 s1 s1", 2), 0, "trefoil-right"};
  if (name == "trefoil-left" || name == "T-") return {parse_braid("-s1 -s1 -s1", 2), 0, "trefoil-left"};
  if (name == "figure-eight") return {parse_braid("s1 -s2 s1 -s2", 3), 0, name};
  throw UsageError("unknown knot '" + name + "'");
}

std::vector<std::string> catalog_names() {
  return {"unknot", "trefoil-right", "trefoil-left", "figure-eight"};
}

}  // namespace qlk
