#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qlk/gaussian_rational.hpp"

namespace qlk {

// Chord diagram on an oriented circle, stored in canonical form: the Gauss word
// (endpoint sequence with chords numbered by first visit) of the lexicographically
// smallest rotation.
class ChordDiagram {
 public:
  ChordDiagram() = default;  // the diagram with no chords

  // Any labelling in which every label occurs exactly twice.
  static ChordDiagram from_word(const std::vector<int>& word);
  // Letters, each used exactly twice, e.g. "ABAB".
  static ChordDiagram parse(const std::string& text);

  int chords() const { return static_cast<int>(word_.size()) / 2; }
  const std::vector<int>& word() const { return word_; }
  // pairing()[k] is the position of the other endpoint of the chord at position k.
  std::vector<int> pairing() const;
  std::string to_string() const;

  friend bool operator==(const ChordDiagram& a, const ChordDiagram& b) { return a.word_ == b.word_; }
  friend bool operator!=(const ChordDiagram& a, const ChordDiagram& b) { return !(a == b); }
  friend bool operator<(const ChordDiagram& a, const ChordDiagram& b) {
    if (a.word_.size() != b.word_.size()) return a.word_.size() < b.word_.size();
    return a.word_ < b.word_;
  }

 private:
  std::vector<int> word_;
};

// Relabels chords by order of first appearance.
std::vector<int> first_visit_labels(const std::vector<int>& word);

// Formal linear combination of diagrams with exact coefficients.
class DiagramSum {
 public:
  DiagramSum() = default;
  explicit DiagramSum(const ChordDiagram& d, const GaussianRational& c = GaussianRational(1)) {
    add(d, c);
  }

  void add(const ChordDiagram& d, const GaussianRational& c);
  const std::map<ChordDiagram, GaussianRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Chord count when all terms share one, otherwise -1.
  int grade() const;

  DiagramSum& operator+=(const DiagramSum& o);
  DiagramSum& operator-=(const DiagramSum& o);
  DiagramSum& operator*=(const GaussianRational& c);
  friend DiagramSum operator+(DiagramSum a, const DiagramSum& b) { return a += b; }
  friend DiagramSum operator-(DiagramSum a, const DiagramSum& b) { return a -= b; }
  friend DiagramSum operator*(DiagramSum a, const GaussianRational& c) { return a *= c; }
  friend bool operator==(const DiagramSum& a, const DiagramSum& b) { return a.terms_ == b.terms_; }
  friend bool operator<(const DiagramSum& a, const DiagramSum& b) { return a.terms_ < b.terms_; }

 private:
  std::map<ChordDiagram, GaussianRational> terms_;
};

class TensorDiagramSum {
 public:
  void add(const ChordDiagram& a, const ChordDiagram& b, const GaussianRational& c);
  const std::map<std::pair<ChordDiagram, ChordDiagram>, GaussianRational>& terms() const {
    return terms_;
  }
  TensorDiagramSum& operator+=(const TensorDiagramSum& o);
  friend bool operator==(const TensorDiagramSum& a, const TensorDiagramSum& b) {
    return a.terms_ == b.terms_;
  }

 private:
  std::map<std::pair<ChordDiagram, ChordDiagram>, GaussianRational> terms_;
};

// All n-chord diagrams up to rotation, each once, in canonical order.
std::vector<ChordDiagram> enumerate_diagrams(int n);

// Cuts both circles at canonical position 0 and joins them.
ChordDiagram connected_sum(const ChordDiagram& a, const ChordDiagram& b);
DiagramSum connected_sum(const DiagramSum& a, const DiagramSum& b);

// The diagram formed by the chords whose bit is set in mask (bit = first-visit label).
ChordDiagram restrict_chords(const ChordDiagram& d, unsigned mask);

// Sum over chord subsets S of d|S (x) d|complement.
TensorDiagramSum coproduct(const ChordDiagram& d);
TensorDiagramSum coproduct(const DiagramSum& d);

// The same chords read against the opposite orientation of the circle.
ChordDiagram reverse_orientation(const ChordDiagram& d);

// Every four-term combination with n chords: two active chords meeting three arcs,
// spectators elsewhere; sign-normalized and deduplicated.
std::vector<DiagramSum> four_t_generators(int n);

// Rank of a family of diagram sums inside the span of the given basis, by exact
// elimination over Q(i).
int span_rank(const std::vector<DiagramSum>& family, const std::vector<ChordDiagram>& basis);

// dim V_n - rank(4T_n).
int quotient_dimension(int n);

}  // namespace qlk
