#include "qlk/chord_diagram.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "qlk/errors.hpp"

namespace qlk {

std::vector<int> first_visit_labels(const std::vector<int>& word) {
  std::map<int, int> relabel;
  std::vector<int> out;
  out.reserve(word.size());
  for (int x : word) {
    auto it = relabel.find(x);
    if (it == relabel.end()) it = relabel.emplace(x, static_cast<int>(relabel.size())).first;
    out.push_back(it->second);
  }
  return out;
}

ChordDiagram ChordDiagram::from_word(const std::vector<int>& word) {
  std::map<int, int> counts;
  for (int x : word) ++counts[x];
  for (const auto& [label, c] : counts)
    if (c != 2) throw UsageError("every chord label must occur exactly twice");
  ChordDiagram d;
  if (word.empty()) return d;
  size_t len = word.size();
  std::vector<int> rotated(len);
  bool first = true;
  for (size_t r = 0; r < len; ++r) {
    for (size_t k = 0; k < len; ++k) rotated[k] = word[(r + k) % len];
    std::vector<int> cand = first_visit_labels(rotated);
    if (first || cand < d.word_) {
      d.word_ = std::move(cand);
      first = false;
    }
  }
  return d;
}

ChordDiagram ChordDiagram::parse(const std::string& text) {
  std::vector<int> word;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (!std::isalpha(static_cast<unsigned char>(c)))
      throw UsageError(std::string("bad chord letter '") + c + "'");
    word.push_back(static_cast<unsigned char>(c));
  }
  return from_word(word);
}

std::vector<int> ChordDiagram::pairing() const {
  std::vector<int> partner(word_.size(), -1);
  std::map<int, int> seen;
  for (int k = 0; k < static_cast<int>(word_.size()); ++k) {
    auto it = seen.find(word_[k]);
    if (it == seen.end()) {
      seen[word_[k]] = k;
    } else {
      partner[k] = it->second;
      partner[it->second] = k;
    }
  }
  return partner;
}

std::string ChordDiagram::to_string() const {
  if (chords() > 26) throw UsageError("too many chords for letter notation");
  std::string s;
  for (int x : word_) s += static_cast<char>('A' + x);
  return s;
}

void DiagramSum::add(const ChordDiagram& d, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(d);
  if (it == terms_.end()) {
    terms_.emplace(d, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

int DiagramSum::grade() const {
  int g = -2;
  for (const auto& [d, c] : terms_) {
    if (g == -2)
      g = d.chords();
    else if (g != d.chords())
      return -1;
  }
  return g == -2 ? -1 : g;
}

DiagramSum& DiagramSum::operator+=(const DiagramSum& o) {
  for (const auto& [d, c] : o.terms_) add(d, c);
  return *this;
}

DiagramSum& DiagramSum::operator-=(const DiagramSum& o) {
  for (const auto& [d, c] : o.terms_) add(d, -c);
  return *this;
}

DiagramSum& DiagramSum::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [d, x] : terms_) x *= c;
  return *this;
}

void TensorDiagramSum::add(const ChordDiagram& a, const ChordDiagram& b, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(a, b);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

TensorDiagramSum& TensorDiagramSum::operator+=(const TensorDiagramSum& o) {
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
  return *this;
}

namespace {

void matchings(std::vector<int>& word, int next_label, std::set<ChordDiagram>& out) {
  auto it = std::find(word.begin(), word.end(), -1);
  if (it == word.end()) {
    out.insert(ChordDiagram::from_word(word));
    return;
  }
  *it = next_label;
  for (auto jt = it + 1; jt != word.end(); ++jt) {
    if (*jt != -1) continue;
    *jt = next_label;
    matchings(word, next_label + 1, out);
    *jt = -1;
  }
  *it = -1;
}

}  // namespace

std::vector<ChordDiagram> enumerate_diagrams(int n) {
  if (n < 0) throw UsageError("negative chord count");
  if (n > 6) throw ResourceError("enumerate_diagrams is limited to n <= 6");
  std::set<ChordDiagram> found;
  std::vector<int> word(static_cast<size_t>(2 * n), -1);
  matchings(word, 0, found);
  return {found.begin(), found.end()};
}

ChordDiagram connected_sum(const ChordDiagram& a, const ChordDiagram& b) {
  std::vector<int> word = a.word();
  for (int x : b.word()) word.push_back(x + a.chords());
  return ChordDiagram::from_word(word);
}

DiagramSum connected_sum(const DiagramSum& a, const DiagramSum& b) {
  DiagramSum r;
  for (const auto& [da, ca] : a.terms())
    for (const auto& [db, cb] : b.terms()) r.add(connected_sum(da, db), ca * cb);
  return r;
}

ChordDiagram restrict_chords(const ChordDiagram& d, unsigned mask) {
  std::vector<int> word;
  for (int x : d.word())
    if (mask & (1u << x)) word.push_back(x);
  return ChordDiagram::from_word(word);
}

TensorDiagramSum coproduct(const ChordDiagram& d) {
  TensorDiagramSum r;
  int n = d.chords();
  if (n > 20) throw ResourceError("coproduct limited to 20 chords");
  unsigned full = (1u << n) - 1;
  for (unsigned mask = 0; mask <= full; ++mask) {
    r.add(restrict_chords(d, mask), restrict_chords(d, full & ~mask), GaussianRational(1));
    if (mask == full) break;
  }
  return r;
}

TensorDiagramSum coproduct(const DiagramSum& d) {
  TensorDiagramSum r;
  for (const auto& [dia, c] : d.terms()) {
    TensorDiagramSum part = coproduct(dia);
    for (const auto& [k, x] : part.terms()) r.add(k.first, k.second, x * c);
  }
  return r;
}

ChordDiagram reverse_orientation(const ChordDiagram& d) {
  std::vector<int> word(d.word().rbegin(), d.word().rend());
  return ChordDiagram::from_word(word);
}

std::vector<DiagramSum> four_t_generators(int n) {
  if (n < 2) throw UsageError("four-term relations need at least two chords");
  if (n > 5) throw ResourceError("four_t_generators is limited to n <= 5");
  const int x = n - 2, y = n - 1;  // the two active chords
  // Endpoint order along arcs 1, 2, 3 for the four terms t12t13, t12t23, t13t12, t23t12.
  const std::vector<std::vector<std::vector<int>>> arcs = {
      {{y, x}, {x}, {y}},
      {{x}, {y, x}, {y}},
      {{x, y}, {x}, {y}},
      {{x}, {x, y}, {y}},
  };
  const int signs[4] = {1, 1, -1, -1};
  std::set<DiagramSum> found;
  for (const ChordDiagram& spectators : enumerate_diagrams(n - 2)) {
    const std::vector<int>& s = spectators.word();
    int len = static_cast<int>(s.size());
    int total = len + 3;
    for (int rot = 0; rot < std::max(len, 1); ++rot) {
      // arc 1 sits at slot 0; arcs 2 and 3 at distinct later slots
      for (int p2 = 1; p2 < total; ++p2)
        for (int p3 = 1; p3 < total; ++p3) {
          if (p3 == p2) continue;
          DiagramSum rel;
          for (int t = 0; t < 4; ++t) {
            std::vector<int> word;
            int sp = 0;
            for (int slot = 0; slot < total; ++slot) {
              int arc = slot == 0 ? 0 : slot == p2 ? 1 : slot == p3 ? 2 : -1;
              if (arc >= 0) {
                for (int e : arcs[t][arc]) word.push_back(e);
              } else {
                word.push_back(s[(rot + sp) % len]);
                ++sp;
              }
            }
            rel.add(ChordDiagram::from_word(word), GaussianRational(signs[t]));
          }
          // In low degree the four terms can cancel; the zero relation is kept once.
          if (!rel.is_zero() && sgn(rel.terms().begin()->second.re()) < 0) rel *= GaussianRational(-1);
          found.insert(rel);
        }
    }
  }
  return {found.begin(), found.end()};
}

int span_rank(const std::vector<DiagramSum>& family, const std::vector<ChordDiagram>& basis) {
  std::map<ChordDiagram, size_t> column;
  for (size_t k = 0; k < basis.size(); ++k) column[basis[k]] = k;
  std::vector<std::vector<GaussianRational>> rows;
  for (const auto& v : family) {
    std::vector<GaussianRational> row(basis.size());
    for (const auto& [d, c] : v.terms()) {
      auto it = column.find(d);
      if (it == column.end()) throw UsageError("diagram outside the given basis: " + d.to_string());
      row[it->second] = c;
    }
    rows.push_back(std::move(row));
  }
  int rank = 0;
  size_t cols = basis.size();
  for (size_t col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
    size_t pivot = rows.size();
    for (size_t r = rank; r < rows.size(); ++r)
      if (!rows[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    GaussianRational inv = rows[rank][col].inverse();
    for (size_t c = col; c < cols; ++c) rows[rank][c] *= inv;
    for (size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col].is_zero()) continue;
      GaussianRational f = rows[r][col];
      for (size_t c = col; c < cols; ++c)
        if (!rows[rank][c].is_zero()) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

int quotient_dimension(int n) {
  if (n < 0) throw UsageError("negative chord count");
  if (n > 4) throw ResourceError("quotient_dimension is limited to n <= 4");
  std::vector<ChordDiagram> basis = enumerate_diagrams(n);
  if (n < 2) return static_cast<int>(basis.size());
  return static_cast<int>(basis.size()) - span_rank(four_t_generators(n), basis);
}

}  // namespace qlk
