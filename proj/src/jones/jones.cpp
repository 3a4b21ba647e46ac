#include "qlk/jones.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <unordered_map>

#include "qlk/errors.hpp"
#include "qlk/q_arith.hpp"
#include "qlk/weight_systems.hpp"

namespace qlk {

using QSeries = Series<Rational>;

SeriesOperator::SeriesOperator(int dim, int order)
    : dim_(dim), order_(order), e_(static_cast<size_t>(dim) * dim, QSeries(order)) {}

SeriesOperator SeriesOperator::identity(int dim, int order) {
  SeriesOperator r(dim, order);
  for (int k = 0; k < dim; ++k) r.at(k, k) = QSeries::one(order);
  return r;
}

SeriesOperator operator*(const SeriesOperator& a, const SeriesOperator& b) {
  if (a.dim_ != b.dim_) throw UsageError("operator dimensions differ");
  SeriesOperator r(a.dim_, std::min(a.order_, b.order_));
  for (int i = 0; i < a.dim_; ++i)
    for (int k = 0; k < a.dim_; ++k) {
      const QSeries& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < a.dim_; ++j) {
        const QSeries& y = b.at(k, j);
        if (!y.is_zero()) r.at(i, j) += x * y;
      }
    }
  return r;
}

SeriesOperator kron(const SeriesOperator& a, const SeriesOperator& b) {
  int d = a.dim() * b.dim();
  SeriesOperator r(d, std::min(a.order(), b.order()));
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (int k = 0; k < b.dim(); ++k)
        for (int l = 0; l < b.dim(); ++l)
          if (!b.at(k, l).is_zero())
            r.at(i * b.dim() + k, j * b.dim() + l) = a.at(i, j) * b.at(k, l);
    }
  return r;
}

namespace {

// Sparse Rcheck tables: image of e_x (x) e_y as (x', y', coefficient).
struct Entry {
  int x, y;
  QSeries c;
};

struct SpinTables {
  int n = 0;
  std::vector<std::vector<Entry>> fwd, inv;  // indexed by x*(n+1)+y
};

// Coefficient of e_{a-k} (x) e_{b+k} in R(e_a (x) e_b), where
// R = q^{H(x)H/2} sum_k q^{k(k-1)/2} (q-q^-1)^k/[k]! E^k (x) F^k,
// E e_j = [n-j+1] e_{j-1}, F e_j = [j+1] e_{j+1}.
QSeries r_coeff(int n, int a, int b, int k, int order) {
  if (k > a || b + k > n) return QSeries(order);
  QSeries qq = q_power<Rational>(1, order) - q_power<Rational>(-1, order);
  QSeries c = q_power<Rational>(Rational(k * (k - 1), 2), order) * qq.pow(k) / q_factorial<Rational>(k, order);
  for (int i = 0; i < k; ++i) c *= q_integer<Rational>(n - a + 1 + i, order);
  for (int i = 0; i < k; ++i) c *= q_integer<Rational>(b + 1 + i, order);
  long wa = n - 2 * (a - k), wb = n - 2 * (b + k);
  return c * q_power<Rational>(Rational(wa * wb, 2), order);
}

const SpinTables& spin_tables(int n, int order) {
  static std::map<std::pair<int, int>, SpinTables> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({n, order});
  if (it != cache.end()) return it->second;
  SpinTables t;
  t.n = n;
  int d = n + 1;
  t.fwd.resize(static_cast<size_t>(d) * d);
  t.inv.resize(static_cast<size_t>(d) * d);
  int kmax = std::min(n, order);
  // r[a][b][k]
  std::vector<std::vector<std::vector<QSeries>>> r(
      d, std::vector<std::vector<QSeries>>(d, std::vector<QSeries>(kmax + 1, QSeries(order))));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int k = 0; k <= kmax; ++k) r[a][b][k] = r_coeff(n, a, b, k, order);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      for (int k = 0; k <= kmax; ++k)
        if (!r[a][b][k].is_zero()) t.fwd[a * d + b].push_back({b + k, a - k, r[a][b][k]});
      // R^{-1}(e_a (x) e_b) = sum_k u_k e_{a-k} (x) e_{b+k}
      std::vector<QSeries> u;
      for (int s = 0; s <= kmax && s <= a && b + s <= n; ++s) {
        QSeries acc(order);
        for (int k = 0; k < s; ++k) acc += u[k] * r[a - k][b + k][s - k];
        QSeries inv0 = r[a - s][b + s][0].inverse();
        u.push_back(s == 0 ? inv0 : -(acc * inv0));
      }
      // Rcheck^{-1} = R^{-1} P: e_b (x) e_a goes to R^{-1}(e_a (x) e_b)
      for (size_t k = 0; k < u.size(); ++k)
        if (!u[k].is_zero())
          t.inv[b * d + a].push_back({a - static_cast<int>(k), b + static_cast<int>(k), u[k]});
    }
  return cache.emplace(std::make_pair(n, order), std::move(t)).first->second;
}

SeriesOperator dense(const std::vector<std::vector<Entry>>& table, int d, int order) {
  SeriesOperator m(d * d, order);
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      for (const Entry& e : table[x * d + y]) m.at(e.x * d + e.y, x * d + y) += e.c;
  return m;
}

using Vec = std::unordered_map<unsigned long long, QSeries>;

// Digits of a tensor basis index, strand 1 most significant.
struct Layout {
  int d, k;
  std::vector<unsigned long long> place;  // place[s] = d^(k-1-s)
  Layout(int d_, int k_) : d(d_), k(k_), place(static_cast<size_t>(k_)) {
    unsigned long long p = 1;
    for (int s = k - 1; s >= 0; --s) {
      place[s] = p;
      p *= static_cast<unsigned long long>(d);
    }
  }
  int digit(unsigned long long idx, int s) const { return static_cast<int>((idx / place[s]) % d); }
};

Vec apply_letter(const Vec& v, int letter, const SpinTables& t, const Layout& lay) {
  const auto& table = letter > 0 ? t.fwd : t.inv;
  int s = std::abs(letter) - 1;
  Vec out;
  out.reserve(v.size() * 2);
  for (const auto& [idx, c] : v) {
    int x = lay.digit(idx, s), y = lay.digit(idx, s + 1);
    unsigned long long base = idx - x * lay.place[s] - y * lay.place[s + 1];
    for (const Entry& e : table[x * lay.d + y]) {
      unsigned long long j = base + e.x * lay.place[s] + e.y * lay.place[s + 1];
      auto it = out.find(j);
      if (it == out.end())
        out.emplace(j, c * e.c);
      else
        it->second += c * e.c;
    }
  }
  return out;
}

// Coefficient of (e_r (x) rest) in B (e_r (x) rest), weighted by the enhancement
// q^H on strands 2..k, summed over rest.
QSeries tangle_entry(const BraidWord& b, int r, const SpinTables& t, const Layout& lay, int order) {
  int n = t.n;
  unsigned long long rest_count = lay.place[0];
  std::vector<QSeries> weight_power(static_cast<size_t>(n) + 1, QSeries(order));
  for (int j = 0; j <= n; ++j) weight_power[j] = q_power<Rational>(n - 2 * j, order);
  QSeries total(order);
  for (unsigned long long rest = 0; rest < rest_count; ++rest) {
    unsigned long long start = r * lay.place[0] + rest;
    Vec v;
    v.emplace(start, QSeries::one(order));
    for (int l : b.letters) v = apply_letter(v, l, t, lay);
    auto it = v.find(start);
    if (it == v.end()) continue;
    QSeries c = it->second;
    for (int s = 1; s < lay.k; ++s) c *= weight_power[lay.digit(start, s)];
    total += c;
  }
  return total;
}

std::map<std::tuple<std::string, int, int>, Series<GaussianRational>>& framed_cache() {
  static std::map<std::tuple<std::string, int, int>, Series<GaussianRational>> c;
  return c;
}
std::mutex framed_mu;

}  // namespace

SeriesOperator r_matrix(int two_alpha, int order) {
  if (two_alpha < 0) throw UsageError("negative spin");
  return dense(spin_tables(two_alpha, order).fwd, two_alpha + 1, order);
}

SeriesOperator r_matrix_inverse(int two_alpha, int order) {
  if (two_alpha < 0) throw UsageError("negative spin");
  return dense(spin_tables(two_alpha, order).inv, two_alpha + 1, order);
}

Series<GaussianRational> framing_factor(int two_alpha, int order) {
  // alpha(alpha+1) = two_alpha(two_alpha+2)/4
  return exp_scaled<GaussianRational>(Rational(two_alpha * (two_alpha + 2), 4), order);
}

PolySeries framing_factor_symbolic(int order) {
  ParamPolynomial rate = lambda_z_sl2(ChordDiagram::parse("AA"), t_jones()) * ParamPolynomial(2);
  PolySeries x(order);
  if (order >= 1) x[1] = rate;
  return exp_of(x);
}

Series<GaussianRational> jones_framed(const BraidWord& b, int two_alpha, int order) {
  if (two_alpha < 0) throw UsageError("negative spin");
  if (order < 0) throw UsageError("negative order");
  if (!is_knot(b)) throw UsageError("the closure of " + to_string(b) + " is not a knot");
  auto key = std::make_tuple(braid_key(b), two_alpha, order);
  {
    std::lock_guard<std::mutex> lock(framed_mu);
    auto it = framed_cache().find(key);
    if (it != framed_cache().end()) return it->second;
  }
  int d = two_alpha + 1;
  double states = 1;
  for (int s = 0; s < b.strands; ++s) states *= d;
  if (states > 5e6) throw ResourceError("tensor power too large for the Jones engine");
  const SpinTables& t = spin_tables(two_alpha, order);
  Layout lay(d, b.strands);
  QSeries s = tangle_entry(b, 0, t, lay, order);
  // The partial trace is diagonal by weight conservation; compare diagonal entries.
  std::vector<int> rows;
  if (states <= 1000) {
    for (int r = 1; r < d; ++r) rows.push_back(r);
  } else if (d > 1) {
    rows.push_back(d - 1);
  }
  for (int r : rows)
    if (tangle_entry(b, r, t, lay, order) != s)
      throw ConsistencyError("the (1,1)-tangle evaluation is a scalar",
                             "diagonal entry " + std::to_string(r) + " differs for " + to_string(b));
  QSeries dimq = q_integer<Rational>(d, order);
  QSeries value = s * dimq * Rational(1, d);
  Series<GaussianRational> out = to_gaussian(value);
  std::lock_guard<std::mutex> lock(framed_mu);
  framed_cache().emplace(key, out);
  return out;
}

Series<GaussianRational> jones_unframed(const BraidWord& b, int two_alpha, int order) {
  return jones_framed(b, two_alpha, order) * framing_factor(two_alpha, order).pow(-writhe(b));
}

PolySeries jones_z_interpolated(const BraidWord& b, int order) {
  int samples = 2 * order + 3;
  std::vector<Series<GaussianRational>> values;
  std::vector<GaussianRational> nodes;
  for (int two_alpha = 0; two_alpha < samples; ++two_alpha) {
    values.push_back(jones_unframed(b, two_alpha, order));
    nodes.push_back(GaussianRational::fraction(two_alpha, 2));
  }
  PolySeries out(order);
  for (int n = 0; n <= order; ++n) {
    int used = 2 * n + 1;
    std::vector<GaussianRational> xs(nodes.begin(), nodes.begin() + used), ys;
    for (int k = 0; k < used; ++k) ys.push_back(values[k][n]);
    ParamPolynomial poly = interpolate(xs, ys);
    for (int k = used; k < samples; ++k)
      if (poly(nodes[k]) != values[k][n])
        throw ConsistencyError("degree of the h^n coefficient in the spin is at most 2n",
                               "order " + std::to_string(n) + " fails at spin " + nodes[k].to_string());
    out[n] = poly;
  }
  return out;
}

void clear_jones_cache() {
  std::lock_guard<std::mutex> lock(framed_mu);
  framed_cache().clear();
}

}  // namespace qlk
