#include <array>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>

#include "json.hpp"

#include "qlk/errors.hpp"
#include "qlk/lorentz_qgroup.hpp"
#include "qlk/q_arith.hpp"

namespace qlk {

namespace {

using QSeries = Series<Rational>;

const QSeries& qfact(int n, int order) {
  static std::map<std::pair<int, int>, QSeries> cache;
  auto it = cache.find({n, order});
  if (it != cache.end()) return it->second;
  return cache.emplace(std::make_pair(n, order), q_factorial<Rational>(n, order)).first->second;
}

// Square root of a series with constant term 1; exact over Q.
QSeries sqrt_unit(const QSeries& s) {
  int n = s.order();
  QSeries t(n);
  t[0] = 1;
  for (int k = 1; k <= n; ++k) {
    Rational acc = s[k];
    for (int j = 1; j < k; ++j) acc -= t[j] * t[k - j];
    t[k] = acc / 2;
  }
  return t;
}

bool spin_projection_ok(int j2, int m2) { return std::abs(m2) <= j2 && (j2 - m2) % 2 == 0; }

bool triangle(int a2, int b2, int c2) {
  return std::abs(a2 - b2) <= c2 && c2 <= a2 + b2 && (a2 + b2 + c2) % 2 == 0;
}

Series<BigComplex> compute_cg(int I2, int J2, int K2, int m2, int n2, int p2, int order) {
  Series<BigComplex> zero(order);
  if (I2 < 0 || J2 < 0 || K2 < 0) return zero;
  if (!spin_projection_ok(I2, m2) || !spin_projection_ok(J2, n2) || !spin_projection_ok(K2, p2))
    return zero;
  if (m2 + n2 != p2 || !triangle(I2, J2, K2)) return zero;
  auto half = [](int x2) { return x2 / 2; };  // exact: every argument below is even
  auto f = [&](int x2) -> const QSeries& { return qfact(half(x2), order); };

  Rational m(m2, 2), p(p2, 2), I(I2, 2), J(J2, 2), K(K2, 2);
  m.canonicalize();
  p.canonicalize();
  I.canonicalize();
  J.canonicalize();
  K.canonicalize();
  Rational e = m * (p + 1) + (J * (J + 1) - I * (I + 1) - K * (K + 1)) / 2;
  int phase = (half(I2 - m2) % 2) ? -1 : 1;

  QSeries num = q_integer<Rational>(K2 + 1, order) * f(I2 + J2 - K2) * f(I2 - m2) * f(J2 - n2) *
                f(K2 - p2) * f(K2 + p2);
  QSeries den = f(K2 + J2 - I2) * f(I2 + K2 - J2) * f(I2 + J2 + K2 + 2) * f(I2 + m2) * f(J2 + n2);
  QSeries rad = num / den;

  QSeries sum(order);
  int vmin = std::max(0, half(K2 - J2 - m2)), vmax = std::min(half(K2 - p2), half(I2 - m2));
  for (int v = vmin; v <= vmax; ++v) {
    Rational ev = Rational(v) * (K + p + 1);
    QSeries term = q_power<Rational>(ev, order) * f(I2 + m2 + 2 * v) * f(J2 + K2 - m2 - 2 * v) /
                   (f(2 * v) * f(K2 - p2 - 2 * v) * f(I2 - m2 - 2 * v) * f(J2 - K2 + m2 + 2 * v));
    if (v % 2) term = -term;
    sum += term;
  }
  Rational c0 = rad[0];
  QSeries unit = rad * (Rational(1) / c0);
  QSeries exact = q_power<Rational>(e, order) * sqrt_unit(unit) * sum * Rational(phase);
  Real root = sqrt(to_real(c0));
  Series<BigComplex> out = to_float(exact);
  out *= BigComplex(root);
  return out;
}

using CgKey = std::array<int, 7>;

struct CgCache {
  std::mutex mu;
  unsigned precision = 0;
  std::map<CgKey, Series<BigComplex>> values;

  void check_precision() {
    if (precision != working_precision()) {
      values.clear();
      precision = working_precision();
    }
  }
};

CgCache& cg_cache() {
  static CgCache c;
  return c;
}

constexpr int kCacheVersion = 1;

}  // namespace

Series<BigComplex> quantum_cg(int I2, int J2, int K2, int m2, int n2, int p2, int order) {
  CgCache& c = cg_cache();
  CgKey key{I2, J2, K2, m2, n2, p2, order};
  {
    std::lock_guard<std::mutex> lock(c.mu);
    c.check_precision();
    auto it = c.values.find(key);
    if (it != c.values.end()) return it->second;
  }
  Series<BigComplex> v = compute_cg(I2, J2, K2, m2, n2, p2, order);
  std::lock_guard<std::mutex> lock(c.mu);
  c.values.emplace(key, v);
  return v;
}

Series<BigComplex> quantum_cg_right(int I2, int J2, int K2, int m2, int n2, int p2, int order) {
  return quantum_cg(J2, K2, I2, n2, p2, m2, order);
}

size_t cg_cache_size() {
  std::lock_guard<std::mutex> lock(cg_cache().mu);
  return cg_cache().values.size();
}

void clear_cg_cache() {
  std::lock_guard<std::mutex> lock(cg_cache().mu);
  cg_cache().values.clear();
}

// Layout: magic "QLKCG", int32 version, int32 precision, uint64 count, then per entry
// seven int32 labels and 2(order+1) decimal strings, each as uint32 length + bytes.
void save_cg_cache(const std::string& path) {
  CgCache& c = cg_cache();
  std::lock_guard<std::mutex> lock(c.mu);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  auto put32 = [&](std::int32_t x) { out.write(reinterpret_cast<const char*>(&x), sizeof x); };
  auto put_str = [&](const std::string& s) {
    std::uint32_t n = static_cast<std::uint32_t>(s.size());
    out.write(reinterpret_cast<const char*>(&n), sizeof n);
    out.write(s.data(), n);
  };
  out.write("QLKCG", 5);
  put32(kCacheVersion);
  put32(static_cast<std::int32_t>(working_precision()));
  std::uint64_t count = c.values.size();
  out.write(reinterpret_cast<const char*>(&count), sizeof count);
  int digits = static_cast<int>(working_precision()) + 5;
  for (const auto& [key, s] : c.values) {
    for (int k : key) put32(k);
    for (int k = 0; k <= s.order(); ++k) {
      put_str(s[k].re().str(digits, std::ios_base::scientific));
      put_str(s[k].im().str(digits, std::ios_base::scientific));
    }
  }
  nlohmann::json manifest = {{"format", "qlk-cg-cache"},
                             {"version", kCacheVersion},
                             {"precision", working_precision()},
                             {"entries", count},
                             {"data", path}};
  std::ofstream(path + ".json") << manifest.dump(2) << "\n";
}

size_t load_cg_cache(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  char magic[5];
  in.read(magic, 5);
  if (!in || std::string(magic, 5) != "QLKCG") throw UsageError(path + " is not a CG cache file");
  auto get32 = [&]() {
    std::int32_t x = 0;
    in.read(reinterpret_cast<char*>(&x), sizeof x);
    return x;
  };
  auto get_str = [&]() {
    std::uint32_t n = 0;
    in.read(reinterpret_cast<char*>(&n), sizeof n);
    std::string s(n, '\0');
    in.read(s.data(), n);
    return s;
  };
  if (get32() != kCacheVersion) throw UsageError(path + " has an unsupported cache version");
  if (static_cast<unsigned>(get32()) != working_precision())
    throw UsageError(path + " was written at another precision");
  std::uint64_t count = 0;
  in.read(reinterpret_cast<char*>(&count), sizeof count);
  CgCache& c = cg_cache();
  std::lock_guard<std::mutex> lock(c.mu);
  c.check_precision();
  for (std::uint64_t e = 0; e < count; ++e) {
    CgKey key;
    for (int& k : key) k = get32();
    Series<BigComplex> s(key[6]);
    for (int k = 0; k <= key[6]; ++k) {
      Real re(get_str()), im(get_str());
      s[k] = BigComplex(re, im);
    }
    if (!in) throw UsageError(path + " is truncated");
    c.values[key] = s;
  }
  return static_cast<size_t>(count);
}

}  // namespace qlk
