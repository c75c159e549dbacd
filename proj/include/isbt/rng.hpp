#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace isbt {

// splitmix64 finalizer; used to derive independent substream seeds.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// All randomness in a run flows from one base seed through named substreams
// ("init", "sweep", "splits", "negatives", ...) so components stay
// independently reproducible.
inline std::uint64_t substream_seed(std::uint64_t base, std::string_view name,
                                    std::uint64_t index = 0) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a offset basis
  for (char ch : name) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ull;
  }
  return mix64(base ^ mix64(h) ^ mix64(index + 0x2545f4914f6cdd1dull));
}

// Thin wrapper over mt19937_64 with explicit sampling algorithms, so that a
// fixed seed gives identical streams on every platform we build on.
class Rng {
 public:
  Rng() : eng_(0) {}
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }

  // uniform in [0, 1), 53-bit resolution
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform_pos() {
    double u;
    do {
      u = uniform();
    } while (u <= 0.0);
    return u;
  }

  // uniform integer in [0, n), n >= 1, by rejection
  std::uint64_t uniform_int(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("uniform_int: n == 0");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % n;
  }

  // standard normal via the polar method (no cached spare, so the engine
  // state alone determines the stream)
  double normal() {
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    return u * std::sqrt(-2.0 * std::log(s) / s);
  }

  // Gamma(shape, 1) via Marsaglia-Tsang; boosted for shape < 1
  double gamma(double shape) {
    if (!(shape > 0.0)) throw std::invalid_argument("gamma: shape <= 0");
    if (shape < 1.0) {
      const double g = gamma(shape + 1.0);
      return g * std::pow(uniform_pos(), 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x = normal();
      double v = 1.0 + c * x;
      if (v <= 0.0) continue;
      v = v * v * v;
      const double u = uniform_pos();
      if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
      if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
  }

  // symmetric Dirichlet(conc) of dimension n
  std::vector<double> dirichlet(std::size_t n, double conc) {
    std::vector<double> out(n);
    double sum = 0.0;
    for (auto& v : out) {
      v = gamma(conc);
      sum += v;
    }
    if (sum <= 0.0) {
      // all draws underflowed; fall back to a single uniform winner
      out.assign(n, 0.0);
      out[uniform_int(n)] = 1.0;
      return out;
    }
    for (auto& v : out) v /= sum;
    return out;
  }

  // index sampled proportionally to nonnegative weights (unnormalized)
  std::size_t categorical(const std::vector<double>& w) {
    double total = 0.0;
    for (double v : w) total += v;
    if (!(total > 0.0)) throw std::runtime_error("categorical: zero total weight");
    double u = uniform() * total;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      u -= w[i];
      if (u < 0.0) return i;
    }
    return w.size() - 1;
  }

  // Fisher-Yates shuffle
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[uniform_int(i)]);
    }
  }

  std::string save_state() const {
    std::ostringstream os;
    os << eng_;
    return os.str();
  }

  void load_state(const std::string& s) {
    std::istringstream is(s);
    is >> eng_;
    if (is.fail()) throw std::runtime_error("Rng: bad serialized state");
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace isbt
