#include "rqmcbet/replicates.hpp"

#include <bit>
#include <stdexcept>

namespace rqmcbet {

double ReplicateSample::mean() const {
  double s = 0;
  for (double v : y) s += v;
  return y.empty() ? 0.0 : s / double(y.size());
}

ReplicateSample replicate_estimates(const Integrand& f, int d, std::int64_t n,
                                    int R, std::uint64_t seed,
                                    std::string_view integrand_id) {
  if (d < 1) throw std::invalid_argument("replicate_estimates: d must be >= 1");
  if (n < 1 || !std::has_single_bit(std::uint64_t(n)))
    throw std::invalid_argument("replicate_estimates: n must be a power of 2");
  if (R < 1) throw std::invalid_argument("replicate_estimates: R must be >= 1");

  const SobolGenerator gen(d);
  const PointSet base = gen.generate(n);

  ReplicateSample out;
  out.y.resize(std::size_t(R));
  out.n = n;
  out.d = d;
  out.seed = seed;
  out.integrand_id = std::string(integrand_id);

  std::vector<double> x(static_cast<std::size_t>(d));
  for (int r = 0; r < R; ++r) {
    const ScrambleState st = ScrambleState::draw(d, seed, std::uint64_t(r));
    const PointSet pts = scramble(base, st);
    double sum = 0;
    for (std::int64_t i = 0; i < n; ++i) {
      for (int j = 0; j < d; ++j) x[std::size_t(j)] = pts.value(i, j);
      double v = f(x);
      if (v < 0.0 || v > 1.0) {
        if (v >= -1e-12 && v <= 1.0 + 1e-12) {
          v = v < 0.0 ? 0.0 : 1.0;
        } else {
          throw std::domain_error(
              "replicate_estimates: integrand value outside [0,1]");
        }
      }
      sum += v;
    }
    out.y[std::size_t(r)] = sum / double(n);
  }
  return out;
}

}  // namespace rqmcbet
