#include "ladder/sdm.hpp"

#include <string>

namespace ladder {

bool is_gorenstein(const Ladder& y) {
  require_two_connected(y);
  if (y.rows() != y.cols()) return false;
  const CornerProfile p = corners(y);
  const int target = y.rows() + 1;
  for (const Cell& c : p.lower)
    if (c.row + c.col != target) return false;
  for (const Cell& c : p.upper)
    if (c.row + c.col != target) return false;
  return true;
}

SdmReport classify(const Ladder& y) {
  const Factorization f = decompose(y);
  const RelabelMap map = relabel(f);
  SdmReport report;
  report.rank = map.shape.rank();
  report.omega = canonical_class(y);

  DivisorClass sum(map.shape);
  std::vector<int> free_factors;
  for (int u = 0; u <= f.w(); ++u) {
    const Ladder& z = f.factors[u];
    FactorSummary s;
    s.m = z.rows();
    s.n = z.cols();
    s.gorenstein = is_gorenstein(z);
    s.epsilon = s.gorenstein ? 0 : 1;
    s.omega_image = embed_factor_omega(f, map, u);
    if (s.gorenstein != s.omega_image.is_zero())
      throw DomainError("factor " + std::to_string(u) +
                        ": Gorenstein status disagrees with its canonical class");
    sum += s.omega_image;
    if (s.epsilon == 1) free_factors.push_back(u);
    report.factors.push_back(std::move(s));
  }
  if (!(sum == report.omega))
    throw DomainError("canonical class differs from the sum of factor canonical classes");

  const int free = static_cast<int>(free_factors.size());
  if (free > kMaxEnumeratedFactors)
    throw DomainError(std::to_string(free) +
                      " non-Gorenstein factors: too many classes to enumerate");
  report.count = std::uint64_t{1} << free;

  // Counting in binary with the first free factor as the most significant
  // bit yields theta vectors in lexicographic order.
  for (std::uint64_t mask = 0; mask < report.count; ++mask) {
    std::vector<int> theta(static_cast<std::size_t>(f.w() + 1), 0);
    DivisorClass cls(map.shape);
    for (int b = 0; b < free; ++b) {
      if ((mask >> (free - 1 - b)) & 1U) {
        const int u = free_factors[b];
        theta[u] = 1;
        cls += report.factors[u].omega_image;
      }
    }
    report.classes.push_back(std::move(cls));
    report.thetas.push_back(std::move(theta));
  }
  return report;
}

Ladder construct_2N(int count, const std::vector<std::pair<int, int>>& sizes) {
  if (count < 1) throw DomainError("construct_2N needs N >= 1 blocks");
  if (sizes.size() != static_cast<std::size_t>(count))
    throw DomainError("expected " + std::to_string(count) + " block sizes, got " +
                      std::to_string(sizes.size()));
  std::vector<Ladder> blocks;
  for (const auto& [m, n] : sizes) {
    if (m < 2 || n < 2)
      throw DomainError("block " + std::to_string(m) + "x" + std::to_string(n) +
                        " must have both sides > 1");
    if (m == n)
      throw DomainError("block " + std::to_string(m) + "x" + std::to_string(n) +
                        " is square, so its determinantal ring is Gorenstein (m = n)");
    blocks.push_back(Ladder::rectangle(m, n));
  }
  return compose(blocks);
}

}  // namespace ladder
