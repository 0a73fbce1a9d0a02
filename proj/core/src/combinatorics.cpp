#include "hadamard/combinatorics.hpp"

#include <numeric>

namespace hadamard {

Integer binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Integer factorial(std::size_t n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Integer multinomial(std::span<const std::size_t> parts) {
  std::size_t total = std::accumulate(parts.begin(), parts.end(), std::size_t{0});
  Integer out = factorial(total);
  for (std::size_t p : parts) out /= factorial(p);
  return out;
}

std::vector<IndexSet> subsets(std::size_t n, std::size_t k) {
  IndexSet items(n);
  std::iota(items.begin(), items.end(), std::size_t{0});
  return subsets_of(items, k);
}

std::vector<IndexSet> subsets_of(std::span<const std::size_t> items, std::size_t k) {
  std::vector<IndexSet> out;
  const std::size_t n = items.size();
  if (k > n) return out;
  std::vector<std::size_t> pos(k);
  std::iota(pos.begin(), pos.end(), std::size_t{0});
  while (true) {
    IndexSet s(k);
    for (std::size_t i = 0; i < k; ++i) s[i] = items[pos[i]];
    out.push_back(std::move(s));
    std::size_t i = k;
    while (i > 0 && pos[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++pos[i - 1];
    for (std::size_t j = i; j < k; ++j) pos[j] = pos[j - 1] + 1;
  }
  return out;
}

namespace {

void compose_into(std::size_t var, unsigned remaining, std::vector<unsigned>& cur,
                  std::vector<std::vector<unsigned>>& out) {
  if (var + 1 == cur.size()) {
    cur[var] = remaining;
    out.push_back(cur);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    cur[var] = e;
    compose_into(var + 1, remaining - e, cur, out);
  }
}

}  // namespace

std::vector<std::vector<unsigned>> compositions(std::size_t vars, unsigned degree) {
  std::vector<std::vector<unsigned>> out;
  if (vars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  std::vector<unsigned> cur(vars, 0);
  compose_into(0, degree, cur, out);
  return out;
}

int sort_sign(std::span<const std::size_t> indices) {
  int sign = 1;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    for (std::size_t j = i + 1; j < indices.size(); ++j) {
      if (indices[i] == indices[j]) return 0;
      if (indices[i] > indices[j]) sign = -sign;
    }
  }
  return sign;
}

}  // namespace hadamard
