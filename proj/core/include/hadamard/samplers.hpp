#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>

#include "hadamard/projective.hpp"

namespace hadamard {

struct TangentSample {
  PPoint point;
  LinSpace tangent;  // projective tangent space at `point`, contains it
};

// Seeded procedure producing points (optionally with tangent spaces) of a
// fixed variety in P^n. Copies share the underlying procedures; all state
// lives in the caller's Rng.
class VarietySampler {
 public:
  using PointFn = std::function<PPoint(Rng&)>;
  using TangentFn = std::function<TangentSample(Rng&)>;

  VarietySampler(std::size_t ambient_dim, std::string description, PointFn point_fn, TangentFn tangent_fn);

  std::size_t ambient_dim() const { return n_; }
  const std::string& description() const { return description_; }

  PPoint point(Rng& rng) const { return point_fn_(rng); }
  TangentSample tangent(Rng& rng) const { return tangent_fn_(rng); }

  // A linear space; its tangent space is itself.
  static VarietySampler linear(const LinSpace& space);
  // Segre embedding of P^a x P^b as rank-one (a+1) x (b+1) matrices,
  // coordinates in row-major order.
  static VarietySampler segre(std::size_t a, std::size_t b);
  // Closure of coordinatewise inverses of points of `space` outside
  // Delta_{n-1}.
  static VarietySampler reciprocal(const LinSpace& space);
  // Hadamard product; undefined products are redrawn.
  static VarietySampler product(const VarietySampler& x, const VarietySampler& y);
  // r-fold Hadamard power (independent factors), r >= 1.
  static VarietySampler power(const VarietySampler& x, std::size_t r);

 private:
  std::size_t n_;
  std::string description_;
  PointFn point_fn_;
  TangentFn tangent_fn_;
};

}  // namespace hadamard
