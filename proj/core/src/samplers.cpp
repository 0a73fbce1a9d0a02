#include "hadamard/samplers.hpp"

#include <string>

#include "hadamard/errors.hpp"
#include "hadamard/products.hpp"

namespace hadamard {

namespace {

constexpr std::size_t kRedrawBudget = 64;

QVector random_nonzero_vector(std::size_t len, Rng& rng) {
  QVector v(len);
  for (auto& c : v) {
    do {
      c = rng.coefficient();
    } while (c == 0);
  }
  return v;
}

}  // namespace

VarietySampler::VarietySampler(std::size_t ambient_dim, std::string description, PointFn point_fn,
                               TangentFn tangent_fn)
    : n_(ambient_dim),
      description_(std::move(description)),
      point_fn_(std::move(point_fn)),
      tangent_fn_(std::move(tangent_fn)) {}

VarietySampler VarietySampler::linear(const LinSpace& space) {
  return VarietySampler(
      space.ambient_dim(), "linear space of dimension " + std::to_string(space.dim()),
      [space](Rng& rng) { return sample_point(space, rng); },
      [space](Rng& rng) { return TangentSample{sample_point(space, rng), space}; });
}

VarietySampler VarietySampler::segre(std::size_t a, std::size_t b) {
  const std::size_t rows = a + 1, cols = b + 1;
  auto outer = [rows, cols](const QVector& u, const QVector& v) {
    QVector out(rows * cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) out[i * cols + j] = u[i] * v[j];
    }
    return out;
  };
  auto point_fn = [=](Rng& rng) {
    QVector u = random_nonzero_vector(rows, rng);
    QVector v = random_nonzero_vector(cols, rng);
    return PPoint(outer(u, v));
  };
  auto tangent_fn = [=](Rng& rng) {
    QVector u = random_nonzero_vector(rows, rng);
    QVector v = random_nonzero_vector(cols, rng);
    // {x v^T + u y^T}: spanned by e_i v^T and u e_j^T
    QMatrix gens(0, rows * cols);
    for (std::size_t i = 0; i < rows; ++i) {
      QVector e(rows);
      e[i] = 1;
      gens.append_row(outer(e, v));
    }
    for (std::size_t j = 0; j < cols; ++j) {
      QVector e(cols);
      e[j] = 1;
      gens.append_row(outer(u, e));
    }
    return TangentSample{PPoint(outer(u, v)), *LinSpace::span_of(gens)};
  };
  return VarietySampler(rows * cols - 1, "Segre P^" + std::to_string(a) + " x P^" + std::to_string(b),
                        point_fn, tangent_fn);
}

VarietySampler VarietySampler::reciprocal(const LinSpace& space) {
  const std::size_t n = space.ambient_dim();
  auto invert = [](const PPoint& p) {
    QVector inv(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) inv[i] = 1 / p[i];
    return PPoint(std::move(inv));
  };
  SampleOptions opts;
  opts.avoid_delta = n - 1;
  auto point_fn = [=](Rng& rng) { return invert(sample_point(space, rng, opts)); };
  auto tangent_fn = [=](Rng& rng) {
    PPoint y = invert(sample_point(space, rng, opts));
    // d(1/x) = -dx / x^2, so the tangent space is y^2 * L
    PPoint y2 = *hadamard_point(y, y);
    return TangentSample{y, *point_times_space(y2, space)};
  };
  return VarietySampler(n, "reciprocal of a linear space of dimension " + std::to_string(space.dim()), point_fn,
                        tangent_fn);
}

VarietySampler VarietySampler::product(const VarietySampler& x, const VarietySampler& y) {
  if (x.ambient_dim() != y.ambient_dim()) throw DimensionError("samplers live in different P^n");
  auto point_fn = [x, y](Rng& rng) {
    for (std::size_t attempt = 0; attempt < kRedrawBudget; ++attempt) {
      PPoint p = x.point(rng);
      PPoint q = y.point(rng);
      if (auto pq = hadamard_point(p, q)) return *pq;
    }
    throw BudgetExhausted("Hadamard product sampler: every draw was undefined");
  };
  auto tangent_fn = [x, y](Rng& rng) {
    for (std::size_t attempt = 0; attempt < kRedrawBudget; ++attempt) {
      TangentSample p = x.tangent(rng);
      TangentSample q = y.tangent(rng);
      if (auto pq = hadamard_point(p.point, q.point)) {
        return TangentSample{*pq, terracini_span(p.point, p.tangent, q.point, q.tangent)};
      }
    }
    throw BudgetExhausted("Hadamard product sampler: every draw was undefined");
  };
  return VarietySampler(x.ambient_dim(), "(" + x.description() + ") * (" + y.description() + ")", point_fn,
                        tangent_fn);
}

VarietySampler VarietySampler::power(const VarietySampler& x, std::size_t r) {
  if (r == 0) throw PreconditionError("Hadamard power sampler needs r >= 1");
  VarietySampler acc = x;
  for (std::size_t k = 1; k < r; ++k) acc = product(acc, x);
  return acc;
}

}  // namespace hadamard
