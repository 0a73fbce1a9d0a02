#include "hadamard_cli/commands.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "hadamard/brackets.hpp"
#include "hadamard/errors.hpp"
#include "hadamard/line_powers.hpp"
#include "hadamard/products.hpp"
#include "hadamard/star_config.hpp"
#include "hadamard/tropical.hpp"

namespace hadamard::cli {

namespace {

std::size_t optional_size(const json& payload, const std::string& key, std::size_t fallback) {
  auto it = payload.find(key);
  return it == payload.end() ? fallback : size_from_json(*it, "/" + key);
}

LinSpace line_from_json(const json& j, const std::string& ptr) {
  LinSpace s = space_from_json(j, ptr);
  if (s.dim() != 1) throw ValidationError(ptr, "expected two independent rows (a line)");
  return s;
}

// Reduced echelon basis with primitive integer rows, so sampled spans print
// the same way regardless of which samples produced them.
json canonical_basis(const LinSpace& s) {
  RrefResult r = rref(s.generators());
  json out = json::array();
  for (std::size_t i = 0; i < r.rank; ++i) {
    json row = json::array();
    for (const auto& c : primitive_vector(r.reduced.row(i))) row.push_back(to_json(c));
    out.push_back(std::move(row));
  }
  return out;
}

json forms_to_json(const std::vector<SparsePoly>& forms) {
  json out = json::array();
  for (const auto& f : forms) out.push_back(to_json(f));
  return out;
}

json cone_to_json(const SignedCone& c) { return {{"plus", c.plus}, {"minus", c.minus}}; }

json fan_to_json(const SignedConeFan& fan) {
  json cones = json::array();
  for (const auto& [cone, mult] : fan.cones()) {
    json c = cone_to_json(cone);
    c["multiplicity"] = to_string(mult);
    cones.push_back(std::move(c));
  }
  return {{"ambient_dim", fan.ambient_dim()},
          {"dim", fan.dim()},
          {"global_weight", to_json(fan.global_weight())},
          {"cones", std::move(cones)}};
}

ProductShape shape_from_json(const json& j, const std::string& ptr) {
  if (!j.is_array()) throw ValidationError(ptr, "expected a list of [dim, multiplicity] pairs");
  ProductShape shape;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = ptr + "/" + std::to_string(i);
    if (!j[i].is_array() || j[i].size() != 2) throw ValidationError(p, "expected [dim, multiplicity]");
    std::size_t m = size_from_json(j[i][0], p + "/0");
    std::size_t r = size_from_json(j[i][1], p + "/1");
    if (m == 0) throw ValidationError(p + "/0", "dimension must be at least 1");
    if (r == 0) throw ValidationError(p + "/1", "multiplicity must be at least 1");
    shape.emplace_back(m, r);
  }
  return shape;
}

json line_power(const JobSpec& job) {
  const json& in = job.payload;
  LinSpace line = line_from_json(require(in, "line", ""), "/line");
  std::size_t r = size_from_json(require(in, "r", ""), "/r");
  if (r == 0) throw ValidationError("/r", "power must be at least 1");
  std::size_t budget = optional_size(in, "budget", 64);
  const std::size_t n = line.ambient_dim();
  PlueckerVector pl = pluecker(line);

  json out = {{"n", n}, {"r", r}, {"line_pluecker", to_json(pl)}};
  if (auto zero = pl.first_vanishing_entry()) {
    // the matrix formula does not apply; measure the span instead
    PowerSpanResult res = sampled_power_span(line, r, budget, job.seed);
    std::vector<SparsePoly> equations;
    QMatrix eq = res.span.equations();
    for (std::size_t i = 0; i < eq.rows(); ++i) equations.push_back(SparsePoly::linear_form(eq.row(i)).primitive());
    out["generic"] = false;
    out["vanishing_bracket"] = *zero;
    out["method"] = "sampled";
    out["samples"] = res.samples_used;
    out["dim"] = res.span.dim();
    out["generators"] = canonical_basis(res.span);
    out["equations"] = forms_to_json(equations);
    return out;
  }
  QMatrix m = line_power_matrix(line, r);
  out["generic"] = true;
  out["method"] = "matrix";
  out["matrix"] = to_json(m);
  out["dim"] = std::min(r, n);
  out["equations"] = r < n ? forms_to_json(power_linear_equations(line, r)) : json::array();
  if (n >= 2 && r == n - 1) out["hyperplane"] = to_json(power_hyperplane(pl));
  return out;
}

json star_config(const JobSpec& job) {
  const json& in = job.payload;
  LinSpace line = line_from_json(require(in, "line", ""), "/line");
  std::size_t r = size_from_json(require(in, "r", ""), "/r");
  const json& pts = require(in, "points", "");
  if (!pts.is_array() || pts.empty()) throw ValidationError("/points", "expected a nonempty list of points");
  PointSet z(line.ambient_dim());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::string p = "/points/" + std::to_string(i);
    PPoint pt = point_from_json(pts[i], p);
    if (pt.ambient_dim() != line.ambient_dim()) throw ValidationError(p, "point does not live in the line's P^n");
    if (!z.insert(pt)) throw ValidationError(p, "repeated point");
  }
  StarWitness w = build_star(z, line, r);
  json hyperplanes = json::array();
  for (const auto& h : w.hyperplanes) hyperplanes.push_back(to_json(h));
  json points = json::array();
  for (std::size_t i = 0; i < w.points.size(); ++i) {
    points.push_back({{"point", to_json(w.points[i].normalized())}, {"factors", w.point_sources[i]}});
  }
  GeneralPositionReport gp = verify_general_position(w.hyperplanes, w.ambient);
  return {{"r", r},
          {"ambient", to_json(w.ambient)},
          {"hyperplanes", std::move(hyperplanes)},
          {"points", std::move(points)},
          {"point_count", w.points.size()},
          {"general_position", gp.ok},
          {"verified", verify_star(w)}};
}

json span_dim(const JobSpec& job) {
  const json& in = job.payload;
  const json& list = require(in, "spaces", "");
  if (!list.is_array() || list.empty()) throw ValidationError("/spaces", "expected a nonempty list");
  std::vector<SpaceWithMultiplicity> entries;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string p = "/spaces/" + std::to_string(i);
    LinSpace s = space_from_json(require(list[i], "space", p), p + "/space");
    std::size_t r = optional_size(list[i], "multiplicity", 1);
    if (r == 0) throw ValidationError(p + "/multiplicity", "multiplicity must be at least 1");
    if (!entries.empty() && s.ambient_dim() != entries.front().space.ambient_dim()) {
      throw ValidationError(p + "/space", "ambient dimension differs from /spaces/0");
    }
    entries.push_back({std::move(s), r});
  }
  MultisetOfSpaces spaces(std::move(entries));
  const std::size_t n = spaces.ambient_dim();
  auto shape = spaces.shape();
  json shape_json = json::array();
  for (auto [m, r] : shape) shape_json.push_back({m, r});
  json out = {{"n", n},
              {"shape", std::move(shape_json)},
              {"dim", rank(gen_vandermonde(spaces)) - 1},
              {"formula", span_dimension_formula(shape, n)}};
  std::size_t trials = optional_size(in, "identifiability_trials", 0);
  if (trials > 0) {
    IdentifiabilityReport rep = identifiability_check(spaces, trials, job.seed);
    json ident = {{"ok", rep.ok}, {"trials", rep.trials}, {"guarantee_regime", rep.in_guarantee_regime}};
    if (rep.collision) {
      json a = json::array(), b = json::array();
      for (const auto& p : rep.collision->first) a.push_back(to_json(p));
      for (const auto& p : rep.collision->second) b.push_back(to_json(p));
      ident["collision"] = {a, b};
    }
    out["identifiability"] = std::move(ident);
  }
  return out;
}

json degree(const JobSpec& job) {
  const json& in = job.payload;
  ProductShape plain = shape_from_json(require(in, "plain", ""), "/plain");
  ProductShape recip;
  if (auto it = in.find("reciprocal"); it != in.end()) recip = shape_from_json(*it, "/reciprocal");
  if (plain.empty() && recip.empty()) throw ValidationError("/plain", "need at least one factor");
  std::size_t n = size_from_json(require(in, "n", ""), "/n");
  DegreeResult res = recip.empty() ? degree_linear_products(plain, n) : degree_with_reciprocals(plain, recip, n);
  json out = {{"dim", res.dimension}, {"degree", to_json(res.degree)}, {"below_bound", res.below_bound}};
  if (job.transcript) {
    FanDegreeTranscript t = fan_degree(plain, recip, n, job.seed);
    json factors = json::array();
    for (const auto& f : t.factors) factors.push_back(fan_to_json(f));
    json displacement = json::array();
    for (const auto& v : t.intersection.displacement) displacement.push_back(to_json(v));
    json pairs = json::array();
    for (const auto& p : t.intersection.pairs) {
      pairs.push_back({{"first", cone_to_json(p.first)},
                       {"second", cone_to_json(p.second)},
                       {"first_multiplicity", to_string(p.first_multiplicity)},
                       {"second_multiplicity", to_string(p.second_multiplicity)},
                       {"index", to_string(p.index)}});
    }
    out["transcript"] = {{"factors", std::move(factors)},
                         {"delta", to_string(t.delta)},
                         {"sum", fan_to_json(t.sum)},
                         {"complement", fan_to_json(t.complement)},
                         {"displacement", std::move(displacement)},
                         {"pairs", std::move(pairs)},
                         {"fan_degree", to_json(t.intersection.multiplicity)}};
  }
  return out;
}

json interp(const JobSpec& job) {
  const json& in = job.payload;
  VarietySampler sampler = sampler_from_json(require(in, "sampler", ""), "/sampler");
  const bool has_degree = in.contains("degree"), has_max = in.contains("max_degree");
  if (has_degree == has_max) throw ValidationError("/degree", "give exactly one of degree, max_degree");
  if (has_degree) {
    auto d = static_cast<unsigned>(size_from_json(in["degree"], "/degree"));
    if (d == 0) throw ValidationError("/degree", "degree must be at least 1");
    return {{"degree", d}, {"forms", forms_to_json(interpolate_forms(sampler, d, job.seed))}};
  }
  auto d = static_cast<unsigned>(size_from_json(in["max_degree"], "/max_degree"));
  if (d == 0) throw ValidationError("/max_degree", "degree must be at least 1");
  Hypersurface h = interpolate_hypersurface(sampler, d, job.seed);
  return {{"degree", h.degree}, {"form", to_json(h.form)}};
}

json dim_estimate(const JobSpec& job) {
  const json& in = job.payload;
  VarietySampler x = sampler_from_json(require(in, "x", ""), "/x");
  VarietySampler y = sampler_from_json(require(in, "y", ""), "/y");
  if (x.ambient_dim() != y.ambient_dim()) throw ValidationError("/y", "ambient dimension differs from /x");
  std::size_t samples = optional_size(in, "samples", 5);
  if (samples == 0) throw ValidationError("/samples", "need at least one sample");
  Rng rng(job.seed);
  std::size_t best = 0;
  for (std::size_t t = 0; t < samples; ++t) {
    TangentSample a = x.tangent(rng);
    TangentSample b = y.tangent(rng);
    best = std::max(best, terracini_span(a.point, a.tangent, b.point, b.tangent).dim());
  }
  json out = {{"terracini_dim", best}, {"samples", samples}};
  if (auto it = in.find("expected"); it != in.end()) {
    auto field = [&](const char* key) {
      const json& v = require(*it, key, "/expected");
      if (!v.is_number_integer()) throw ValidationError(std::string("/expected/") + key, "expected an integer");
      return v.get<long>();
    };
    long e = expected_dimension(field("dim_x"), field("dim_y"), field("dim_h"), field("dim_g"));
    out["expected_dimension"] = e;
    out["defective"] = static_cast<long>(best) < e;
  }
  return out;
}

json bracket(const JobSpec& job) {
  const json& in = job.payload;
  const json& mode_json = require(in, "mode", "");
  if (!mode_json.is_string()) throw ValidationError("/mode", "expected quadric, cubic or verify");
  const std::string mode = mode_json.get<std::string>();
  if (mode == "quadric" || mode == "cubic") {
    SparsePoly form;
    const BracketExpr* expr = nullptr;
    if (mode == "quadric") {
      LinSpace l = line_from_json(require(in, "l", ""), "/l");
      LinSpace m = line_from_json(require(in, "m", ""), "/m");
      if (l.ambient_dim() != 3) throw ValidationError("/l", "expected a line in P^3");
      if (m.ambient_dim() != 3) throw ValidationError("/m", "expected a line in P^3");
      form = quadric_two_lines(pluecker(l), pluecker(m));
      expr = &quadric_bracket_expr();
    } else {
      LinSpace plane = space_from_json(require(in, "plane", ""), "/plane");
      if (plane.dim() != 2 || plane.ambient_dim() != 5) throw ValidationError("/plane", "expected a 2-plane in P^5");
      form = cubic_plane_square(pluecker(plane));
      expr = &cubic_bracket_expr();
    }
    json out = {{"mode", mode}, {"form", to_json(form)}, {"text", form.to_string()}};
    if (job.notation) out["notation"] = expr->to_string();
    return out;
  }
  if (mode != "verify") throw ValidationError("/mode", "expected quadric, cubic or verify");
  if (job.symbolic) {
    if (auto it = in.find("identity"); it != in.end()) {
      if (*it != "quadric") throw ValidationError("/identity", "only the quadric identity has a generic expansion");
      SparsePoly e = quadric_generic_expansion();
      return {{"mode", mode}, {"method", "symbolic"}, {"verified", e.is_zero()}, {"residual_terms", e.term_count()}};
    }
    const json& factors = require(in, "product", "");
    if (!factors.is_array() || factors.size() != 2) throw ValidationError("/product", "expected two spaces [A, B]");
    LinSpace a = space_from_json(factors[0], "/product/0");
    LinSpace b = space_from_json(factors[1], "/product/1");
    if (a.ambient_dim() != b.ambient_dim()) throw ValidationError("/product/1", "ambient dimension differs");
    SparsePoly form = form_from_json(require(in, "form", ""), a.ambient_dim() + 1, "/form");
    auto images = product_parametrization(a, b);
    return {{"mode", mode}, {"method", "symbolic"}, {"verified", verify_identity_symbolic(form, images)}};
  }
  VarietySampler sampler = sampler_from_json(require(in, "sampler", ""), "/sampler");
  SparsePoly form = form_from_json(require(in, "form", ""), sampler.ambient_dim() + 1, "/form");
  std::size_t trials = optional_size(in, "trials", 20);
  return {{"mode", mode},
          {"method", "sampled"},
          {"trials", trials},
          {"verified", verify_identity(form, sampler, trials, job.seed)}};
}

json error_document(const std::string& kind, const std::string& message, const std::string* pointer = nullptr) {
  json e = {{"kind", kind}, {"message", message}};
  if (pointer) e["pointer"] = *pointer;
  return {{"error", std::move(e)}};
}

using Handler = std::function<json(const JobSpec&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"line-power", line_power},
      {"star-config", star_config},
      {"span-dim", span_dim},
      {"degree", degree},
      {"interp", interp},
      {"dim-estimate", dim_estimate},
      {"bracket", bracket},
      {"paper-suite", [](const JobSpec& job) { return paper_suite(job.seed); }},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names = {"line-power", "star-config",  "span-dim", "degree",
                                                 "interp",     "dim-estimate", "bracket",  "paper-suite"};
  return names;
}

bool needs_payload(const std::string& subcommand) { return subcommand != "paper-suite"; }

JobResult run(const JobSpec& job) {
  auto it = handlers().find(job.subcommand);
  if (it == handlers().end()) {
    return {kValidation, error_document("validation", "unknown subcommand '" + job.subcommand + "'")};
  }
  if (needs_payload(job.subcommand) && !job.payload.is_object()) {
    std::string root = "/";
    return {kValidation, error_document("validation", "payload must be a JSON object", &root)};
  }
  try {
    json doc = it->second(job);
    if (job.subcommand == "paper-suite" && !doc.at("all_passed").get<bool>()) return {kSuiteFailed, doc};
    return {kOk, std::move(doc)};
  } catch (const ValidationError& e) {
    return {kValidation, error_document("validation", e.what(), &e.pointer())};
  } catch (const DimensionError& e) {
    return {kValidation, error_document("validation", e.what())};
  } catch (const json::exception& e) {
    return {kValidation, error_document("validation", e.what())};
  } catch (const PreconditionError& e) {
    return {kPrecondition, error_document("precondition", e.what())};
  } catch (const BudgetExhausted& e) {
    return {kBudget, error_document("budget", e.what())};
  }
}

}  // namespace hadamard::cli
