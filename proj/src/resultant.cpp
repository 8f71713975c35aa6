#include "gkz/resultant.hpp"

#include <set>

#include "gkz/error.hpp"

namespace gkz {

std::vector<std::string> coefficient_letters(std::size_t degree) {
  return default_labels(degree + 1);
}

UnivariateSymbolic UnivariateSymbolic::generic(std::size_t degree, const std::string& suffix) {
  auto names = coefficient_letters(degree);
  for (auto& n : names) n += suffix;
  return named(std::move(names));
}

UnivariateSymbolic UnivariateSymbolic::named(std::vector<std::string> names) {
  if (names.size() < 2) throw Error(ErrorKind::InvalidInput, "univariate polynomial needs degree >= 1");
  if (std::set<std::string>(names.begin(), names.end()).size() != names.size()) {
    throw Error(ErrorKind::InvalidInput, "coefficient names must be distinct");
  }
  UnivariateSymbolic f;
  f.degree = names.size() - 1;
  f.coeff_names = std::move(names);
  return f;
}

std::vector<SparsePoly> UnivariateSymbolic::coefficients() const {
  std::vector<SparsePoly> out;
  for (const auto& n : coeff_names) out.push_back(SparsePoly::variable(n));
  return out;
}

PolyMatrix sylvester_matrix(std::span<const SparsePoly> f, std::span<const SparsePoly> g) {
  if (f.size() < 2 || g.size() < 2) throw Error(ErrorKind::InvalidInput, "Sylvester matrix needs degrees >= 1");
  const std::size_t df = f.size() - 1;
  const std::size_t dg = g.size() - 1;
  const std::size_t n = df + dg;
  PolyMatrix m(n, std::vector<SparsePoly>(n));
  for (std::size_t r = 0; r < dg; ++r) {
    for (std::size_t k = 0; k <= df; ++k) m[r][r + k] = f[k];
  }
  for (std::size_t r = 0; r < df; ++r) {
    for (std::size_t k = 0; k <= dg; ++k) m[dg + r][r + k] = g[k];
  }
  return m;
}

PolyMatrix sylvester_matrix(const UnivariateSymbolic& f, const UnivariateSymbolic& g) {
  const auto fc = f.coefficients();
  const auto gc = g.coefficients();
  return sylvester_matrix(fc, gc);
}

SparsePoly resultant(std::span<const SparsePoly> f, std::span<const SparsePoly> g) {
  return bareiss_determinant(sylvester_matrix(f, g));
}

SparsePoly resultant(const UnivariateSymbolic& f, const UnivariateSymbolic& g) {
  return bareiss_determinant(sylvester_matrix(f, g));
}

std::vector<SparsePoly> derivative(std::span<const SparsePoly> f) {
  std::vector<SparsePoly> out;
  const std::size_t d = f.empty() ? 0 : f.size() - 1;
  for (std::size_t k = 0; k < d; ++k) out.push_back(Integer(static_cast<long>(d - k)) * f[k]);
  return out;
}

SparsePoly discriminant_univariate(std::size_t degree) {
  if (degree < 2) throw Error(ErrorKind::InvalidInput, "discriminant needs degree >= 2");
  const auto f = UnivariateSymbolic::generic(degree).coefficients();
  const auto df = derivative(f);
  SparsePoly disc = exact_divide(resultant(f, df), f.front());
  // Finest subdivision term: every interior coefficient squared.
  const auto letters = coefficient_letters(degree);
  Exponents finest(letters.size(), 2);
  finest.front() = 0;
  finest.back() = 0;
  const Integer lead = disc.aligned_to(letters).coefficient(finest);
  if (lead < 0) disc = -disc;
  return disc.aligned_to(letters);
}

SparsePoly ea_univariate(std::size_t degree) {
  const auto letters = coefficient_letters(degree);
  return (SparsePoly::variable(letters.front()) * SparsePoly::variable(letters.back()) *
          discriminant_univariate(degree))
      .aligned_to(letters);
}

SparsePoly specialize(const SparsePoly& r, const SpecializationMap& m) {
  const auto& vars = r.variables();
  std::vector<const SparsePoly*> images(vars.size(), nullptr);
  for (std::size_t i = 0; i < vars.size(); ++i) {
    auto it = m.find(vars[i]);
    if (it != m.end()) images[i] = &it->second;
  }
  for (const auto& v : r.used_variables()) {
    if (m.find(v) == m.end()) throw Error(ErrorKind::UnassignedVariable, "no image for '" + v + "'");
  }
  // Cache powers per variable; desk-scale exponents are small.
  std::vector<std::vector<SparsePoly>> powers(vars.size());
  auto power = [&](std::size_t i, std::uint32_t k) -> const SparsePoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(SparsePoly::constant(1));
    while (cache.size() <= k) cache.push_back(cache.back() * *images[i]);
    return cache[k];
  };
  SparsePoly out;
  for (const auto& [e, c] : r.terms()) {
    SparsePoly term = SparsePoly::constant(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) term *= power(i, e[i]);
    }
    out += term;
  }
  return out;
}

LogDerivativeBasis default_log_derivative_basis(std::size_t dim) {
  LogDerivativeBasis basis(dim + 1, std::vector<long>(dim + 1, 0));
  for (std::size_t k = 0; k <= dim; ++k) basis[k][k] = 1;
  return basis;
}

namespace {

void check_basis(const PointConfiguration& config, const LogDerivativeBasis& basis) {
  const std::size_t d = config.dim();
  if (basis.size() != d + 1) throw Error(ErrorKind::InvalidBasis, "basis needs dim+1 functionals");
  IntegerMatrix m;
  for (const auto& row : basis) {
    if (row.size() != d + 1) throw Error(ErrorKind::InvalidBasis, "functional needs dim+1 coefficients");
    m.emplace_back(row.begin(), row.end());
  }
  if (abs(integer_determinant(std::move(m))) != 1) {
    throw Error(ErrorKind::InvalidBasis, "basis does not span the log-derivative lattice");
  }
}

}  // namespace

PolyMatrix log_derivative_matrix(const PointConfiguration& config, const LogDerivativeBasis& basis) {
  check_basis(config, basis);
  PolyMatrix m;
  for (std::size_t i = 0; i < config.size(); ++i) {
    const SparsePoly var = SparsePoly::variable(config.label(i));
    std::vector<SparsePoly> row;
    for (const auto& functional : basis) {
      long value = functional[0];
      for (std::size_t c = 0; c < config.dim(); ++c) value += functional[c + 1] * config.point(i)[c];
      row.push_back(Integer(value) * var);
    }
    m.push_back(std::move(row));
  }
  return m;
}

PluckerImage plucker_specialization(const PointConfiguration& config, const Simplex& s,
                                    const LogDerivativeBasis& basis) {
  if (s.size() != config.dim() + 1) {
    throw Error(ErrorKind::InvalidInput, "simplex needs " + std::to_string(config.dim() + 1) + " vertices");
  }
  for (std::size_t v : s.vertices()) {
    if (v >= config.size()) throw Error(ErrorKind::IndexOutOfRange, "simplex vertex index");
  }
  const PolyMatrix full = log_derivative_matrix(config, basis);
  PolyMatrix minor;
  for (std::size_t v : s.vertices()) minor.push_back(full[v]);
  const SparsePoly det = bareiss_determinant(std::move(minor));
  if (det.is_zero()) throw Error(ErrorKind::DegenerateSimplex, "simplex " + simplex_name(config, s) + " is flat");
  if (det.size() != 1) throw Error(ErrorKind::InvalidInput, "Plücker image is not a monomial");
  const auto& [e, c] = *det.terms().begin();
  return {c, SparsePoly::monomial(det.variables(), e).trimmed()};
}

PluckerImage plucker_specialization(const PointConfiguration& config, const Simplex& s) {
  return plucker_specialization(config, s, default_log_derivative_basis(config.dim()));
}

}  // namespace gkz
