#include "gkz/poly.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <utility>

#include "gkz/error.hpp"
#include "gkz/lp.hpp"

namespace gkz {

SparsePoly::SparsePoly(std::vector<std::string> variables) : vars_(std::move(variables)) {
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (!seen.insert(v).second) throw Error(ErrorKind::InvalidInput, "repeated variable '" + v + "'");
  }
}

SparsePoly SparsePoly::constant(const Integer& c) {
  SparsePoly p;
  p.add_term({}, c);
  return p;
}

SparsePoly SparsePoly::variable(const std::string& name) {
  return monomial({name}, {1});
}

SparsePoly SparsePoly::monomial(std::vector<std::string> variables, Exponents exponents, const Integer& coeff) {
  SparsePoly p(std::move(variables));
  p.add_term(exponents, coeff);
  return p;
}

Integer SparsePoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

void SparsePoly::add_term(const Exponents& e, const Integer& c) {
  if (e.size() != vars_.size()) throw Error(ErrorKind::InvalidInput, "exponent vector length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::vector<std::string> merge_variables(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& v : b) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

SparsePoly SparsePoly::aligned_to(const std::vector<std::string>& variables) const {
  if (variables == vars_) return *this;
  std::vector<std::size_t> target(vars_.size(), SIZE_MAX);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(variables.begin(), variables.end(), vars_[i]);
    if (it != variables.end()) target[i] = static_cast<std::size_t>(it - variables.begin());
  }
  SparsePoly out(variables);
  for (const auto& [e, c] : terms_) {
    Exponents mapped(variables.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (target[i] == SIZE_MAX) {
        throw Error(ErrorKind::InvalidInput, "variable '" + vars_[i] + "' is not in the target list");
      }
      mapped[target[i]] = e[i];
    }
    out.terms_.emplace(std::move(mapped), c);
  }
  return out;
}

std::vector<std::string> SparsePoly::used_variables() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const bool used = std::any_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first[i] != 0; });
    if (used) out.push_back(vars_[i]);
  }
  return out;
}

SparsePoly SparsePoly::trimmed() const { return aligned_to(used_variables()); }

SparsePoly SparsePoly::renamed(const std::map<std::string, std::string>& names) const {
  std::vector<std::string> vars;
  for (const auto& v : vars_) {
    auto it = names.find(v);
    vars.push_back(it == names.end() ? v : it->second);
  }
  SparsePoly out(std::move(vars));
  out.terms_ = terms_;
  return out;
}

long SparsePoly::total_degree() const {
  long best = -1;
  for (const auto& [e, c] : terms_) {
    long deg = 0;
    for (auto x : e) deg += x;
    best = std::max(best, deg);
  }
  return best;
}

bool SparsePoly::is_homogeneous() const {
  const long d = total_degree();
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) {
    long deg = 0;
    for (auto x : t.first) deg += x;
    return deg == d;
  });
}

Rational SparsePoly::eval(const std::map<std::string, Rational>& point) const {
  std::vector<const Rational*> values(vars_.size(), nullptr);
  for (const auto& v : used_variables()) {
    auto it = point.find(v);
    if (it == point.end()) throw Error(ErrorKind::MissingVariable, "no value for '" + v + "'");
  }
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = point.find(vars_[i]);
    if (it != point.end()) values[i] = &it->second;
  }
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::uint32_t k = 0; k < e[i]; ++k) term *= *values[i];
    }
    total += term;
  }
  return total;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& q) {
  const auto vars = merge_variables(vars_, q.vars_);
  if (vars != vars_) *this = aligned_to(vars);
  for (const auto& [e, c] : q.aligned_to(vars).terms_) add_term(e, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& q) {
  const auto vars = merge_variables(vars_, q.vars_);
  if (vars != vars_) *this = aligned_to(vars);
  for (const auto& [e, c] : q.aligned_to(vars).terms_) add_term(e, -c);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const SparsePoly& q) {
  const auto vars = merge_variables(vars_, q.vars_);
  const SparsePoly a = aligned_to(vars);
  const SparsePoly b = q.aligned_to(vars);
  SparsePoly out(vars);
  Exponents e(vars.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  *this = std::move(out);
  return *this;
}

SparsePoly operator-(SparsePoly p) {
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

SparsePoly operator*(const Integer& c, SparsePoly p) {
  if (c == 0) {
    p.terms_.clear();
    return p;
  }
  for (auto& [e, coeff] : p.terms_) coeff *= c;
  return p;
}

bool operator==(const SparsePoly& p, const SparsePoly& q) {
  const auto vars = merge_variables(p.vars_, q.vars_);
  return p.aligned_to(vars).terms_ == q.aligned_to(vars).terms_;
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Integer magnitude = abs(c);
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) out += magnitude.get_str();
    else if (magnitude == 1) out += mono;
    else out += magnitude.get_str() + "*" + mono;
  }
  return out;
}

SparsePoly pow(const SparsePoly& p, unsigned k) {
  SparsePoly result = SparsePoly::constant(1);
  SparsePoly base = p;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  SparsePoly parse_all() {
    SparsePoly p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::InputParseError,
                "polynomial '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  SparsePoly expression() {
    SparsePoly acc = term();
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  SparsePoly term() {
    SparsePoly acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  SparsePoly factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    SparsePoly base = primary();
    if (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      const unsigned long k = std::stoul(std::string(text_.substr(start, pos_ - start)));
      return pow(base, static_cast<unsigned>(k));
    }
    return base;
  }

  SparsePoly primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      SparsePoly inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return SparsePoly::constant(Integer(std::string(text_.substr(start, pos_ - start)), 10));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      return SparsePoly::variable(std::string(text_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SparsePoly SparsePoly::parse(std::string_view text) { return Parser(text).parse_all(); }

SparsePoly exact_divide(const SparsePoly& p, const SparsePoly& q) {
  if (q.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by the zero polynomial");
  const auto vars = merge_variables(p.variables(), q.variables());
  SparsePoly rest = p.aligned_to(vars);
  const SparsePoly divisor = q.aligned_to(vars);
  const auto& [lead_e, lead_c] = *divisor.terms().rbegin();
  SparsePoly quotient(vars);
  Exponents shift(vars.size()), e(vars.size());
  // Lexicographic order is a monomial order, so the leading term of the
  // remainder strictly decreases.
  while (!rest.is_zero()) {
    const auto& [re, rc] = *rest.terms().rbegin();
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (re[i] < lead_e[i]) throw Error(ErrorKind::InexactDivision, p.to_string() + " / " + q.to_string());
      shift[i] = re[i] - lead_e[i];
    }
    if (!mpz_divisible_p(rc.get_mpz_t(), lead_c.get_mpz_t())) {
      throw Error(ErrorKind::InexactDivision, p.to_string() + " / " + q.to_string());
    }
    const Integer factor = rc / lead_c;
    quotient.add_term(shift, factor);
    for (const auto& [de, dc] : divisor.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = de[i] + shift[i];
      rest.add_term(e, -factor * dc);
    }
  }
  return quotient;
}

Integer content(const SparsePoly& p) {
  Integer g = 0;
  for (const auto& [e, c] : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

std::vector<Exponents> NewtonPolytope::vertices() const {
  std::vector<Exponents> out;
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (is_vertex[i]) out.push_back(support[i]);
  }
  return out;
}

NewtonPolytope newton_polytope(const SparsePoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "the zero polynomial has no Newton polytope");
  NewtonPolytope np;
  RationalMatrix points;
  for (const auto& [e, c] : p.terms()) {
    np.support.push_back(e);
    points.emplace_back(e.begin(), e.end());
  }
  np.is_vertex = extreme_point_flags(points);
  return np;
}

std::vector<Term> extremal_terms(const SparsePoly& p) {
  const auto np = newton_polytope(p);
  std::vector<Term> out;
  for (std::size_t i = 0; i < np.support.size(); ++i) {
    if (np.is_vertex[i]) out.push_back({np.support[i], p.coefficient(np.support[i])});
  }
  return out;
}

SparsePoly bareiss_determinant(PolyMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return SparsePoly::constant(1);
  std::vector<std::string> vars;
  for (const auto& row : m) {
    if (row.size() != n) throw Error(ErrorKind::InvalidInput, "determinant of a non-square matrix");
    for (const auto& entry : row) vars = merge_variables(vars, entry.variables());
  }
  for (auto& row : m) {
    for (auto& entry : row) entry = entry.aligned_to(vars);
  }
  bool negate = false;
  SparsePoly prev = SparsePoly::constant(1).aligned_to(vars);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return SparsePoly(vars);
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = exact_divide(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      }
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

}  // namespace gkz
