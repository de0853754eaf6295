#include "ladder/rewriter.hpp"

#include <algorithm>
#include <map>

#include "ladder/decompose.hpp"

namespace ladder {

Monomial::Monomial(std::initializer_list<Term> terms)
    : Monomial(from_terms(std::vector<Term>(terms))) {}

Monomial Monomial::from_terms(std::vector<Term> terms) {
  std::map<Cell, int> merged;
  for (const auto& [c, e] : terms) {
    if (e < 0) throw DomainError("negative exponent at " + to_string(c));
    merged[c] += e;
  }
  Monomial m;
  for (const auto& [c, e] : merged) {
    if (e == 0) continue;
    m.terms_.emplace_back(c, e);
    m.degree_ += e;
  }
  return m;
}

Monomial Monomial::from_cells(const std::vector<Cell>& cells) {
  std::vector<Term> terms;
  terms.reserve(cells.size());
  for (const Cell& c : cells) terms.emplace_back(c, 1);
  return from_terms(std::move(terms));
}

int Monomial::exponent(Cell c) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), c,
                             [](const Term& t, Cell key) { return t.first < key; });
  return it != terms_.end() && it->first == c ? it->second : 0;
}

std::vector<Cell> Monomial::expanded() const {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(degree_));
  for (const auto& [c, e] : terms_) out.insert(out.end(), static_cast<std::size_t>(e), c);
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Term> terms = a.terms_;
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return Monomial::from_terms(std::move(terms));
}

std::string to_string(const Monomial& m) {
  if (m.is_unit()) return "1";
  std::string out;
  for (const auto& [c, e] : m.terms()) {
    if (!out.empty()) out += "*";
    out += "x_{" + std::to_string(c.row) + "," + std::to_string(c.col) + "}";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

RewriteSystem::RewriteSystem(Ladder ambient) : ambient_(std::move(ambient)) {
  const auto& cells = ambient_.cells();
  for (const Cell& nw : cells)
    for (const Cell& se : cells)
      if (applies(nw, se)) rules_.push_back({nw, se});
}

void RewriteSystem::require_supported(const Monomial& m) const {
  for (const auto& [c, e] : m.terms())
    if (!ambient_.contains(c))
      throw DomainError("monomial uses " + to_string(c) + ", which is not in the ladder");
}

namespace {

// Row-major smallest (nw, se) among pairs of support cells; false if none.
bool smallest_redex(const std::vector<Monomial::Term>& terms, const RewriteSystem& rs,
                    Cell& nw, Cell& se) {
  for (std::size_t s = 0; s < terms.size(); ++s)
    for (std::size_t t = s + 1; t < terms.size(); ++t)
      if (rs.applies(terms[s].first, terms[t].first)) {
        nw = terms[s].first;
        se = terms[t].first;
        return true;
      }
  return false;
}

}  // namespace

Monomial normal_form(const Monomial& m, const RewriteSystem& rs) {
  rs.require_supported(m);
  std::map<Cell, int> exps;
  for (const auto& [c, e] : m.terms()) exps[c] = e;
  std::vector<Monomial::Term> terms(m.terms());
  Cell nw, se;
  while (smallest_redex(terms, rs, nw, se)) {
    if (--exps[nw] == 0) exps.erase(nw);
    if (--exps[se] == 0) exps.erase(se);
    ++exps[{nw.row, se.col}];
    ++exps[{se.row, nw.col}];
    terms.assign(exps.begin(), exps.end());
  }
  return Monomial::from_terms(std::move(terms));
}

bool is_normal(const Monomial& m, const RewriteSystem& rs) {
  Cell nw, se;
  return !smallest_redex(m.terms(), rs, nw, se);
}

bool equal_mod_minors(const Monomial& a, const Monomial& b, const RewriteSystem& rs) {
  if (a.degree() != b.degree()) {
    rs.require_supported(a);
    rs.require_supported(b);
    return false;
  }
  return normal_form(a, rs) == normal_form(b, rs);
}

namespace {

void require_bound(int bound) {
  if (bound < 1) throw DomainError("degree bound must be at least 1");
  if (bound > kMaxDegreeBound)
    throw DomainError("degree bound " + std::to_string(bound) + " exceeds the cap of " +
                      std::to_string(kMaxDegreeBound));
}

void extend_standard(const RewriteSystem& rs, std::size_t from, int remaining,
                     std::vector<Cell>& chosen, std::vector<Monomial>& out) {
  if (remaining == 0) {
    out.push_back(Monomial::from_cells(chosen));
    return;
  }
  const auto& cells = rs.ambient().cells();
  for (std::size_t s = from; s < cells.size(); ++s) {
    const Cell c = cells[s];
    // Cells arrive in row-major order, so c can only be the south-east end.
    bool ok = true;
    for (const Cell& prev : chosen)
      if (rs.applies(prev, c)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    chosen.push_back(c);
    extend_standard(rs, s, remaining - 1, chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<Monomial> standard_monomials(const RewriteSystem& rs, int degree) {
  if (degree < 0) throw DomainError("negative degree");
  std::vector<Monomial> out;
  std::vector<Cell> chosen;
  extend_standard(rs, 0, degree, chosen, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::set<Monomial> ideal_monomials_bounded(const std::vector<Cell>& gens, int bound,
                                           const RewriteSystem& rs) {
  require_bound(bound);
  for (const Cell& g : gens)
    if (!rs.ambient().contains(g))
      throw DomainError("generator " + to_string(g) + " is not in the ladder");
  std::set<Monomial> out;
  for (int d = 0; d < bound; ++d)
    for (const Monomial& t : standard_monomials(rs, d))
      for (const Cell& g : gens) out.insert(normal_form(Monomial::variable(g) * t, rs));
  return out;
}

std::set<Monomial> intersect_bounded(const std::vector<Cell>& gens1,
                                     const std::vector<Cell>& gens2, int bound,
                                     const RewriteSystem& rs) {
  const std::set<Monomial> a = ideal_monomials_bounded(gens1, bound, rs);
  const std::set<Monomial> b = ideal_monomials_bounded(gens2, bound, rs);
  std::vector<Monomial> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));

  std::vector<std::vector<Monomial>> by_degree(static_cast<std::size_t>(bound) + 1);
  for (int d = 0; d <= bound; ++d) by_degree[d] = standard_monomials(rs, d);

  std::set<Monomial> minimal;
  for (const Monomial& m : common) {
    bool divisible = false;
    for (const Monomial& smaller : common) {
      if (smaller.degree() >= m.degree()) break;  // sorted by degree first
      for (const Monomial& t : by_degree[m.degree() - smaller.degree()]) {
        if (normal_form(t * smaller, rs) == m) {
          divisible = true;
          break;
        }
      }
      if (divisible) break;
    }
    if (!divisible) minimal.insert(m);
  }
  return minimal;
}

namespace {

// Sufficient monomial-level test for membership in (gens)^power.
bool in_power(const Monomial& m, const std::vector<Cell>& gens, int power) {
  int hits = 0;
  for (const Cell& g : gens) hits += m.exponent(g);
  return hits >= power;
}

struct Shape {
  Ladder y;
  Cell corner;
  int lambda01 = 0;
  int lambda11 = 0;
};

Shape two_matrix_shape(const Ladder& y) {
  const Factorization f = decompose(y);
  if (f.w() != 1 || !f.factors[0].is_full_matrix() || !f.factors[1].is_full_matrix())
    throw DomainError(
        "witness check needs Y = Z_0 # Z_1 with both factors full matrices");
  const Cell cc = f.coincidental.front();
  return {y, cc, cc.row + cc.col - 1 - y.cols(), y.rows() + 1 - cc.row - cc.col};
}

// lambda_11 = -lambda_01 = lambda > 0: C8 = p10^lambda and
// C11 = q'01^lambda ∩ p10^lambda ∩ q11^lambda.
void check_negative(const Shape& s, int lambda, WitnessCase& out) {
  const RewriteSystem rs(s.y);
  const int a = s.corner.row, b = s.corner.col;
  std::vector<Cell> p10, q11, qprime01;
  for (const Cell& c : s.y.cells()) {
    if (c.row <= a && c.col <= b) p10.push_back(c);
    if (c.row == a) q11.push_back(c);
    if (c.col == b) qprime01.push_back(c);
  }
  const Monomial corner_pow = Monomial::variable({a, b}, lambda);
  const Monomial mixed = Monomial{{{1, b}, 1}, {{a, 1}, 1}, {{a, b}, lambda - 1}};
  out.first = {corner_pow, mixed};
  out.second = {mixed, corner_pow};
  auto in_c8 = [&](const Monomial& m) { return in_power(m, p10, lambda); };
  auto in_c11 = [&](const Monomial& m) {
    return in_power(m, qprime01, lambda) && in_power(m, p10, lambda) &&
           in_power(m, q11, lambda);
  };
  out.arguments_in_ideals = in_c8(out.first.first) && in_c11(out.first.second) &&
                            in_c8(out.second.first) && in_c11(out.second.second);
  out.tensors_distinct = normal_form(out.first.first, rs) != normal_form(out.second.first, rs);
  out.products_equal = equal_mod_minors(out.first.first * out.first.second,
                                        out.second.first * out.second.second, rs);
}

// lambda_11 = lambda_01 = lambda > 0: C9 = q01^lambda ∩ p10^lambda and
// C10 = q11^lambda.
void check_positive(const Shape& s, int lambda, WitnessCase& out) {
  const RewriteSystem rs(s.y);
  const int a = s.corner.row, b = s.corner.col, n = s.y.cols();
  std::vector<Cell> p10, q01, q11;
  for (const Cell& c : s.y.cells()) {
    if (c.row <= a && c.col <= b) p10.push_back(c);
    if (c.row == 1) q01.push_back(c);
    if (c.row == a) q11.push_back(c);
  }
  out.first = {Monomial{{{1, b}, lambda - 1}, {{1, n}, 1}, {{a, 1}, 1}},
               Monomial{{{a, b}, 1}, {{a, n}, lambda - 1}}};
  out.second = {Monomial{{{a, 1}, 1}, {{1, b}, lambda}}, Monomial::variable({a, n}, lambda)};
  auto in_c9 = [&](const Monomial& m) {
    return in_power(m, q01, lambda) && in_power(m, p10, lambda);
  };
  auto in_c10 = [&](const Monomial& m) { return in_power(m, q11, lambda); };
  out.arguments_in_ideals = in_c9(out.first.first) && in_c10(out.first.second) &&
                            in_c9(out.second.first) && in_c10(out.second.second);
  out.tensors_distinct = normal_form(out.first.first, rs) != normal_form(out.second.first, rs);
  out.products_equal = equal_mod_minors(out.first.first * out.first.second,
                                        out.second.first * out.second.second, rs);
}

}  // namespace

bool WitnessReport::vacuous() const {
  return std::none_of(cases.begin(), cases.end(),
                      [](const WitnessCase& c) { return c.applicable; });
}

bool WitnessReport::all_hold() const {
  return std::all_of(cases.begin(), cases.end(),
                     [](const WitnessCase& c) { return !c.applicable || c.holds(); });
}

WitnessReport verify_witnesses(const Ladder& y) {
  const Shape s = two_matrix_shape(y);
  WitnessReport report;
  report.lambda01 = s.lambda01;
  report.lambda11 = s.lambda11;
  report.corner = s.corner;

  WitnessCase neg;
  neg.name = "lambda11 = -lambda01 > 0";
  neg.lambda = s.lambda11;
  neg.applicable = s.lambda11 > 0 && s.lambda11 == -s.lambda01;
  if (neg.applicable) check_negative(s, s.lambda11, neg);

  WitnessCase pos;
  pos.name = "lambda11 = lambda01 > 0";
  pos.lambda = s.lambda11;
  pos.applicable = s.lambda11 > 0 && s.lambda11 == s.lambda01;
  if (pos.applicable) check_positive(s, s.lambda11, pos);

  // The remaining sign patterns reduce to the two above on the antitranspose,
  // where both lambdas change sign.
  WitnessCase neg_t;
  neg_t.name = "lambda01 = -lambda11 > 0 (antitransposed)";
  neg_t.antitransposed = true;
  neg_t.lambda = s.lambda01;
  neg_t.applicable = s.lambda01 > 0 && s.lambda01 == -s.lambda11;
  WitnessCase pos_t;
  pos_t.name = "lambda01 = lambda11 < 0 (antitransposed)";
  pos_t.antitransposed = true;
  pos_t.lambda = -s.lambda01;
  pos_t.applicable = s.lambda01 < 0 && s.lambda01 == s.lambda11;
  if (neg_t.applicable || pos_t.applicable) {
    const Shape t = two_matrix_shape(antitranspose(y));
    if (neg_t.applicable) check_negative(t, t.lambda11, neg_t);
    if (pos_t.applicable) check_positive(t, t.lambda11, pos_t);
  }
  report.cases = {neg, pos, neg_t, pos_t};
  return report;
}

}  // namespace ladder
