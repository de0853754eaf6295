#pragma once

#include <compare>
#include <initializer_list>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ladder/ladder.hpp"

namespace ladder {

/// Monomial in the variables x_{ij} of a ladder; sparse, zero exponents
/// omitted, the empty monomial is 1.
class Monomial {
 public:
  using Term = std::pair<Cell, int>;

  Monomial() = default;
  Monomial(std::initializer_list<Term> terms);
  static Monomial from_terms(std::vector<Term> terms);
  /// One factor per entry; repeated cells raise the exponent.
  static Monomial from_cells(const std::vector<Cell>& cells);
  static Monomial variable(Cell c, int exponent = 1) { return Monomial{{c, exponent}}; }

  const std::vector<Term>& terms() const { return terms_; }
  int degree() const { return degree_; }
  int exponent(Cell c) const;
  bool is_unit() const { return terms_.empty(); }
  /// Cells with multiplicity, row-major.
  std::vector<Cell> expanded() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.terms_ == b.terms_; }
  friend auto operator<=>(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
    return a.terms_ <=> b.terms_;
  }

 private:
  std::vector<Term> terms_;
  int degree_ = 0;
};

std::string to_string(const Monomial& m);  // "x_{1,3}*x_{3,2}^2"

/// The 2-minors of a ladder as rewrite rules x_{ij} x_{pq} -> x_{iq} x_{pj}
/// for i < p, j < q with all four cells in the ladder.
class RewriteSystem {
 public:
  struct Rule {
    Cell diagonal_nw;
    Cell diagonal_se;
    friend auto operator<=>(const Rule&, const Rule&) = default;
  };

  explicit RewriteSystem(Ladder ambient);

  const Ladder& ambient() const { return ambient_; }
  const std::vector<Rule>& rules() const { return rules_; }

  bool applies(Cell nw, Cell se) const {
    return nw.row < se.row && nw.col < se.col && ambient_.contains(nw) &&
           ambient_.contains(se) && ambient_.contains(nw.row, se.col) &&
           ambient_.contains(se.row, nw.col);
  }

  /// Throws DomainError if m uses a cell outside the ambient ladder.
  void require_supported(const Monomial& m) const;

 private:
  Ladder ambient_;
  std::vector<Rule> rules_;
};

/// Rewrites with the row-major smallest applicable rule until none applies.
Monomial normal_form(const Monomial& m, const RewriteSystem& rs);

/// True iff m contains no diagonal pair of a rule.
bool is_normal(const Monomial& m, const RewriteSystem& rs);

bool equal_mod_minors(const Monomial& a, const Monomial& b, const RewriteSystem& rs);

inline constexpr int kMaxDegreeBound = 8;

/// All normal-form monomials of the given degree.
std::vector<Monomial> standard_monomials(const RewriteSystem& rs, int degree);

/// Normal forms of x_g * t for g in gens and t normal of degree < bound,
/// i.e. every monomial of degree <= bound in the ideal (gens).
std::set<Monomial> ideal_monomials_bounded(const std::vector<Cell>& gens, int bound,
                                           const RewriteSystem& rs);

/// Minimal generators (up to the bound) of the monomials common to both
/// ideals; m is dropped when NF(t * m') = m for another member m'.
std::set<Monomial> intersect_bounded(const std::vector<Cell>& gens1,
                                     const std::vector<Cell>& gens2, int bound,
                                     const RewriteSystem& rs);

/// Checks the multiplication-map identities that witness non-injectivity
/// of mu for Y = Z_0 # Z_1 with both factors full matrices.
struct WitnessCase {
  std::string name;
  bool applicable = false;
  /// Ladder the identity is checked in (Y, or its antitranspose).
  bool antitransposed = false;
  int lambda = 0;
  /// The two elementary tensors, as (left, right) monomial pairs.
  std::pair<Monomial, Monomial> first;
  std::pair<Monomial, Monomial> second;
  bool arguments_in_ideals = false;
  bool tensors_distinct = false;
  bool products_equal = false;

  bool holds() const { return arguments_in_ideals && tensors_distinct && products_equal; }
};

struct WitnessReport {
  int lambda01 = 0;
  int lambda11 = 0;
  Cell corner;
  std::vector<WitnessCase> cases;

  bool vacuous() const;
  bool all_hold() const;
};

WitnessReport verify_witnesses(const Ladder& y);

}  // namespace ladder
