#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "ladder/decompose.hpp"
#include "ladder/ladder.hpp"

namespace ladder {

/// Global basis element of Cl(R_2(Y)): Q(i) = [q_i] for i = 1..h+1 and
/// P(j) = [p_j] for j = 1..k.
struct BasisLabel {
  enum class Kind { Q, P };
  Kind kind = Kind::Q;
  int index = 1;

  static BasisLabel Q(int i) { return {Kind::Q, i}; }
  static BasisLabel P(int j) { return {Kind::P, j}; }

  friend auto operator<=>(const BasisLabel&, const BasisLabel&) = default;
};

std::string to_string(BasisLabel label);  // "Q1", "P2", ...

/// The column ideal q_i'. Not a basis element; see qprime_class.
struct QPrime {
  int index = 1;
};

/// Size of the free basis: h+1 Q-labels and k P-labels.
struct BasisShape {
  int q_count = 1;
  int p_count = 0;

  int rank() const { return q_count + p_count; }
  bool contains(BasisLabel l) const {
    return l.index >= 1 &&
           l.index <= (l.kind == BasisLabel::Kind::Q ? q_count : p_count);
  }
  friend bool operator==(const BasisShape&, const BasisShape&) = default;
};

BasisShape basis_shape(const CornerProfile& profile);

/// Element of the free abelian group on a ladder's basis, stored sparsely
/// with zero coefficients omitted. Arithmetic is overflow-checked.
class DivisorClass {
 public:
  using Coeffs = std::map<BasisLabel, std::int64_t>;

  DivisorClass() = default;
  explicit DivisorClass(BasisShape shape) : shape_(shape) {}
  DivisorClass(BasisShape shape, std::initializer_list<Coeffs::value_type> terms);

  const BasisShape& shape() const { return shape_; }
  const Coeffs& coeffs() const { return coeffs_; }
  std::int64_t operator[](BasisLabel l) const;
  bool is_zero() const { return coeffs_.empty(); }

  DivisorClass& add(BasisLabel l, std::int64_t c);
  DivisorClass& operator+=(const DivisorClass& rhs);
  DivisorClass& operator-=(const DivisorClass& rhs);
  DivisorClass operator-() const;

  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(std::int64_t s, const DivisorClass& a);

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
  friend auto operator<=>(const DivisorClass& a, const DivisorClass& b) {
    return a.coeffs_ <=> b.coeffs_;
  }

 private:
  BasisShape shape_;
  Coeffs coeffs_;
};

std::string to_string(const DivisorClass& d);  // "{Q1:1, P1:-1}"

/// [Q(1) .. Q(h+1), P(1) .. P(k)]. Requires a 2-connected ladder.
std::vector<BasisLabel> basis(const Ladder& y);

/// Q(i): row a_{i-1}. P(j): cells (p,q) with p <= c_j and q <= d_j.
std::vector<Cell> ideal_generators(const Ladder& y, BasisLabel label);
/// q_i': column b_i.
std::vector<Cell> ideal_generators(const Ladder& y, QPrime label);

/// [omega] = sum lambda_i [q_i] + sum delta_j [p_j] with
/// lambda_i = a_i + b_i - a_{i-1} - b_{i-1} and
/// delta_j = a_{i_j} + b_{i_j} - c_j - d_j, i_j = min{i : a_i > c_j}.
DivisorClass canonical_class(const Ladder& y);
DivisorClass canonical_class(const CornerProfile& profile);

/// [q_i'] = -[q_i] - sum_{j in I_i} [p_j], I_i = {j : (a_{i-1}, b_i) <= (c_j, d_j)}.
DivisorClass qprime_class(const Ladder& y, int i);

/// Double-indexed name of a global label with respect to a factorization:
/// q_{u,i}, p_{u,j}, or p_{u,0} for the u-th coincidental corner.
struct LocalLabel {
  enum class Role { q, p };
  int factor = 0;
  Role role = Role::q;
  int index = 1;

  friend auto operator<=>(const LocalLabel&, const LocalLabel&) = default;
};

std::string to_string(LocalLabel label);  // "q_{0,1}", "p_{1,0}"

struct RelabelMap {
  std::map<BasisLabel, LocalLabel> to_local;
  std::map<LocalLabel, BasisLabel> to_global;
  BasisShape shape;
};

RelabelMap relabel(const Factorization& f);

/// Image of [omega_{R_2(Z_u)}] in Cl(R_2(Y)): the factor's own canonical
/// coordinates, with lambda_{u1} also placed on p_{u,0} when u >= 1.
DivisorClass embed_factor_omega(const Factorization& f, const RelabelMap& map, int u);
DivisorClass embed_factor_omega(const Factorization& f, int u);

}  // namespace ladder
