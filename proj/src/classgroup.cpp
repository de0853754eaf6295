#include "ladder/classgroup.hpp"

#include <algorithm>

namespace ladder {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("divisor coefficient overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("divisor coefficient overflow");
  return out;
}

bool leq(Cell a, Cell b) { return a.row <= b.row && a.col <= b.col; }

}  // namespace

std::string to_string(BasisLabel label) {
  return (label.kind == BasisLabel::Kind::Q ? "Q" : "P") + std::to_string(label.index);
}

std::string to_string(LocalLabel label) {
  return std::string(label.role == LocalLabel::Role::q ? "q" : "p") + "_{" +
         std::to_string(label.factor) + "," + std::to_string(label.index) + "}";
}

BasisShape basis_shape(const CornerProfile& profile) {
  return {profile.h() + 1, profile.k()};
}

DivisorClass::DivisorClass(BasisShape shape,
                           std::initializer_list<Coeffs::value_type> terms)
    : shape_(shape) {
  for (const auto& [label, c] : terms) add(label, c);
}

std::int64_t DivisorClass::operator[](BasisLabel l) const {
  auto it = coeffs_.find(l);
  return it == coeffs_.end() ? 0 : it->second;
}

DivisorClass& DivisorClass::add(BasisLabel l, std::int64_t c) {
  if (!shape_.contains(l))
    throw DomainError("basis label " + to_string(l) + " out of range for this ladder");
  if (c == 0) return *this;
  const std::int64_t v = checked_add((*this)[l], c);
  if (v == 0)
    coeffs_.erase(l);
  else
    coeffs_[l] = v;
  return *this;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& rhs) {
  if (!(shape_ == rhs.shape_)) throw DomainError("divisor classes of different ladders");
  for (const auto& [label, c] : rhs.coeffs_) add(label, c);
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& rhs) { return *this += -rhs; }

DivisorClass DivisorClass::operator-() const { return -1 * *this; }

DivisorClass operator*(std::int64_t s, const DivisorClass& a) {
  DivisorClass out(a.shape_);
  for (const auto& [label, c] : a.coeffs_) out.add(label, checked_mul(s, c));
  return out;
}

std::string to_string(const DivisorClass& d) {
  std::string out = "{";
  bool first = true;
  for (const auto& [label, c] : d.coeffs()) {
    if (!first) out += ", ";
    first = false;
    out += to_string(label) + ":" + std::to_string(c);
  }
  return out + "}";
}

std::vector<BasisLabel> basis(const Ladder& y) {
  require_two_connected(y);
  const BasisShape shape = basis_shape(corners(y));
  std::vector<BasisLabel> out;
  for (int i = 1; i <= shape.q_count; ++i) out.push_back(BasisLabel::Q(i));
  for (int j = 1; j <= shape.p_count; ++j) out.push_back(BasisLabel::P(j));
  return out;
}

std::vector<Cell> ideal_generators(const Ladder& y, BasisLabel label) {
  const CornerProfile prof = corners(y);
  if (!basis_shape(prof).contains(label))
    throw DomainError("basis label " + to_string(label) + " out of range");
  std::vector<Cell> out;
  if (label.kind == BasisLabel::Kind::Q) {
    const int row = prof.lower_at(label.index - 1).row;
    for (const Cell& c : y.cells())
      if (c.row == row) out.push_back(c);
  } else {
    const Cell corner = prof.upper_at(label.index);
    for (const Cell& c : y.cells())
      if (leq(c, corner)) out.push_back(c);
  }
  return out;
}

std::vector<Cell> ideal_generators(const Ladder& y, QPrime label) {
  const CornerProfile prof = corners(y);
  if (label.index < 1 || label.index > prof.h() + 1)
    throw DomainError("q' index " + std::to_string(label.index) + " out of range");
  const int col = prof.lower_at(label.index).col;
  std::vector<Cell> out;
  for (const Cell& c : y.cells())
    if (c.col == col) out.push_back(c);
  return out;
}

DivisorClass canonical_class(const CornerProfile& p) {
  DivisorClass omega(basis_shape(p));
  for (int i = 1; i <= p.h() + 1; ++i) {
    const Cell cur = p.lower_at(i), prev = p.lower_at(i - 1);
    omega.add(BasisLabel::Q(i), cur.row + cur.col - prev.row - prev.col);
  }
  for (int j = 1; j <= p.k(); ++j) {
    const Cell up = p.upper_at(j);
    int ij = 1;
    while (p.lower_at(ij).row <= up.row) ++ij;  // sentinel row m > c_j stops this
    const Cell low = p.lower_at(ij);
    omega.add(BasisLabel::P(j), low.row + low.col - up.row - up.col);
  }
  return omega;
}

DivisorClass canonical_class(const Ladder& y) {
  require_two_connected(y);
  return canonical_class(corners(y));
}

DivisorClass qprime_class(const Ladder& y, int i) {
  require_two_connected(y);
  const CornerProfile p = corners(y);
  if (i < 1 || i > p.h() + 1)
    throw DomainError("q' index " + std::to_string(i) + " out of range");
  DivisorClass out(basis_shape(p));
  out.add(BasisLabel::Q(i), -1);
  const Cell anchor{p.lower_at(i - 1).row, p.lower_at(i).col};
  for (int j = 1; j <= p.k(); ++j)
    if (leq(anchor, p.upper_at(j))) out.add(BasisLabel::P(j), -1);
  return out;
}

RelabelMap relabel(const Factorization& f) {
  const int w = f.w();
  std::vector<Cell> all;
  for (std::size_t u = 0; u < f.factors.size(); ++u)
    for (const Cell& c : f.factors[u].cells()) all.push_back(f.offsets[u].apply(c));
  const CornerProfile global = corners(Ladder::from_cells(std::move(all)));

  RelabelMap map;
  map.shape = basis_shape(global);
  auto bind = [&map](BasisLabel g, LocalLabel l) {
    if (!map.to_local.emplace(g, l).second || !map.to_global.emplace(l, g).second)
      throw DomainError("relabeling is not injective at " + to_string(g));
  };

  // Factor u owns rows [top_u, top_{u+1}), the last factor owning row m.
  auto factor_of_row = [&](int row) {
    int u = 0;
    while (u < w && f.coincidental[u].row <= row) ++u;
    return u;
  };

  for (int i = 1; i <= global.h() + 1; ++i) {
    const int row = global.lower_at(i - 1).row;
    const int u = factor_of_row(row);
    const CornerProfile& local = f.per_factor_corners[u];
    int found = 0;
    for (int li = 1; li <= local.h() + 1; ++li) {
      if (f.offsets[u].apply(local.lower_at(li - 1)).row == row) {
        found = li;
        break;
      }
    }
    if (found == 0) throw DomainError("no factor-local ideal for " + to_string(BasisLabel::Q(i)));
    bind(BasisLabel::Q(i), {u, LocalLabel::Role::q, found});
  }

  for (int j = 1; j <= global.k(); ++j) {
    const Cell corner = global.upper_at(j);
    auto cc = std::find(f.coincidental.begin(), f.coincidental.end(), corner);
    if (cc != f.coincidental.end()) {
      bind(BasisLabel::P(j), {static_cast<int>(cc - f.coincidental.begin()) + 1,
                              LocalLabel::Role::p, 0});
      continue;
    }
    bool placed = false;
    for (int u = 0; u <= w && !placed; ++u) {
      const CornerProfile& local = f.per_factor_corners[u];
      for (int lj = 1; lj <= local.k(); ++lj) {
        if (f.offsets[u].apply(local.upper_at(lj)) == corner) {
          bind(BasisLabel::P(j), {u, LocalLabel::Role::p, lj});
          placed = true;
          break;
        }
      }
    }
    if (!placed) throw DomainError("no factor-local ideal for " + to_string(BasisLabel::P(j)));
  }

  std::size_t expected = static_cast<std::size_t>(w);
  for (const CornerProfile& local : f.per_factor_corners)
    expected += static_cast<std::size_t>(local.h() + 1 + local.k());
  if (map.to_local.size() != static_cast<std::size_t>(map.shape.rank()) ||
      expected != map.to_local.size())
    throw DomainError("relabeling is not a bijection onto the double-indexed labels");
  return map;
}

DivisorClass embed_factor_omega(const Factorization& f, const RelabelMap& map, int u) {
  if (u < 0 || u > f.w())
    throw DomainError("factor index " + std::to_string(u) + " out of range");
  const DivisorClass local = canonical_class(f.factors[u]);
  auto global = [&](LocalLabel l) {
    auto it = map.to_global.find(l);
    if (it == map.to_global.end()) throw DomainError("unmapped label " + to_string(l));
    return it->second;
  };
  DivisorClass out(map.shape);
  for (const auto& [label, c] : local.coeffs()) {
    const auto role =
        label.kind == BasisLabel::Kind::Q ? LocalLabel::Role::q : LocalLabel::Role::p;
    out.add(global({u, role, label.index}), c);
  }
  if (u >= 1) out.add(global({u, LocalLabel::Role::p, 0}), local[BasisLabel::Q(1)]);
  return out;
}

DivisorClass embed_factor_omega(const Factorization& f, int u) {
  return embed_factor_omega(f, relabel(f), u);
}

}  // namespace ladder
