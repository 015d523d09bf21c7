#include "ternalg/matched_pair.hpp"

#include <array>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ternalg/errors.hpp"
#include "ternalg/kernels.hpp"

namespace ternalg {

void MatchedPairData::validate() const {
  a_on_b.validate(A.dim(), B.dim());
  b_on_a.validate(B.dim(), A.dim());
}

namespace {

std::vector<Vector> columns(const Matrix& m) {
  std::vector<Vector> out;
  for (std::size_t j = 0; j < m.dim(); ++j) out.push_back(m.column(j));
  return out;
}

std::vector<Vector> basis_of(std::size_t n) {
  std::vector<Vector> out;
  for (std::size_t j = 0; j < n; ++j) out.push_back(Vector::basis(n, j));
  return out;
}

// x, y, z range over A; a, b, c over B. LA/MA/RA are the actions of A on B, LB/MB/RB those of B on A.
struct Pair {
  explicit Pair(const MatchedPairData& mp)
      : mp(mp), ea(basis_of(mp.A.dim())), eb(basis_of(mp.B.dim())), a1(columns(mp.A.alpha1())),
        a2(columns(mp.A.alpha2())), b1(columns(mp.B.alpha1())), b2(columns(mp.B.alpha2())) {}

  Vector muA(const Vector& x, const Vector& y, const Vector& z) const { return mp.A.mu().apply(x, y, z); }
  Vector muB(const Vector& a, const Vector& b, const Vector& c) const { return mp.B.mu().apply(a, b, c); }
  Vector LA(const Vector& x, const Vector& y, const Vector& v) const { return act_left(mp.a_on_b, x, y, v); }
  Vector MA(const Vector& x, const Vector& y, const Vector& v) const { return act_middle(mp.a_on_b, x, y, v); }
  Vector RA(const Vector& x, const Vector& y, const Vector& v) const { return act_right(mp.a_on_b, x, y, v); }
  Vector LB(const Vector& a, const Vector& b, const Vector& v) const { return act_left(mp.b_on_a, a, b, v); }
  Vector MB(const Vector& a, const Vector& b, const Vector& v) const { return act_middle(mp.b_on_a, a, b, v); }
  Vector RB(const Vector& a, const Vector& b, const Vector& v) const { return act_right(mp.b_on_a, a, b, v); }

  const MatchedPairData& mp;
  std::vector<Vector> ea, eb, a1, a2, b1, b2;
};

// Basis indices of the three elements of one algebra and the two of the other, in order of appearance.
struct Args {
  std::size_t x, y, z;  // for B-valued conditions z is unused
  std::size_t a, b, c;  // for A-valued conditions c is unused
};

using Terms = std::array<Vector, 3>;

struct Condition {
  const char* name;
  std::array<bool, 5> in_b;  // which argument slots hold elements of B
  const char* statement;
  std::function<Terms(const Pair&, const Args&)> terms;
};

// Each condition lists the re-association patterns left, middle, right of the product of five
// mixed arguments, in the slot layout given by in_b.
const std::vector<Condition>& conditions() {
  static const std::vector<Condition> table = {
      {"B_at_12", {true, true, false, false, false},
       "μA(L_B(a,b)x,α1y,α2z) ~ L_B(β1a,R_A(x,y)b)α2z ~ L_B(β1a,β2b)μA(x,y,z)",
       [](const Pair& p, const Args& g) -> Terms {
         return {p.muA(p.LB(p.eb[g.a], p.eb[g.b], p.ea[g.x]), p.a1[g.y], p.a2[g.z]),
                 p.LB(p.b1[g.a], p.RA(p.ea[g.x], p.ea[g.y], p.eb[g.b]), p.a2[g.z]),
                 p.LB(p.b1[g.a], p.b2[g.b], p.muA(p.ea[g.x], p.ea[g.y], p.ea[g.z]))};
       }},
      {"B_at_13", {true, false, true, false, false},
       "μA(M_B(a,b)x,α1y,α2z) ~ L_B(β1a,M_A(x,y)b)α2z ~ M_B(β1a,R_A(y,z)b)α2x",
       [](const Pair& p, const Args& g) -> Terms {
         return {p.muA(p.MB(p.eb[g.a], p.eb[g.b], p.ea[g.x]), p.a1[g.y], p.a2[g.z]),
                 p.LB(p.b1[g.a], p.MA(p.ea[g.x], p.ea[g.y], p.eb[g.b]), p.a2[g.z]),
                 p.MB(p.b1[g.a], p.RA(p.ea[g.y], p.ea[g.z], p.eb[g.b]), p.a2[g.x])};
       }},
      {"B_at_23", {false, true, true, false, false},
       "μA(R_B(a,b)x,α1y,α2z) ~ μA(α1x,L_B(a,b)y,α2z) ~ R_B(β2a,R_A(y,z)b)α1x",
       [](const Pair& p, const Args& g) -> Terms {
         return {p.muA(p.RB(p.eb[g.a], p.eb[g.b], p.ea[g.x]), p.a1[g.y], p.a2[g.z]),
                 p.muA(p.a1[g.x], p.LB(p.eb[g.a], p.eb[g.b], p.ea[g.y]), p.a2[g.z]),
                 p.RB(p.b2[g.a], p.RA(p.ea[g.y], p.ea[g.z], p.eb[g.b]), p.a1[g.x])};
       }},
      {"B_at_34", {false, false, true, true, false},
       "L_B(L_A(x,y)a,β1b)α2z ~ μA(α1x,R_B(a,b)y,α2z) ~ μA(α1x,α2y,L_B(a,b)z)",
       [](const Pair& p, const Args& g) -> Terms {
         return {p.LB(p.LA(p.ea[g.x], p.ea[g.y], p.eb[g.a]), p.b1[g.b], p.a2[g.z]),
                 p.muA(p.a1[g.x], p.RB(p.eb[g.a], p.eb[g.b], p.ea[g.y]), p.a2[g.z]),
                 p.muA(p.a1[g.x], p.a2[g.y], p.LB(p.eb[g.a], p.eb[g.b], p.ea[g.z]))};
       }},
      {"B_at_24", {false, true, false, true, false},
       "L_B(M_A(x,y)a,β1b)α2z ~ μA(α1x,M_B(a,b)y,α2z) ~ R_B(β2a,M_A(y,z)b)α1x",
       [](const Pair& p, const Args& g) -> Terms {
         return {p.LB(p.MA(p.ea[g.x], p.ea[g.y], p.eb[g.a]), p.b1[g.b], p.a2[g.z]),
                 p.muA(p.a1[g.x], p.MB(p.eb[g.a], p.eb[g.b], p.ea[g.y]), p.a2[g.z]),
                 p.RB(p.b2[g.a], p.MA(p.ea[g.y], p.ea[g.z], p.eb[g.b]), p.a1[g.x])};
       }},
      {"B_at_14", {true, false, false, true, false},
       "L_B(R_A(x,y)a,β1b)α2z ~ L_B(β1a,L_A(x,y)b)α2z ~ M_B(β1a,M_A(y,z)b)α2x",
       [](const Pair& p, const Args& g) -> Terms {
         return {p.LB(p.RA(p.ea[g.x], p.ea[g.y], p.eb[g.a]), p.b1[g.b], p.a2[g.z]),
                 p.LB(p.b1[g.a], p.LA(p.ea[g.x], p.ea[g.y], p.eb[g.b]), p.a2[g.z]),
                 p.MB(p.b1[g.a], p.MA(p.ea[g.y], p.ea[g.z], p.eb[g.b]), p.a2[g.x])};
       }},
      {"B_at_35", {false, false, true, false, true},
       "M_B(L_A(x,y)a,β2b)α1z ~ R_B(M_A(y,z)a,β2b)α1x ~ μA(α1x,α2y,M_B(a,b)z)",
       [](const Pair& p, const Args& g) -> Terms {
         return {p.MB(p.LA(p.ea[g.x], p.ea[g.y], p.eb[g.a]), p.b2[g.b], p.a1[g.z]),
                 p.RB(p.MA(p.ea[g.y], p.ea[g.z], p.eb[g.a]), p.b2[g.b], p.a1[g.x]),
                 p.muA(p.a1[g.x], p.a2[g.y], p.MB(p.eb[g.a], p.eb[g.b], p.ea[g.z]))};
       }},
      {"B_at_25", {false, true, false, false, true},
       "M_B(M_A(x,y)a,β2b)α1z ~ R_B(R_A(y,z)a,β2b)α1x ~ R_B(β2a,L_A(y,z)b)α1x",
       [](const Pair& p, const Args& g) -> Terms {
         return {p.MB(p.MA(p.ea[g.x], p.ea[g.y], p.eb[g.a]), p.b2[g.b], p.a1[g.z]),
                 p.RB(p.RA(p.ea[g.y], p.ea[g.z], p.eb[g.a]), p.b2[g.b], p.a1[g.x]),
                 p.RB(p.b2[g.a], p.LA(p.ea[g.y], p.ea[g.z], p.eb[g.b]), p.a1[g.x])};
       }},
      {"B_at_15", {true, false, false, false, true},
       "M_B(R_A(x,y)a,β2b)α1z ~ M_B(β1a,β2b)μA(x,y,z) ~ M_B(β1a,L_A(y,z)b)α2x",
       [](const Pair& p, const Args& g) -> Terms {
         return {p.MB(p.RA(p.ea[g.x], p.ea[g.y], p.eb[g.a]), p.b2[g.b], p.a1[g.z]),
                 p.MB(p.b1[g.a], p.b2[g.b], p.muA(p.ea[g.x], p.ea[g.y], p.ea[g.z])),
                 p.MB(p.b1[g.a], p.LA(p.ea[g.y], p.ea[g.z], p.eb[g.b]), p.a2[g.x])};
       }},
      {"B_at_45", {false, false, false, true, true},
       "R_B(β1a,β2b)μA(x,y,z) ~ R_B(L_A(y,z)a,β2b)α1x ~ μA(α1x,α2y,R_B(a,b)z)",
       [](const Pair& p, const Args& g) -> Terms {
         return {p.RB(p.b1[g.a], p.b2[g.b], p.muA(p.ea[g.x], p.ea[g.y], p.ea[g.z])),
                 p.RB(p.LA(p.ea[g.y], p.ea[g.z], p.eb[g.a]), p.b2[g.b], p.a1[g.x]),
                 p.muA(p.a1[g.x], p.a2[g.y], p.RB(p.eb[g.a], p.eb[g.b], p.ea[g.z]))};
       }},
      {"A_at_12", {false, false, true, true, true},
       "μB(L_A(x,y)a,β1b,β2c) ~ L_A(α1x,R_B(a,b)y)β2c ~ L_A(α1x,α2y)μB(a,b,c)",
       [](const Pair& p, const Args& g) -> Terms {
         return {p.muB(p.LA(p.ea[g.x], p.ea[g.y], p.eb[g.a]), p.b1[g.b], p.b2[g.c]),
                 p.LA(p.a1[g.x], p.RB(p.eb[g.a], p.eb[g.b], p.ea[g.y]), p.b2[g.c]),
                 p.LA(p.a1[g.x], p.a2[g.y], p.muB(p.eb[g.a], p.eb[g.b], p.eb[g.c]))};
       }},
      {"A_at_13", {false, true, false, true, true},
       "μB(M_A(x,y)a,β1b,β2c) ~ L_A(α1x,M_B(a,b)y)β2c ~ M_A(α1x,R_B(b,c)y)β2a",
       [](const Pair& p, const Args& g) -> Terms {
         return {p.muB(p.MA(p.ea[g.x], p.ea[g.y], p.eb[g.a]), p.b1[g.b], p.b2[g.c]),
                 p.LA(p.a1[g.x], p.MB(p.eb[g.a], p.eb[g.b], p.ea[g.y]), p.b2[g.c]),
                 p.MA(p.a1[g.x], p.RB(p.eb[g.b], p.eb[g.c], p.ea[g.y]), p.b2[g.a])};
       }},
      {"A_at_23", {true, false, false, true, true},
       "μB(R_A(x,y)a,β1b,β2c) ~ μB(β1a,L_A(x,y)b,β2c) ~ R_A(α2x,R_B(b,c)y)β1a",
       [](const Pair& p, const Args& g) -> Terms {
         return {p.muB(p.RA(p.ea[g.x], p.ea[g.y], p.eb[g.a]), p.b1[g.b], p.b2[g.c]),
                 p.muB(p.b1[g.a], p.LA(p.ea[g.x], p.ea[g.y], p.eb[g.b]), p.b2[g.c]),
                 p.RA(p.a2[g.x], p.RB(p.eb[g.b], p.eb[g.c], p.ea[g.y]), p.b1[g.a])};
       }},
      {"A_at_34", {true, true, false, false, true},
       "L_A(L_B(a,b)x,α1y)β2c ~ μB(β1a,R_A(x,y)b,β2c) ~ μB(β1a,β2b,L_A(x,y)c)",
       [](const Pair& p, const Args& g) -> Terms {
         return {p.LA(p.LB(p.eb[g.a], p.eb[g.b], p.ea[g.x]), p.a1[g.y], p.b2[g.c]),
                 p.muB(p.b1[g.a], p.RA(p.ea[g.x], p.ea[g.y], p.eb[g.b]), p.b2[g.c]),
                 p.muB(p.b1[g.a], p.b2[g.b], p.LA(p.ea[g.x], p.ea[g.y], p.eb[g.c]))};
       }},
      {"A_at_24", {true, false, true, false, true},
       "L_A(M_B(a,b)x,α1y)β2c ~ μB(β1a,M_A(x,y)b,β2c) ~ R_A(α2x,M_B(b,c)y)β1a",
       [](const Pair& p, const Args& g) -> Terms {
         return {p.LA(p.MB(p.eb[g.a], p.eb[g.b], p.ea[g.x]), p.a1[g.y], p.b2[g.c]),
                 p.muB(p.b1[g.a], p.MA(p.ea[g.x], p.ea[g.y], p.eb[g.b]), p.b2[g.c]),
                 p.RA(p.a2[g.x], p.MB(p.eb[g.b], p.eb[g.c], p.ea[g.y]), p.b1[g.a])};
       }},
      {"A_at_14", {false, true, true, false, true},
       "L_A(R_B(a,b)x,α1y)β2c ~ L_A(α1x,L_B(a,b)y)β2c ~ M_A(α1x,M_B(b,c)y)β2a",
       [](const Pair& p, const Args& g) -> Terms {
         return {p.LA(p.RB(p.eb[g.a], p.eb[g.b], p.ea[g.x]), p.a1[g.y], p.b2[g.c]),
                 p.LA(p.a1[g.x], p.LB(p.eb[g.a], p.eb[g.b], p.ea[g.y]), p.b2[g.c]),
                 p.MA(p.a1[g.x], p.MB(p.eb[g.b], p.eb[g.c], p.ea[g.y]), p.b2[g.a])};
       }},
      {"A_at_35", {true, true, false, true, false},
       "M_A(L_B(a,b)x,α2y)β1c ~ R_A(M_B(b,c)x,α2y)β1a ~ μB(β1a,β2b,M_A(x,y)c)",
       [](const Pair& p, const Args& g) -> Terms {
         return {p.MA(p.LB(p.eb[g.a], p.eb[g.b], p.ea[g.x]), p.a2[g.y], p.b1[g.c]),
                 p.RA(p.MB(p.eb[g.b], p.eb[g.c], p.ea[g.x]), p.a2[g.y], p.b1[g.a]),
                 p.muB(p.b1[g.a], p.b2[g.b], p.MA(p.ea[g.x], p.ea[g.y], p.eb[g.c]))};
       }},
      {"A_at_25", {true, false, true, true, false},
       "M_A(M_B(a,b)x,α2y)β1c ~ R_A(R_B(b,c)x,α2y)β1a ~ R_A(α2x,L_B(b,c)y)β1a",
       [](const Pair& p, const Args& g) -> Terms {
         return {p.MA(p.MB(p.eb[g.a], p.eb[g.b], p.ea[g.x]), p.a2[g.y], p.b1[g.c]),
                 p.RA(p.RB(p.eb[g.b], p.eb[g.c], p.ea[g.x]), p.a2[g.y], p.b1[g.a]),
                 p.RA(p.a2[g.x], p.LB(p.eb[g.b], p.eb[g.c], p.ea[g.y]), p.b1[g.a])};
       }},
      {"A_at_15", {false, true, true, true, false},
       "M_A(R_B(a,b)x,α2y)β1c ~ M_A(α1x,α2y)μB(a,b,c) ~ M_A(α1x,L_B(b,c)y)β2a",
       [](const Pair& p, const Args& g) -> Terms {
         return {p.MA(p.RB(p.eb[g.a], p.eb[g.b], p.ea[g.x]), p.a2[g.y], p.b1[g.c]),
                 p.MA(p.a1[g.x], p.a2[g.y], p.muB(p.eb[g.a], p.eb[g.b], p.eb[g.c])),
                 p.MA(p.a1[g.x], p.LB(p.eb[g.b], p.eb[g.c], p.ea[g.y]), p.b2[g.a])};
       }},
      {"A_at_45", {true, true, true, false, false},
       "R_A(α1x,α2y)μB(a,b,c) ~ R_A(L_B(b,c)x,α2y)β1a ~ μB(β1a,β2b,R_A(x,y)c)",
       [](const Pair& p, const Args& g) -> Terms {
         return {p.RA(p.a1[g.x], p.a2[g.y], p.muB(p.eb[g.a], p.eb[g.b], p.eb[g.c])),
                 p.RA(p.LB(p.eb[g.b], p.eb[g.c], p.ea[g.x]), p.a2[g.y], p.b1[g.a]),
                 p.muB(p.b1[g.a], p.b2[g.b], p.RA(p.ea[g.x], p.ea[g.y], p.eb[g.c]))};
       }},
  };
  return table;
}

std::string statement_for(const Condition& c, Mode mode) {
  std::string s = c.statement;
  const std::string sep = mode == Mode::Total ? " = " : " + ";
  std::string out;
  for (std::size_t i = 0; i < s.size();) {
    if (s.compare(i, 3, " ~ ") == 0) {
      out += sep;
      i += 3;
    } else {
      out += s[i++];
    }
  }
  return mode == Mode::Total ? out : out + " = 0";
}

LawReport condition_law(const Pair& p, const Condition& c, Mode mode) {
  std::vector<std::size_t> extents;
  for (bool b : c.in_b) extents.push_back(b ? p.mp.B.dim() : p.mp.A.dim());
  const kernels::IndexSpace space(extents);
  LawReport report;
  report.law = std::string("matched_pair.") + c.name;
  report.statement = statement_for(c, mode);
  report.violations = kernels::sweep(space.size(), [&](std::size_t flat, std::vector<Violation>& out) {
    std::size_t pos[5];
    space.decode(flat, pos);
    std::size_t from_a[3] = {0, 0, 0};
    std::size_t from_b[3] = {0, 0, 0};
    std::size_t na = 0, nb = 0;
    for (std::size_t s = 0; s < 5; ++s) {
      if (c.in_b[s]) {
        from_b[nb++] = pos[s];
      } else {
        from_a[na++] = pos[s];
      }
    }
    const Args g{from_a[0], from_a[1], from_a[2], from_b[0], from_b[1], from_b[2]};
    const Terms t = c.terms(p, g);
    std::vector<std::size_t> key(pos, pos + 5);
    for (auto& k : key) ++k;
    if (mode == Mode::Partial) {
      Vector sum = t[0] + t[1] + t[2];
      if (!sum.is_zero()) out.push_back(Violation{key, "left+middle+right=0", sum.entries()});
      return;
    }
    Vector d1 = t[0] - t[1];
    if (!d1.is_zero()) out.push_back(Violation{key, "left=middle", d1.entries()});
    Vector d2 = t[1] - t[2];
    if (!d2.is_zero()) out.push_back(Violation{key, "middle=right", d2.entries()});
  });
  return report;
}

}  // namespace

LawReport check_matched_pair(const MatchedPairData& mp, Mode mode, bool full) {
  if (mode == Mode::Weak) throw UnsupportedMode("matched pairs are defined for total and partial modes only");
  mp.validate();
  const BihomModule on_b = mp.module_b();
  const BihomModule on_a = mp.module_a();

  LawReport alg_a = check_hom_associativity(mp.A, mode);
  alg_a = conjunction("matched_pair.algebra_A", "A is hom-associative in this mode", {alg_a});
  LawReport alg_b = check_hom_associativity(mp.B, mode);
  alg_b = conjunction("matched_pair.algebra_B", "B is hom-associative in this mode", {alg_b});
  std::vector<LawReport> prereq{std::move(alg_a), std::move(alg_b),
                                check_trimodule_slots(mp.A, on_b, mp.a_on_b, mode, "matched_pair.A_on_B"),
                                check_trimodule_slots(mp.B, on_a, mp.b_on_a, mode, "matched_pair.B_on_A")};
  std::vector<LawReport> parts;
  parts.push_back(conjunction("matched_pair.prerequisites", "both algebras and both quasi-trimodule structures",
                              std::move(prereq)));
  const Pair p(mp);
  for (const auto& c : conditions()) parts.push_back(condition_law(p, c, mode));
  if (full) {
    parts.push_back(check_trimodule_extras(mp.A, on_b, mp.a_on_b, "matched_pair.A_on_B"));
    parts.push_back(check_trimodule_extras(mp.B, on_a, mp.b_on_a, "matched_pair.B_on_A"));
  }
  return conjunction("matched_pair", std::string(full ? "matched pair" : "matched pair conditions") + " (" +
                                         std::string(mode_name(mode)) + ")",
                     std::move(parts));
}

TernaryAlgebra bicrossed_product(const MatchedPairData& mp) {
  mp.validate();
  const std::size_t n = mp.A.dim();
  const std::size_t m = mp.B.dim();
  Tensor4 tau = Tensor4::cube(n + m);
  for (std::size_t o = 0; o < n; ++o) {
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t t = 0; t < n; ++t) tau(o, r, s, t) = mp.A.mu()(o, r, s, t);
      }
    }
  }
  for (std::size_t o = 0; o < m; ++o) {
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t s = 0; s < m; ++s) {
        for (std::size_t t = 0; t < m; ++t) tau(n + o, n + r, n + s, n + t) = mp.B.mu()(o, r, s, t);
      }
    }
  }
  // B acting on A: outputs in the A block.
  for (std::size_t o = 0; o < n; ++o) {
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        for (std::size_t x = 0; x < n; ++x) {
          tau(o, n + a, n + b, x) = mp.b_on_a.L(o, a, b, x);
          tau(o, n + a, x, n + b) = mp.b_on_a.M(o, a, x, b);
          tau(o, x, n + a, n + b) = mp.b_on_a.R(o, x, a, b);
        }
      }
    }
  }
  // A acting on B: outputs in the B block.
  for (std::size_t o = 0; o < m; ++o) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t a = 0; a < m; ++a) {
          tau(n + o, x, y, n + a) = mp.a_on_b.L(o, x, y, a);
          tau(n + o, x, n + a, y) = mp.a_on_b.M(o, x, a, y);
          tau(n + o, n + a, x, y) = mp.a_on_b.R(o, a, x, y);
        }
      }
    }
  }
  return TernaryAlgebra(std::move(tau), block_diagonal(mp.A.alpha1(), mp.B.alpha1()),
                        block_diagonal(mp.A.alpha2(), mp.B.alpha2()));
}

}  // namespace ternalg
