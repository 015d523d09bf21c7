#include "ternalg/trimodule.hpp"

#include <array>
#include <utility>
#include <vector>

#include "ternalg/errors.hpp"
#include "ternalg/kernels.hpp"

namespace ternalg {

BihomModule::BihomModule(Matrix beta1, Matrix beta2) : beta1_(std::move(beta1)), beta2_(std::move(beta2)) {
  require_dim(beta2_.dim(), beta1_.dim(), "module twist");
}

BihomModule BihomModule::plain(std::size_t dim_v) {
  return BihomModule(Matrix::identity(dim_v), Matrix::identity(dim_v));
}

TrimoduleActions TrimoduleActions::zero(std::size_t dim_a, std::size_t dim_v) {
  return {Tensor4({dim_v, dim_a, dim_a, dim_v}), Tensor4({dim_v, dim_a, dim_v, dim_a}),
          Tensor4({dim_v, dim_v, dim_a, dim_a})};
}

void TrimoduleActions::validate(std::size_t dim_a, std::size_t dim_v) const {
  const auto want = zero(dim_a, dim_v);
  if (L.extents() != want.L.extents()) throw DimensionMismatch("left action has the wrong shape");
  if (M.extents() != want.M.extents()) throw DimensionMismatch("middle action has the wrong shape");
  if (R.extents() != want.R.extents()) throw DimensionMismatch("right action has the wrong shape");
}

Vector act_left(const TrimoduleActions& act, const Vector& x, const Vector& y, const Vector& v) {
  return act.L.apply(x, y, v);
}

Vector act_middle(const TrimoduleActions& act, const Vector& x, const Vector& y, const Vector& v) {
  return act.M.apply(x, v, y);
}

Vector act_right(const TrimoduleActions& act, const Vector& x, const Vector& y, const Vector& v) {
  return act.R.apply(v, x, y);
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.dim();
  Matrix out(n + b.dim());
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) out(k, j) = a(k, j);
  }
  for (std::size_t k = 0; k < b.dim(); ++k) {
    for (std::size_t j = 0; j < b.dim(); ++j) out(n + k, n + j) = b(k, j);
  }
  return out;
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

// Basis data shared by every trimodule equation.
struct Frame {
  Frame(const TernaryAlgebra& A, const BihomModule& V, const TrimoduleActions& act)
      : A(A), act(act), n(A.dim()), m(V.dim()), a1(columns(A.alpha1())), a2(columns(A.alpha2())),
        b1(columns(V.beta1())), b2(columns(V.beta2())), ea(basis_of(n)), ev(basis_of(m)) {
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t t = 0; t < n; ++t) products.push_back(A.mu().apply(ea[r], ea[s], ea[t]));
      }
    }
  }

  const Vector& mu(std::size_t r, std::size_t s, std::size_t t) const { return products[(r * n + s) * n + t]; }
  Vector L(const Vector& x, const Vector& y, const Vector& v) const { return act_left(act, x, y, v); }
  Vector M(const Vector& x, const Vector& y, const Vector& v) const { return act_middle(act, x, y, v); }
  Vector R(const Vector& x, const Vector& y, const Vector& v) const { return act_right(act, x, y, v); }

  const TernaryAlgebra& A;
  const TrimoduleActions& act;
  std::size_t n, m;
  std::vector<Vector> a1, a2, b1, b2, ea, ev;
  std::vector<Vector> products;
};

struct SlotEquation {
  std::size_t slot;  // 1-based position of the module element
  const char* name;
  const char* total;
  const char* partial;
};

// Listed in the order the conditions are usually stated: module element last, first, fourth, second, third.
constexpr std::array<SlotEquation, 5> kSlotEquations{{
    {5, "v_at_5", "L(α1a,α2b)(L(c,d)v) = L(μ(a,b,c),α1d)β2v = L(α1a,μ(b,c,d))β2v",
     "L(α1a,α2b)(L(c,d)v) + L(μ(a,b,c),α1d)β2v + L(α1a,μ(b,c,d))β2v = 0"},
    {1, "v_at_1", "R(α1c,α2d)(R(a,b)v) = R(α2a,μ(b,c,d))β1v = R(μ(a,b,c),α2d)β1v",
     "R(α1c,α2d)(R(a,b)v) + R(α2a,μ(b,c,d))β1v + R(μ(a,b,c),α2d)β1v = 0"},
    {4, "v_at_4", "M(α1a,α2d)(L(b,c)v) = L(α1a,α2b)(M(c,d)v) = M(μ(a,b,c),α2d)β1v",
     "M(α1a,α2d)(L(b,c)v) + L(α1a,α2b)(M(c,d)v) + M(μ(a,b,c),α2d)β1v = 0"},
    {2, "v_at_2", "M(α1a,α2d)(R(b,c)v) = R(α1c,α2d)(M(a,b)v) = M(α1a,μ(b,c,d))β2v",
     "M(α1a,α2d)(R(b,c)v) + R(α1c,α2d)(M(a,b)v) + M(α1a,μ(b,c,d))β2v = 0"},
    {3, "v_at_3", "R(α1c,α2d)(L(a,b)v) = L(α1a,α2b)(R(c,d)v) = M(α1a,α2d)(M(b,c)v)",
     "R(α1c,α2d)(L(a,b)v) + L(α1a,α2b)(R(c,d)v) + M(α1a,α2d)(M(b,c)v) = 0"},
}};

// The three re-association patterns (left, middle, right) of a five-fold product with the module
// element at `slot`; a, b, c, d are the algebra basis indices in order of appearance.
std::array<Vector, 3> slot_terms(const Frame& f, std::size_t slot, std::size_t a, std::size_t b, std::size_t c,
                                 std::size_t d, std::size_t v) {
  switch (slot) {
    case 5:
      return {f.L(f.mu(a, b, c), f.a1[d], f.b2[v]), f.L(f.a1[a], f.mu(b, c, d), f.b2[v]),
              f.L(f.a1[a], f.a2[b], f.L(f.ea[c], f.ea[d], f.ev[v]))};
    case 1:
      return {f.R(f.a1[c], f.a2[d], f.R(f.ea[a], f.ea[b], f.ev[v])), f.R(f.mu(a, b, c), f.a2[d], f.b1[v]),
              f.R(f.a2[a], f.mu(b, c, d), f.b1[v])};
    case 2:
      return {f.R(f.a1[c], f.a2[d], f.M(f.ea[a], f.ea[b], f.ev[v])),
              f.M(f.a1[a], f.a2[d], f.R(f.ea[b], f.ea[c], f.ev[v])), f.M(f.a1[a], f.mu(b, c, d), f.b2[v])};
    case 3:
      return {f.R(f.a1[c], f.a2[d], f.L(f.ea[a], f.ea[b], f.ev[v])),
              f.M(f.a1[a], f.a2[d], f.M(f.ea[b], f.ea[c], f.ev[v])),
              f.L(f.a1[a], f.a2[b], f.R(f.ea[c], f.ea[d], f.ev[v]))};
    case 4:
      return {f.M(f.mu(a, b, c), f.a2[d], f.b1[v]), f.M(f.a1[a], f.a2[d], f.L(f.ea[b], f.ea[c], f.ev[v])),
              f.L(f.a1[a], f.a2[b], f.M(f.ea[c], f.ea[d], f.ev[v]))};
  }
  throw Error("module slot out of range");
}

void require_mode(Mode mode) {
  if (mode == Mode::Weak) throw UnsupportedMode("trimodule laws are defined for total and partial modes only");
}

std::vector<std::size_t> one_based(const std::size_t* first, std::size_t count) {
  std::vector<std::size_t> out(first, first + count);
  for (auto& i : out) ++i;
  return out;
}

LawReport slot_law(const Frame& f, const SlotEquation& eq, Mode mode, const std::string& prefix) {
  std::vector<std::size_t> extents(5, f.n);
  extents[eq.slot - 1] = f.m;
  const kernels::IndexSpace space(extents);
  LawReport report;
  report.law = prefix + "." + eq.name;
  report.statement = mode == Mode::Total ? eq.total : eq.partial;
  report.violations = kernels::sweep(space.size(), [&](std::size_t flat, std::vector<Violation>& out) {
    std::size_t pos[5];
    space.decode(flat, pos);
    std::size_t alg[4];
    std::size_t k = 0;
    for (std::size_t p = 0; p < 5; ++p) {
      if (p + 1 != eq.slot) alg[k++] = pos[p];
    }
    const auto t = slot_terms(f, eq.slot, alg[0], alg[1], alg[2], alg[3], pos[eq.slot - 1]);
    if (mode == Mode::Partial) {
      Vector sum = t[0] + t[1] + t[2];
      if (!sum.is_zero()) out.push_back(Violation{one_based(pos, 5), "left+middle+right=0", sum.entries()});
      return;
    }
    Vector d1 = t[0] - t[1];
    if (!d1.is_zero()) out.push_back(Violation{one_based(pos, 5), "left=middle", d1.entries()});
    Vector d2 = t[1] - t[2];
    if (!d2.is_zero()) out.push_back(Violation{one_based(pos, 5), "middle=right", d2.entries()});
  });
  return report;
}

LawReport braiding_law(const Frame& f, const std::string& prefix) {
  const std::size_t n = f.n;
  const kernels::IndexSpace space({n, n, n, n, n, n, f.m});
  LawReport report;
  report.law = prefix + ".braiding";
  report.statement = "M(α1a,α2z)(M(α1b,α2y)(M(α1c,α2x)βi v)) = M(μ(α1a,α1b,α1c),μ(α2x,α2y,α2z))βi v, i = 1,2";
  report.violations = kernels::sweep(space.size(), [&](std::size_t flat, std::vector<Violation>& out) {
    std::size_t idx[7];
    space.decode(flat, idx);
    const std::size_t a = idx[0], b = idx[1], c = idx[2], x = idx[3], y = idx[4], z = idx[5], v = idx[6];
    const Vector outer = f.A.mu().apply(f.a1[a], f.a1[b], f.a1[c]);
    const Vector inner = f.A.mu().apply(f.a2[x], f.a2[y], f.a2[z]);
    const std::vector<Vector>* beta[2] = {&f.b1, &f.b2};
    const char* label[2] = {"β1", "β2"};
    for (int i = 0; i < 2; ++i) {
      const Vector& bv = (*beta[i])[v];
      Vector lhs = f.M(f.a1[a], f.a2[z], f.M(f.a1[b], f.a2[y], f.M(f.a1[c], f.a2[x], bv)));
      Vector d = lhs - f.M(outer, inner, bv);
      if (!d.is_zero()) out.push_back(Violation{one_based(idx, 7), label[i], d.entries()});
    }
  });
  return report;
}

enum class Which { Left, Middle, Right };

LawReport intertwine_law(const Frame& f, const Matrix& beta1, const Matrix& beta2, Which which,
                         const std::string& prefix) {
  const kernels::IndexSpace space({f.n, f.n, f.m});
  static const char* names[] = {"intertwine_left", "intertwine_middle", "intertwine_right"};
  static const char* statements[] = {"βi(L(a,b)v) = L(α1a,α2b)βi v, i = 1,2",
                                     "βi(M(a,b)v) = M(α1a,α2b)βi v, i = 1,2",
                                     "βi(R(a,b)v) = R(α1a,α2b)βi v, i = 1,2"};
  const int w = static_cast<int>(which);
  auto act = [&](const Vector& x, const Vector& y, const Vector& v) {
    switch (which) {
      case Which::Left:
        return f.L(x, y, v);
      case Which::Middle:
        return f.M(x, y, v);
      case Which::Right:
        return f.R(x, y, v);
    }
    return Vector(f.m);
  };
  LawReport report;
  report.law = prefix + "." + names[w];
  report.statement = statements[w];
  report.violations = kernels::sweep(space.size(), [&](std::size_t flat, std::vector<Violation>& out) {
    std::size_t idx[3];
    space.decode(flat, idx);
    const Vector plain = act(f.ea[idx[0]], f.ea[idx[1]], f.ev[idx[2]]);
    const Matrix* beta[2] = {&beta1, &beta2};
    const std::vector<Vector>* cols[2] = {&f.b1, &f.b2};
    const char* label[2] = {"β1", "β2"};
    for (int i = 0; i < 2; ++i) {
      Vector d = beta[i]->apply(plain) - act(f.a1[idx[0]], f.a2[idx[1]], (*cols[i])[idx[2]]);
      if (!d.is_zero()) out.push_back(Violation{one_based(idx, 3), label[i], d.entries()});
    }
  });
  return report;
}

void check_shapes(const TernaryAlgebra& A, const BihomModule& V, const TrimoduleActions& act) {
  act.validate(A.dim(), V.dim());
}

}  // namespace

LawReport check_trimodule_slots(const TernaryAlgebra& A, const BihomModule& V, const TrimoduleActions& act,
                                Mode mode, const std::string& prefix) {
  require_mode(mode);
  check_shapes(A, V, act);
  const Frame f(A, V, act);
  std::vector<LawReport> parts;
  for (const auto& eq : kSlotEquations) parts.push_back(slot_law(f, eq, mode, prefix));
  return conjunction(prefix + ".slots", "quasi-trimodule equations", std::move(parts));
}

LawReport check_trimodule_extras(const TernaryAlgebra& A, const BihomModule& V, const TrimoduleActions& act,
                                 const std::string& prefix) {
  check_shapes(A, V, act);
  const Frame f(A, V, act);
  return conjunction(prefix + ".extras", "braiding and twist intertwining",
                     {braiding_law(f, prefix), intertwine_law(f, V.beta1(), V.beta2(), Which::Left, prefix),
                      intertwine_law(f, V.beta1(), V.beta2(), Which::Middle, prefix),
                      intertwine_law(f, V.beta1(), V.beta2(), Which::Right, prefix)});
}

LawReport check_trimodule(const TernaryAlgebra& A, const BihomModule& V, const TrimoduleActions& act, Mode mode,
                          TrimoduleLevel level, const std::string& prefix) {
  require_mode(mode);
  check_shapes(A, V, act);
  LawReport base = check_hom_associativity(A, mode);
  base = conjunction(prefix + ".base_algebra", "the acting algebra is hom-associative in this mode", {base});
  std::vector<LawReport> parts{std::move(base)};
  for (auto& p : check_trimodule_slots(A, V, act, mode, prefix).parts) parts.push_back(std::move(p));
  if (level == TrimoduleLevel::Full) {
    for (auto& p : check_trimodule_extras(A, V, act, prefix).parts) parts.push_back(std::move(p));
  }
  const std::string kind = level == TrimoduleLevel::Full ? "trimodule" : "quasi-trimodule";
  return conjunction(prefix, kind + " (" + std::string(mode_name(mode)) + ")", std::move(parts));
}

RegularModule regular_actions(const TernaryAlgebra& A, RegularKind which) {
  const LawReport mult = check_multiplicative(A);
  if (!mult.passed()) {
    throw NotMultiplicative("regular actions need a multiplicative algebra (" + mult.failing_laws().front() +
                            " fails)");
  }
  RegularModule out{BihomModule(A.alpha1(), A.alpha2()), TrimoduleActions::zero(A.dim(), A.dim())};
  // With V = A every slot layout coincides with the product tensor itself.
  if (which != RegularKind::RightOnly) out.actions.L = A.mu();
  if (which == RegularKind::LMR) out.actions.M = A.mu();
  if (which != RegularKind::LeftOnly) out.actions.R = A.mu();
  return out;
}

TernaryAlgebra semidirect_product(const TernaryAlgebra& A, const BihomModule& V, const TrimoduleActions& act) {
  check_shapes(A, V, act);
  const std::size_t n = A.dim();
  const std::size_t m = V.dim();
  Tensor4 tau = Tensor4::cube(n + m);
  for (std::size_t o = 0; o < n; ++o) {
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t t = 0; t < n; ++t) tau(o, r, s, t) = A.mu()(o, r, s, t);
      }
    }
  }
  for (std::size_t o = 0; o < m; ++o) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t v = 0; v < m; ++v) {
          tau(n + o, x, y, n + v) = act.L(o, x, y, v);
          tau(n + o, x, n + v, y) = act.M(o, x, v, y);
          tau(n + o, n + v, x, y) = act.R(o, v, x, y);
        }
      }
    }
  }
  return TernaryAlgebra(std::move(tau), block_diagonal(A.alpha1(), V.beta1()),
                        block_diagonal(A.alpha2(), V.beta2()));
}

}  // namespace ternalg
