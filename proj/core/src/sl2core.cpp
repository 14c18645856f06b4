#include "padicsl2/sl2core.hpp"

#include <array>

#include "padicsl2/cartan.hpp"

namespace padicsl2 {

Mat2<PadicApprox> to_padic(const Mat2<Rational>& m, const PadicCtx& ctx) {
  return Mat2<PadicApprox>{to_padic(m.a11, ctx), to_padic(m.a12, ctx), to_padic(m.a21, ctx),
                           to_padic(m.a22, ctx)};
}

SL2Mat<PadicApprox> to_padic(const SL2Mat<Rational>& m, const PadicCtx& ctx) {
  return SL2Mat<PadicApprox>(to_padic(m.mat(), ctx));
}

bool agree(const Mat2<PadicApprox>& a, const Mat2<PadicApprox>& b) {
  return agree(a.a11, b.a11) && agree(a.a12, b.a12) && agree(a.a21, b.a21) &&
         agree(a.a22, b.a22);
}

bool agree(const Mat2<PadicApprox>& a, const Mat2<Rational>& b) {
  return agree(a, to_padic(b, a.a11.ctx()));
}

std::optional<Valuation> agreement_window(const Mat2<PadicApprox>& a, const Mat2<Rational>& b) {
  const Mat2<PadicApprox> diff = a - to_padic(b, a.a11.ctx());
  Valuation floor = Valuation::infinity();
  for (const PadicApprox* e : {&diff.a11, &diff.a12, &diff.a21, &diff.a22}) {
    if (e->known_nonzero()) return std::nullopt;
    floor = std::min(floor, e->window_end());
  }
  return floor;
}

Mat2<Rational> identity_mat() { return Mat2<Rational>{1, 0, 0, 1}; }

SL2Mat<Rational> identity_sl2() { return SL2Mat<Rational>(identity_mat()); }

SL2Mat<Rational> omega() {
  return SL2Mat<Rational>(Mat2<Rational>{0, 1, -1, 0});
}

SubgroupTag SubgroupTag::qdelta(const SquareClass& cls) {
  if (cls.is_identity()) {
    throw UnsupportedTag("Qdelta requires a nonidentity square class");
  }
  return {SubgroupKind::Qdelta, cls};
}

std::string SubgroupTag::label() const {
  switch (kind) {
    case SubgroupKind::Q1: return "Q1";
    case SubgroupKind::Qdelta: return "Q[" + delta->label() + "]";
    case SubgroupKind::U: return "U";
    case SubgroupKind::Uplus: return "U+";
    case SubgroupKind::B: return "B";
  }
  throw Error("unreachable subgroup kind");
}

bool subgroup_membership(const SL2Mat<Rational>& g, const SubgroupTag& tag) {
  const Mat2<Rational>& m = g.mat();
  switch (tag.kind) {
    case SubgroupKind::Q1:
      return m.a12 == 0 && m.a21 == 0;
    case SubgroupKind::Qdelta:
      // [[a,b],[b*delta,a]]; det = 1 is the SL2Mat invariant, so
      // a^2 - b^2*delta = 1 comes for free once the shape matches.
      return m.a11 == m.a22 && m.a21 == m.a12 * tag.delta->rep();
    case SubgroupKind::Uplus:
      return m.a11 == 1 && m.a22 == 1 && m.a21 == 0;
    case SubgroupKind::U:
      return m.a21 == 0 && ((m.a11 == 1 && m.a22 == 1) || (m.a11 == -1 && m.a22 == -1));
    case SubgroupKind::B:
      return m.a21 == 0;
  }
  throw Error("unreachable subgroup kind");
}

namespace {

// Scale a rational 4-vector to primitive integer entries, first nonzero
// entry positive.
std::array<Rational, 4> primitive_scale(std::array<Rational, 4> v) {
  Integer lcm(1);
  for (const auto& x : v) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
    lcm = l;
  }
  Integer gcd(0);
  for (auto& x : v) {
    x *= Rational(lcm);
    Integer g;
    mpz_gcd(g.get_mpz_t(), gcd.get_mpz_t(), x.get_num().get_mpz_t());
    gcd = g;
  }
  if (gcd == 0) return v;
  for (auto& x : v) x /= Rational(gcd);
  for (const auto& x : v) {
    if (x != 0) {
      if (x < 0) {
        for (auto& y : v) y = -y;
      }
      break;
    }
  }
  return v;
}

}  // namespace

CommutantBasis commutant_basis(const SL2Mat<Rational>& a) {
  const Rational& p11 = a.mat().a11;
  const Rational& p12 = a.mat().a12;
  const Rational& p21 = a.mat().a21;
  const Rational& p22 = a.mat().a22;

  // gA - Ag = 0 as a 4x4 homogeneous system in (g11, g12, g21, g22).
  std::array<std::array<Rational, 4>, 4> rows = {{
      {Rational(0), p21, -p12, Rational(0)},
      {p12, p22 - p11, Rational(0), -p12},
      {-p21, Rational(0), p11 - p22, p21},
      {Rational(0), -p21, p12, Rational(0)},
  }};

  // Exact Gauss-Jordan to reduced row echelon form.
  std::array<int, 4> pivot_col = {-1, -1, -1, -1};
  unsigned rank = 0;
  for (int col = 0; col < 4 && rank < 4; ++col) {
    unsigned pivot = rank;
    while (pivot < 4 && rows[pivot][col] == 0) ++pivot;
    if (pivot == 4) continue;
    std::swap(rows[rank], rows[pivot]);
    const Rational inv = Rational(1) / rows[rank][col];
    for (auto& x : rows[rank]) x *= inv;
    for (unsigned r = 0; r < 4; ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Rational f = rows[r][col];
      for (int c = 0; c < 4; ++c) rows[r][c] -= f * rows[rank][c];
    }
    pivot_col[rank] = col;
    ++rank;
  }

  CommutantBasis out;
  out.dim = 4 - rank;
  for (int free = 0; free < 4; ++free) {
    bool is_pivot = false;
    for (unsigned r = 0; r < rank; ++r) is_pivot |= (pivot_col[r] == free);
    if (is_pivot) continue;
    std::array<Rational, 4> v = {Rational(0), Rational(0), Rational(0), Rational(0)};
    v[free] = 1;
    for (unsigned r = 0; r < rank; ++r) v[pivot_col[r]] = -rows[r][free];
    v = primitive_scale(v);
    out.basis.push_back(Mat2<Rational>{v[0], v[1], v[2], v[3]});
  }
  return out;
}

CentralizerInfo centralizer_tag(const SL2Mat<Rational>& a, const Prime& p, unsigned precision) {
  if (a == identity_sl2() || a == -identity_sl2()) {
    return CentralizerInfo{true, std::nullopt, false, std::nullopt};
  }

  // Read the centralizer type off the commutant pencil: with J a non-scalar
  // basis element, the traceless part T satisfies T^2 = lambda*I, and lambda
  // falls in the square class of the discriminant.
  const CommutantBasis cb = commutant_basis(a);
  if (cb.dim != 2) throw Error("noncentral matrix with commutant dimension != 2");
  const Mat2<Rational>* j = nullptr;
  for (const auto& b : cb.basis) {
    if (b.a12 != 0 || b.a21 != 0 || b.a11 != b.a22) {
      j = &b;
      break;
    }
  }
  if (j == nullptr) throw Error("commutant basis contains no non-scalar element");
  const Mat2<Rational> t_part = Rational(2) * (*j) - j->trace() * identity_mat();
  const Rational lambda = -t_part.det();  // T^2 = lambda * I

  const PadicCtx ctx(p, precision);
  if (lambda == 0) {
    const SubgroupTag tag = SubgroupTag::u();
    const bool standard = subgroup_membership(a, tag);
    std::optional<Conjugator> witness;
    if (!standard) witness = unipotent_form(a, p);
    return CentralizerInfo{false, tag, standard, std::move(witness)};
  }
  if (is_square(lambda, p)) {
    const SubgroupTag tag = SubgroupTag::q1();
    const bool standard = subgroup_membership(a, tag);
    std::optional<Conjugator> witness;
    if (!standard) witness = diagonalize(a, ctx);
    return CentralizerInfo{false, tag, standard, std::move(witness)};
  }
  const SubgroupTag tag = SubgroupTag::qdelta(square_class(lambda, p));
  const bool standard = subgroup_membership(a, tag);
  std::optional<Conjugator> witness;
  if (!standard) witness = qdelta_form(a, ctx);
  return CentralizerInfo{false, tag, standard, std::move(witness)};
}

bool normalizer_checks(const SL2Mat<Rational>& g, const SubgroupTag& tag) {
  const Mat2<Rational>& m = g.mat();
  switch (tag.kind) {
    case SubgroupKind::Q1:
      // The normalizer of the diagonal torus is diagonal plus antidiagonal.
      return (m.a12 == 0 && m.a21 == 0) || (m.a11 == 0 && m.a22 == 0);
    case SubgroupKind::U:
    case SubgroupKind::Uplus:
      return m.a21 == 0;
    case SubgroupKind::Qdelta:
      return subgroup_membership(g, tag);
    case SubgroupKind::B:
      throw UnsupportedTag("normalizer of B is out of scope");
  }
  throw Error("unreachable subgroup kind");
}

SL2Mat<Rational> iterated_commutator(const SL2Mat<Rational>& w, const SL2Mat<Rational>& t,
                                     unsigned depth) {
  SL2Mat<Rational> acc = t;
  for (unsigned i = 0; i < depth; ++i) acc = commutator(w, acc);
  return acc;
}

}  // namespace padicsl2
