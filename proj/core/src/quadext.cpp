#include "padicsl2/quadext.hpp"

#include <algorithm>
#include <set>

namespace padicsl2 {

QuadCtx::QuadCtx(const Rational& delta, const PadicCtx& pctx)
    : pctx_(pctx), cls_(square_class(delta, pctx.prime())), delta_(cls_.rep()) {
  if (cls_.is_identity()) {
    throw Error("delta = " + to_string(delta) +
                " is a square in Q_p; the quadratic extension would be split");
  }
}

namespace {

// Collect the square classes of a^2 - delta*b^2 over an integer grid and
// close the collected set under class multiplication. Stops as soon as the
// subgroup reaches the expected size.
bool fill_norm_classes(const QuadCtx& q, long grid, std::size_t expected,
                       std::set<SquareClassTag>& found) {
  const Prime& p = q.prime();
  const Rational& delta = q.delta();

  const auto close_up = [&]() {
    bool grew = true;
    while (grew && found.size() < expected) {
      grew = false;
      const std::vector<SquareClassTag> snapshot(found.begin(), found.end());
      for (auto s : snapshot) {
        for (auto t : snapshot) {
          const auto prod = square_class_mul(SquareClass::from_tag(s, p),
                                             SquareClass::from_tag(t, p), p);
          grew |= found.insert(prod.tag()).second;
        }
      }
    }
  };

  for (long a = 0; a <= grid && found.size() < expected; ++a) {
    for (long b = 0; b <= grid && found.size() < expected; ++b) {
      const Rational n = Rational(a) * a - delta * b * b;
      if (n == 0) continue;
      if (found.insert(square_class(n, p).tag()).second) close_up();
    }
  }
  return found.size() >= expected;
}

}  // namespace

std::vector<SquareClass> norm_classes(const QuadCtx& q) {
  const Prime& p = q.prime();
  const std::size_t expected = SquareClass::all(p).size() / 2;

  std::set<SquareClassTag> found;
  for (long grid : {12L, 40L, 200L}) {
    if (fill_norm_classes(q, grid, expected, found)) break;
  }
  if (found.size() < expected) {
    throw PrecisionExhausted("norm witness search for delta = " + to_string(q.delta()) +
                             " did not fill the index-2 subgroup");
  }
  if (found.size() > expected) {
    throw Error("norm classes of delta = " + to_string(q.delta()) +
                " exceeded index 2; internal invariant broken");
  }
  std::vector<SquareClass> out;
  out.reserve(found.size());
  for (auto tag : found) out.push_back(SquareClass::from_tag(tag, p));
  return out;
}

bool is_norm(const Rational& c, const QuadCtx& q) {
  if (c == 0) throw ZeroInput("norm membership of zero");
  const SquareClass cls = square_class(c, q.prime());
  const auto classes = norm_classes(q);
  return std::any_of(classes.begin(), classes.end(),
                     [&](const SquareClass& h) { return h == cls; });
}

}  // namespace padicsl2
