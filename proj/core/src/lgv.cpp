#include "asmtss/lgv.hpp"

#include "asmtss/rational.hpp"

namespace asmtss::nilp {

void for_each_lgv_endpoints(int n, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> r(std::max(n, 1), 0);
  std::function<void(int)> rec = [&](int i) {
    if (i >= n) {
      visit(r);
      return;
    }
    for (int v = r[i - 1] + 1; v <= 2 * i + 1; v += 2) {
      r[i] = v;
      rec(i + 1);
    }
  };
  rec(1);
}

GenPoly lgv_genfun_xy(int n) {
  using Poly = MultiPoly<Rational>;
  std::vector<Poly> t(n, Poly(1));
  t[0] = Poly::variable("x");
  if (n > 1) t[1] = Poly::variable("y");
  return GenPoly::from_poly(lgv_genfun(n, t), "x", "y", Convention::kPlain);
}

}  // namespace asmtss::nilp
