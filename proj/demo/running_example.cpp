// Walk through the running example p = 5, r = 2, J = {0}, b = (2, 3):
// derived exponents, the four rank-1 sides, the over-objects, and the
// verification of the whole diagram for every lambda_0 in E.

#include <iostream>
#include <string>
#include <vector>

#include "breuil/breuil.hpp"

using namespace breuil;

namespace {

template <class T>
std::string seq(const std::vector<T>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + ")";
}

void show(const char* name, const BrRank1& X) {
  std::cout << "  " << name << ": kappa=" << X.kappa << " m=" << seq(X.m) << " mu=" << seq(X.mu) << "\n";
}

}  // namespace

int main() {
  Params P = Params::make(5, 2);
  ChainRing R(P);
  const auto& F = P.field();
  GeeParams G{IndexSet::from_list(2, {0}), {2, 3}, F.one(), F.one(), {F.generator(), F.zero()}};

  DerivedExponents D = derive(P, G);
  std::cout << "p=5 r=2 e=" << P.e() << " J={0} b=(2,3)\n";
  std::cout << "  mu'  = " << seq(D.muP) << "   mu''  = " << seq(D.muPP) << "\n";
  std::cout << "  n    = " << seq(D.nn) << "\n";
  std::cout << "  s    = " << seq(D.ss) << "   r     = " << seq(D.rr) << "\n";
  std::cout << "  c'   = " << seq(D.cP) << "   c''   = " << seq(D.cPP) << "\n";
  std::cout << "  g'   = " << seq(D.gP) << "   g''   = " << seq(D.gPP) << "\n";
  std::cout << "  mu'_fil = " << seq(D.filP) << "  nu'_fil = " << seq(D.nuP) << "\n";
  std::cout << "  mu''_fil = " << seq(D.filPP) << "  nu''_fil = " << seq(D.nuPP) << "\n";
  std::cout << "  tight case: c'_1 + s_0 = " << D.cP[1] + D.ss[0] << " = e(p-2) = " << P.e() * (P.p() - 2) << "\n";

  DisplayComparison dc = compare_displays(P, G, D);
  std::cout << "closed-form displays: mu'_fil " << seq(dc.filP_display) << (dc.filP_agrees ? " agrees" : " differs")
            << ", gamma' " << seq(dc.gP_display) << (dc.gP_agrees ? " agrees" : " differs") << "\n";

  Sides S = build_sides(P, G, D);
  std::cout << "rank-1 sides at level p-2:\n";
  show("M' ", S.Mp);
  show("M''", S.Mpp);
  show("N' ", S.Np);
  show("N''", S.Npp);
  std::cout << "  characters: M' -> omega_0^" << tst_char(P, S.Mp).tame.t << ", M'' -> omega_0^"
            << tst_char(P, S.Mpp).tame.t << "\n";

  DiagramMaps maps = diagram_maps(P, G, D);
  std::cout << "f_M exponents: e_0 " << maps.fM[0][0] << ", f_0 " << maps.fM[0][1] << ", e_1 " << maps.fM[1][0]
            << ", f_1 " << maps.fM[1][1] << "\n";
  std::cout << "f_N exponents: E_0 " << maps.fN[0][0] << ", F_0 " << maps.fN[0][1] << ", E_1 " << maps.fN[1][0]
            << ", F_1 " << maps.fN[1][1] << "\n";

  int passed = 0, total = 0;
  for (std::uint32_t k = 0; k <= F.unit_order(); ++k) {
    G.lambda[0] = k == F.unit_order() ? F.zero() : FF{k};
    Verify331Result res = verify_331(R, G);
    ++total;
    if (res.report.all_pass()) ++passed;
  }
  std::cout << "diagram verified for " << passed << " of " << total << " values of lambda_0\n";

  G.lambda[0] = F.generator();
  Verify331Result bad = verify_331(R, G, Corruption{true, false});
  const Check* c = bad.report.first_failure();
  std::cout << "with c'_0 + 1: " << (c ? "rejected at " + c->name : std::string("accepted")) << "\n";
  return passed == total ? 0 : 1;
}
