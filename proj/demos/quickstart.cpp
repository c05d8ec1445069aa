// A short tour: build a quiver, look at its root data, analyze a
// deformation parameter, and compare spherical filtration dimensions with
// the Molien oracle.

#include <iostream>

#include "klein/molien.hpp"
#include "klein/params.hpp"
#include "klein/preproj.hpp"
#include "klein/weyl.hpp"

int main() {
  using namespace klein;

  QuiverSpec q = build_extended_dynkin("A2");
  IntVec dl = delta(q);
  std::cout << "A2 delta =";
  for (Int x : dl) std::cout << " " << x;
  std::cout << ", positive Dynkin roots: " << positive_dynkin_roots(q).size()
            << "\n";

  ParamVector lambda = parse_param("1/3,1/3,1/3");
  ParamReport rep = analyze_param(q, lambda);
  std::cout << "lambda = (1/3,1/3,1/3): regular=" << rep.regular
            << " no_findim=" << rep.no_findim << " dominant=" << rep.dominant
            << "\n";

  IntVec xi = {-2, 1, 1};
  TranslationWord w = decompose_translation(q, xi);
  std::cout << "translation by (-2,1,1) decomposes into " << w.walk_steps
            << " reflections (verified=" << w.verified << ")\n";

  auto dims = spherical_dims(double_quiver(q), lambda, 6);
  auto oracle = cumulative(molien_dims(cyclic_group(3), 6));
  std::cout << "spherical dims  :";
  for (Int d : dims) std::cout << " " << d;
  std::cout << "\nMolien cumulative:";
  for (Int d : oracle) std::cout << " " << d;
  std::cout << "\n";
  return 0;
}
