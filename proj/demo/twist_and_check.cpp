// Twists sl(2) along a diagonal automorphism, checks the S1 identity on the
// result, and classifies the octonion Malcev algebra.

#include <iostream>

#include <supermalcev/io.hpp>

using namespace supermalcev;

int main() {
  const auto sl2 = catalog_algebra("sl2").algebra;
  const auto beta = EvenMap::diagonal({Rational(1), Rational(2), Rational(1, 2)});
  const auto twisted = yau_twist(sl2, beta, "sl2~diag");

  std::cout << "h*e in the twisted algebra: [";
  const auto he = twisted.multiply(twisted.basis(0), twisted.basis(1));
  for (std::size_t k = 0; k < he.size(); ++k) std::cout << (k ? ", " : "") << format_rational(he[k]);
  std::cout << "]\n";

  const auto s1 = check_identity(twisted, identity(IdentityId::s1));
  std::cout << "S1 on " << twisted.name() << ": " << status_name(s1.status) << " (" << s1.tuples_checked
            << " tuples)\n";

  const auto m7 = catalog_algebra("m7").algebra;
  std::cout << class_json(m7, classify(m7)).dump(2) << "\n";

  const auto jacobi = check_identity(m7, identity(IdentityId::hom_lie), {.max_violations = 1});
  const auto& v = jacobi.violations.front();
  std::cout << "first Jacobi violation in m7 at (" << v.tuple[0] << ", " << v.tuple[1] << ", " << v.tuple[2]
            << "), " << jacobi.total_violations << " in total\n";
}
