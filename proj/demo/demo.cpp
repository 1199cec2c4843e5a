// Small walk through the library: one typical polynomial, its stabilized
// version, the threshold where they meet, and the dominant graded character.
#include <iostream>

#include "superkostka/format.hpp"
#include "superkostka/qanalogs.hpp"

using namespace superkostka;

int main() {
  const AlgebraSpec spec = parse_algebra("spo:2n=2,M=5");
  const Weight lambda = parse_weight("2;1,1", spec), mu = parse_weight("0;2,1", spec);
  Engine engine(spec);

  std::cout << spec.name() << "  lambda = " << lambda.to_string() << "  mu = " << mu.to_string() << "\n";
  std::cout << "K      = " << kostka_typical(engine, lambda, mu) << "\n";
  std::cout << "K^stab = " << kostka_stab(engine, lambda, mu) << "\n";

  const int k0 = stabilization_threshold(spec, lambda, mu);
  const Weight l = shift_by_omega(spec, lambda, k0), m = shift_by_omega(spec, mu, k0);
  std::cout << "k0 = " << k0 << ": K_{" << l.to_string() << "," << m.to_string() << "} = " << kostka_typical(engine, l, m)
            << "\n";

  std::cout << "\ndominant part of the graded character of V" << l.to_string() << ":\n";
  for (const auto& [nu, p] : graded_character_typical(engine, l))
    if (is_dominant(spec, nu)) std::cout << "  " << format_weight(nu) << "\t" << p << "\n";
}
