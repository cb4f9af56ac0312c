// Integration on Q[x]/(x^5) is a Rota-Baxter operator of weight 0. The
// induced dendriform algebra embeds into its double, which is associative.

#include <iostream>

#include "dendri/dendri.hpp"

using namespace dendri;

int main() {
  const int d = 5;
  const FDAlgebra poly = FDAlgebra::from_rule(d, omega(1), [d](const OpSymbol&, int a, int b) {
    Vec v(d, 0);
    if (a + b < d) v[a + b] = 1;
    return v;
  });
  std::vector<Vec> images;
  for (int k = 0; k < d; ++k) {
    Vec v(d, 0);
    if (k + 1 < d) v[k + 1] = Rational(1, k + 1);
    images.push_back(v);
  }
  const LinearOperator integral = LinearOperator::from_images(images);

  std::cout << "Rota-Baxter (weight 0): " << (check_rota_baxter(poly, integral, 0).passed() ? "yes" : "no") << "\n";

  const FDAlgebra dend = derived_dendriform(poly, integral, 0, false);
  const VarietyPresentation as = builtin("associative");
  const GeneratedIdentitySet axioms = generate_dendriform_identities(as, Mode::Di);
  for (const auto& id : axioms.named()) std::cout << "  " << render(id.poly) << "\n";
  std::cout << "dendriform axioms hold: " << (check_identities(dend, axioms).passed() ? "yes" : "no") << "\n";

  const DoubledAlgebra dd = double_dendriform(dend, Mode::Di, 0);
  std::cout << "double is associative: " << (check_identities(dd.algebra, as.identities).passed() ? "yes" : "no")
            << "\n";
  std::cout << "a -> a' is an embedding: " << (verify_embedding(dd, dend).passed() ? "yes" : "no") << "\n";
}
