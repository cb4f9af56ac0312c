// Prints the di- and tri-successor identities of a variety.
//   successor_tour [variety]

#include <iostream>

#include "dendri/dendri.hpp"

int main(int argc, char** argv) {
  using namespace dendri;
  const VarietyPresentation v = builtin(argc > 1 ? argv[1] : "associative");
  for (Mode mode : {Mode::Di, Mode::Tri}) {
    std::cout << "== " << mode_name(mode) << "-" << v.name << "\n";
    for (const auto& id : generate_variety_identities(v, mode).named())
      std::cout << id.id << "\t" << render(id.poly) << "\n";
    std::cout << "== " << mode_name(mode) << "-" << v.name << "-dendriform\n";
    for (const auto& id : generate_dendriform_identities(v, mode).named())
      std::cout << id.id << "\t" << render(id.poly) << "\n";
  }
}
