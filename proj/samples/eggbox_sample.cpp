// Prints the egg-box diagram of every multi-element D-class of (IS_3, *_a)
// for a = [1,2,-], then checks the closed-form D-classes against it.

#include <iostream>

#include "vgreen/vgreen.hpp"

int main() {
  using namespace vgreen;
  const auto a = parse_element<PartialPerm>("1,2,-");
  VariantSemigroup<PartialPerm> v(a);
  const auto g = green_structure_brute(v);

  std::cout << "|S| = " << v.size() << ", " << g.d.size() << " D-classes\n";
  for (index_t d = 0; d < g.d.size(); ++d) {
    if (g.d.members(d).size() == 1) continue;
    const auto box = egg_box(g, d);
    std::cout << "\nD-class of " << format_element(v.element(g.d.representative(d)))
              << ": " << box.rows.size() << " x " << box.columns.size() << '\n';
    for (const auto& row : box.cells) {
      for (const auto& cell : row) {
        std::cout << "  |";
        for (auto x : cell) std::cout << ' ' << format_element(v.element(x));
      }
      std::cout << '\n';
    }
  }

  const auto closed = closed_form_sets(IsClassRules(a), v, Relation::d, Mode::corrected);
  std::cout << "\nclosed-form D mismatches: " << compare_with_brute(closed, g.d).size()
            << '\n';
}
