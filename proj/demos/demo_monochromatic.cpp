// Walkthrough: extract monochromatic sets for two pair colorings and one
// length-varying front, printing the reports.

#include <iostream>

#include "ramsel/ramsel.hpp"

using namespace ramsel;

int main() {
  SelectorReport evenSum =
      ramsey_select(2, even_sum_family(), NatStream::naturals(), 12);
  std::cout << "even-sum pairs on 0..11 -> " << evenSum.output.str() << " "
            << to_string(evenSum.verdict) << "\n";

  OrderedEnumeration E = stern_brocot_unit();
  SelectorReport mono = ramsey_select(2, sierpinski_family(E),
                                      NatStream::naturals(), 10);
  std::cout << "order-vs-index pairs on 0..9 -> " << mono.output.str() << " "
            << to_string(mono.verdict) << " (points";
  for (nat i : mono.output) std::cout << " " << E.point(i).get_str();
  std::cout << ")\n";

  ColorFamily schreier{
      schreier_front(2, NatStream::naturals(), 12),
      [](const FinSet& s) { return s.min() % 2 == 0; }};
  SelectorReport nw = nw_select(schreier, NatStream::naturals(), 12);
  std::cout << "min-parity on the offset-2 front -> " << nw.output.str()
            << " " << to_string(nw.verdict) << "\n";
  return 0;
}
