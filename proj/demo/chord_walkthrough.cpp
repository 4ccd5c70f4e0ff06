// Walks through the chord construction on x^3 + y^3 = 3xy over Q and over F_5.

#include <folium/folium.hpp>

#include <iostream>

using namespace folium;

int main() {
  const Field q = Field::rationals();
  const Folium curve(q, 1);
  const auto p = pbar(curve, Element(q, 2));
  const auto r = pbar(curve, Element(q, 3));

  std::cout << "P = " << p.to_string() << ", Q = " << r.to_string() << "\n";
  std::cout << "chord: " << line_through(p, r).equation() << "\n";
  const auto third = third_intersection(curve, p, r);
  std::cout << "third point: " << third.to_string() << " (t = " << pbar_inv(curve, third).to_string() << ")\n";
  std::cout << "P.Q = perp(third) = " << geometric_mul(curve, p, r).to_string() << "\n";
  std::cout << "P*Q = " << star_mul(curve, p, r).to_string() << "\n";
  std::cout << "branch of P: " << branch_name(classify_branch(curve, p)) << "\n\n";

  const Folium small(Field::prime(5), 1);
  std::cout << "points over F_5:";
  for (const auto& pt : enumerate_points(small)) std::cout << " " << pt.to_string();
  std::cout << "\n";
}
