// Walks through the lattice for a small dataset: vertices, the determinant
// measures, and every rotation of {1, x, y, z}.
//
//   ./rotation_walkthrough [path/to/data.csv]   (defaults to three built-in rows)

#include <iostream>

#include "latreg/latreg.hpp"

int main(int argc, char** argv) {
  using namespace latreg;
  try {
    const Dataset data = argc > 1 ? read_csv_file(argv[1], {{"x", "y", "z"}, {}})
                                  : Dataset{{"x", {1, 2, 3}}, {"y", {2, 3, 5}}, {"z", {1, 2, 2}}};

    const Direction one = Direction::unity();
    const Direction x = Direction::column("x");
    const Direction y = Direction::column("y");
    const Direction z = Direction::column("z");
    const Lattice lat = build_lattice(data, {one, x, y, z});

    std::cout << "n = " << lat.vertex(one, one) << ", sum x = " << lat.vertex(one, x)
              << ", sum xy = " << lat.vertex(x, y) << "\n";
    std::cout << "variance of x (n^2 scaled): " << determinant(lat, kind::Variance{x}) << "\n";
    std::cout << "base variance of x,y:       " << determinant(lat, kind::BaseVariance{x, y})
              << "\n";
    std::cout << "Form I |W| for x,y,z:       " << form_determinant(lat, kind::Form1{x, y, z})
              << "\n\n";

    Report report;
    for (const auto& r : fit_all_rotations(data, {one, x, y, z})) report.rotations.push_back(to_row(r));
    std::cout << write_report(report, ReportFormat::text);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
