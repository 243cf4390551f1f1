// Walks the 18-cell staircase-minus-corner example end to end: hook family,
// codomain range, and the exact average number of satisfying surjections per
// satisfiable configuration, by formula and by closed form.
#include <iostream>

#include "halltab/halltab.hpp"

using namespace halltab;

namespace {

void print_shape(const skew_shape& shape) {
    for (int i = 1; i <= shape.rows(); ++i) {
        for (int j = 1; j <= shape.lambda_at(i); ++j)
            std::cout << (j <= shape.mu_at(i) ? " ." : " #");
        std::cout << "\n";
    }
}

void print_rational(const exact_rational& r) {
    std::cout << rational_num(r).str();
    if (rational_den(r) != 1) std::cout << "/" << rational_den(r).str();
}

} // namespace

int main() {
    const skew_shape shape({6, 5, 4, 3, 2, 1}, {2, 1});
    std::cout << "Shape (6,5,4,3,2,1) / (2,1), " << shape.cell_count() << " cells:\n";
    print_shape(shape);

    const auto hf = hook_family(shape);
    bigint product = 1;
    std::cout << "\nHook lengths (row-major):";
    for (const cell& c : shape.cells()) {
        const int h = hook_length(shape, c);
        std::cout << " " << h;
        product *= h;
    }
    std::cout << "\nProduct of hook lengths: " << product.str() << "\n";

    const auto corners = outer_corner_cells(shape);
    std::cout << "Cells lying in exactly one hook:";
    for (const cell& c : corners) std::cout << " (" << c.row << "," << c.col << ")";
    std::cout << "\n";

    const auto [lo, hi] = m_range(hf.family);
    const int n = hf.family.ground_size();
    std::cout << "Codomain range for satisfiability: m in [" << lo << ", " << hi << "]\n\n";

    for (int m = lo; m <= hi; ++m) {
        const exact_rational avg = average_formula(hf.family, m);
        std::cout << "m = " << m << ": average satisfying surjections per configuration = ";
        print_rational(avg);
        std::cout << "  (m!*S(" << n << "," << m << ") / " << product.str() << ")";
        if (n - m <= 2) {
            const exact_rational closed = average_closed_form(hf.family, m);
            std::cout << (closed == avg ? "  [closed form agrees]"
                                        : "  [closed form DISAGREES]");
        }
        std::cout << "\n";
    }

    std::cout << "\nEvery skew shape's hook family is shellable: "
              << (is_shellable(hf.family) ? "confirmed" : "VIOLATED")
              << " (unique transversal: its own cells)\n";
    return 0;
}
