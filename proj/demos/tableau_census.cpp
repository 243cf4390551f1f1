// Census of normal shapes up to 7 cells: standard tableaux counted three
// ways (hook-length formula, direct filling search, words satisfying the
// all-ones demands) and balanced tableaux counted as words satisfying the
// column-depth demands — the four columns always agree.
#include <iomanip>
#include <iostream>
#include <sstream>

#include "halltab/halltab.hpp"

using namespace halltab;

namespace {

std::string shape_name(const std::vector<int>& lambda) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < lambda.size(); ++i)
        out << (i ? "," : "") << lambda[i];
    out << ")";
    return out.str();
}

} // namespace

int main() {
    std::cout << std::left << std::setw(14) << "shape" << std::right << std::setw(10)
              << "formula" << std::setw(10) << "fillings" << std::setw(10) << "words"
              << std::setw(10) << "balanced" << "\n";

    gen::for_each_partition(7, [&](const std::vector<int>& lambda) {
        const skew_shape shape(lambda);
        const auto hf = hook_family(shape);
        const int n = shape.cell_count();

        const bigint by_formula = hook_length_formula(shape);
        const bigint by_filling = count_standard(shape);
        const bigint by_words = count_satisfying(
            hf.family, hf.rep, configuration(std::vector<int>(static_cast<std::size_t>(n), 1)),
            n);
        const bigint balanced =
            count_satisfying(hf.family, hf.rep, balanced_configuration(shape), n);

        std::cout << std::left << std::setw(14) << shape_name(lambda) << std::right
                  << std::setw(10) << by_formula.str() << std::setw(10) << by_filling.str()
                  << std::setw(10) << by_words.str() << std::setw(10) << balanced.str();
        if (by_formula != by_filling || by_formula != by_words || by_formula != balanced)
            std::cout << "  <-- MISMATCH";
        std::cout << "\n";
    });
    return 0;
}
