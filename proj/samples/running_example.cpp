// Builds the three distinguished tableaux of shape (4,4,1,1) and weight
// (1,3,2,2,2) and prints them with the construction tables.

#include <iostream>

#include "tableaux/tableaux.hpp"

int main() {
    using namespace tableaux;
    const Partition mu{4, 4, 1, 1};
    const Composition a{1, 3, 2, 2, 2};

    const auto greatest = greatest_tableau_traced(mu, a);
    std::cout << render_trace(greatest.trace, TraceStyle::Strip, 'T') << '\n'
              << format_tableau_text(greatest.tableau) << '\n';

    const auto fill = removable_fill_tableau_traced(mu, a);
    std::cout << render_trace(fill.trace, TraceStyle::Strip, 'U') << '\n'
              << format_tableau_text(fill.tableau) << '\n';

    const auto least = least_tableau_traced(mu, a);
    std::cout << render_trace(least.trace, TraceStyle::Single, 'S') << '\n'
              << format_tableau_text(least.tableau) << '\n';

    std::cout << "|STab(mu,a)| = " << kostka(mu, a) << '\n'
              << "greatest vs least: " << compare(greatest.tableau, least.tableau) << '\n';
}
