// Walk the ideal lattice of one ring and print the full classification of
// every ideal under the registered expansion functions.
//
//   ./lattice_tour          # tours Z12
//   ./lattice_tour "Z2(+)Z4/(2)"

#include <iomanip>
#include <iostream>

#include "deltaj/deltaj.hpp"

using namespace deltaj;

static std::string mark(bool b) { return b ? "yes" : "-"; }

static std::string witness(const FiniteRing& R, const std::optional<std::pair<int, int>>& w) {
    if (!w) return "";
    return "  [ab in I via a=" + R.name(w->first) + ", b=" + R.name(w->second) + "]";
}

int main(int argc, char** argv) {
    std::string spec = argc > 1 ? argv[1] : "Z12";
    try {
        RingPtr R = make_ring(spec);
        LatticePtr lat = all_ideals(R);
        std::vector<ExpansionFn> deltas = registered_expansions(R, lat);

        std::cout << R->spec << ": order " << R->order << ", "
                  << (lat->quasi_local ? "quasi-local" : "not quasi-local")
                  << ", J = " << lat->at(lat->jacobson_idx).display() << ", "
                  << lat->count() << " ideals, " << deltas.size() << " expansions\n\n";

        for (int i = 0; i < lat->count(); ++i) {
            const Ideal& I = lat->at(i);
            IdealProfile p = ideal_profile(lat, I, deltas);
            std::cout << I.display() << " = " << I.member_list() << "\n";
            if (!p.proper) {
                std::cout << "  the unit ideal; classification does not apply\n\n";
                continue;
            }
            std::cout << "  prime " << mark(p.prime) << "  maximal " << mark(p.maximal)
                      << "  primary " << mark(p.primary) << "  superfluous "
                      << mark(p.superfluous) << "\n";
            std::cout << "  n-ideal " << mark(p.n_ideal) << witness(*R, p.n_ideal_witness)
                      << "  J-ideal " << mark(p.J_ideal) << witness(*R, p.J_ideal_witness)
                      << "  quasi-J " << mark(p.quasi_J_ideal)
                      << witness(*R, p.quasi_J_ideal_witness) << "\n";
            for (const ExpansionProfile& e : p.expansions)
                std::cout << "  " << std::setw(12) << std::left << e.delta << " delta-J "
                          << mark(e.delta_J_ideal) << witness(*R, e.delta_J_ideal_witness)
                          << "  delta-primary " << mark(e.delta_primary) << "\n";
            std::cout << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
