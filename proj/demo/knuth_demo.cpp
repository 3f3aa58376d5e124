// Prints A_n, B_n for the slope 2/5 problem next to the closed form for
// their sum and the asymptotic ratio A_n/B_n ~ kappa1 - kappa2/n.
#include <iostream>

#include "slopewalk/asymptotics.hpp"
#include "slopewalk/closed_forms.hpp"
#include "slopewalk/lattice_enum.hpp"

int main()
{
    using namespace slopewalk;
    const JumpPolynomial jumps = JumpPolynomial::two_jump(2, 5);
    Precision prec;
    WorkingPrecision wp(prec);
    const AsymptoticProfile k = knuth_constants(prec);

    std::cout << "kappa1 = " << to_fixed(k.kappa1, 22) << "\nkappa2 = " << to_fixed(k.kappa2, 22) << "\n\n";
    std::cout << "n  A_n  B_n  A_n+B_n  closed_form  A_n/B_n\n";
    for (std::int64_t n = 1; n <= 8; ++n) {
        const BigInt A = count_directed(jumps, 7 * n - 2, 4, 1, true);
        const BigInt B = count_directed(jumps, 7 * n - 2, 3, 0, true);
        std::cout << n << "  " << A << "  " << B << "  " << A + B << "  " << knuth_sum(n) << "  "
                  << to_fixed(to_real(A) / to_real(B), 8) << '\n';
    }
    return 0;
}
