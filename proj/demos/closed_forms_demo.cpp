// Small tour: build the a = 1/4 and a = 1/6 families and compare the series
// route against the Weierstrass closed forms on a few points.

#include <cstdio>

#include "hypell/hypell.hpp"

using namespace hypell;

int main() {
    const double kappa = 0.8;

    const AnalogueSet sig4 = AnalogueSet::build(ModulusParams(Rational(1, 4), kappa), 48);
    const AnalogueSet sig3 = AnalogueSet::build(ModulusParams(Rational(1, 6), kappa), 48);

    std::printf("kappa = %.2f, trusted radius (sig4 d) = %.4f\n", kappa,
                sig4.trusted_radius(AnalogueFn::d));
    std::printf("%8s %22s %22s %12s\n", "u", "d (series)", "d (closed form)", "|diff|");
    for (double u : {0.02, 0.05, 0.10, 0.15}) {
        const Complex via_series = sig4.eval(AnalogueFn::d, Complex(u));
        const Complex closed = sig4_d_closed(kappa, Complex(u));
        std::printf("%8.2f %22.15f %22.15f %12.3e\n", u, via_series.real(), closed.real(),
                    std::abs(via_series - closed));
    }

    std::printf("\n%8s %22s %22s %12s\n", "u", "delta (series)", "dn3 (closed form)", "|diff|");
    for (double u : {0.02, 0.05, 0.10, 0.15}) {
        const Complex via_series = sig3.eval(AnalogueFn::delta, Complex(u));
        const Complex closed = sig3_dn3_closed(kappa, Complex(u));
        std::printf("%8.2f %22.15f %22.15f %12.3e\n", u, via_series.real(), closed.real(),
                    std::abs(via_series - closed));
    }

    std::printf("\ndelta vs 4*nabla - 3 at u = 0.1: |diff| = %.3e\n",
                std::abs(sig3.eval(AnalogueFn::delta, Complex(0.1)) -
                         (4.0 * sig3.eval(AnalogueFn::nabla, Complex(0.1)) - 1.0 * 3.0)));
    return 0;
}
