"""Print how the finite-eps expressions approach the closed forms.

    python scripts/reconstruction_sweep.py [n_max]
"""
import sys

from sincpow.exact_core import closed_form
from sincpow.oracle import finite_eps_reconstruction
from sincpow.render import render_exact

EPS = (1e-1, 1e-2, 1e-3, 1e-4)


def main(n_max=8):
    print("n  q  " + "".join(f"{'eps=' + format(e, 'g'):>13}" for e in EPS) + "  value")
    for n in range(1, n_max + 1):
        for q in range(1, n + 1):
            if q == 1 and n % 2 == 0:
                continue
            exact = closed_form((n, q))
            devs = [abs(finite_eps_reconstruction(n, q, e) - float(exact)) for e in EPS]
            print(f"{n:<2} {q:<2} " + "".join(f"{d:13.3e}" for d in devs) + f"  {render_exact(exact)}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 8)
