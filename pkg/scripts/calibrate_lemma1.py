"""Measure |omega(eps)| over the lemma grid and propose a frozen ceiling.

    python scripts/calibrate_lemma1.py

The ceiling used by the test suite and ``sincpow verify lemma`` lives in
``sincpow.oracle.LEMMA1_THRESHOLD``; rerun this after touching the oracle.
"""
import itertools

from sincpow.oracle import LEMMA1_THRESHOLD, lemma1_residual

QS = range(2, 7)
ALPHAS = (1.0, 2.0, 3.0)
EPS = (1e-1, 1e-2, 1e-3)


def main():
    worst = 0.0
    print("q  alpha  " + "  ".join(f"eps={e:g}".rjust(12) for e in EPS))
    for q, alpha in itertools.product(QS, ALPHAS):
        mags = [abs(lemma1_residual(q, alpha, e)) for e in EPS]
        worst = max(worst, mags[-1])
        print(f"{q}  {alpha:5g}  " + "  ".join(f"{m:12.4e}" for m in mags))
    print(f"max |omega(1e-3)| = {worst:.4e}; proposed ceiling {2 * worst:.1e}; frozen {LEMMA1_THRESHOLD:g}")


if __name__ == "__main__":
    main()
