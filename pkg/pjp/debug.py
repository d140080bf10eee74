import sys

from fractions import Fraction

from typing import Dict, Tuple, Iterable

from pjp.rootsys import RootSystem, Weight
from pjp.formatutil import format_weight, format_fraction
from pjp.parabolic import lower_ideal, ideal_sort_key
from pjp.jacobi import separation_witness


def debug_report_ideal(rs: RootSystem, subset: Tuple[int, ...], weight: Weight) -> None:
    """Print the lower ideal of a label, one member per line, in construction order."""

    members = lower_ideal(rs, subset, weight)
    print(
        f"{rs}: {len(members)} labels below {format_weight(weight)} for I={[i + 1 for i in subset]}",
        file=sys.stderr,
    )
    for mu in members:
        height, length, word, _ = ideal_sort_key(rs, mu)
        print(
            f"  {format_weight(mu)} (height {format_fraction(height)}, length {length}, "
            f"word {''.join(str(i + 1) for i in word) or 'e'})",
            file=sys.stderr,
        )


def debug_find_close_spectra(
    spectrum: Dict[Weight, Tuple[Fraction, ...]], *, threshold: Fraction = Fraction(1, 2)
) -> None:
    """Print pairs of labels whose joint eigenvalues are all within the threshold.

    Nearly colliding spectra are where an unlucky k would break the separation of labels.
    """

    labels = list(spectrum.items())
    for n, (a, x) in enumerate(labels):
        for b, y in labels[n + 1 :]:
            if all(abs(s - t) <= threshold for s, t in zip(x, y)):
                distance = max(abs(s - t) for s, t in zip(x, y))
                print(
                    f"{format_weight(a)} and {format_weight(b)} have close spectra "
                    f"(max distance {format_fraction(distance)})",
                    file=sys.stderr,
                )


def debug_report_failures(failures: Iterable[Tuple[str, str]]) -> None:
    for name, detail in failures:
        print(f"{name}: {detail}", file=sys.stderr)


def debug_report_separation(spectrum: Dict[Weight, Tuple[Fraction, ...]]) -> None:
    witness = separation_witness(spectrum)
    if witness is not None:
        a, b = witness
        print(
            f"the first generator alone does not separate {format_weight(a)} and {format_weight(b)}",
            file=sys.stderr,
        )
