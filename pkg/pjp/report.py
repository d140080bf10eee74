from fractions import Fraction

from pjp.rootsys import RootSystem, Weight, RationalWeight
from pjp.laurent import LaurentPoly
from pjp.polynomial import Polynomial
from pjp.parabolic import SteinbergDatum, AltSteinbergDatum, FigureRow
from pjp.jacobi import JacobiPoly
from pjp.vectorize import VectorPoly
from pjp.verify import Result
from pjp.formatutil import (
    JSON,
    LATEX,
    dumps,
    format_fraction,
    format_laurent,
    format_matrix,
    format_polynomial,
    format_vector,
    format_weight,
    laurent_to_json,
    polynomial_to_json,
    root_system_to_json,
    vector_to_json,
    weight_to_json,
)
from pjp.printutil import colored, passed_or_failed, COLOR_MUTED

from typing import List, Sequence, Union, Optional


def _rational_coords(weight: RationalWeight) -> List[str]:
    return [format_fraction(c) for c in weight.coords]


def render_generators(
    rs: RootSystem, data: Sequence[Union[SteinbergDatum, AltSteinbergDatum]], fmt: str
) -> str:
    if fmt == JSON:
        obj = root_system_to_json(rs)
        obj["generators"] = [
            {
                "v": str(d.v if isinstance(d, SteinbergDatum) else d.w),
                "weight": weight_to_json(d.weight),
                "label": weight_to_json(d.label),
                "generator": laurent_to_json(d.generator, with_rs=False),
            }
            for d in data
        ]
        return dumps(obj)
    latex = fmt == LATEX
    lines = []
    for d in data:
        element = d.v if isinstance(d, SteinbergDatum) else d.w
        generator = format_laurent(d.generator, latex=latex)
        if latex:
            lines.append(f"{element} & {format_weight(d.label, latex=True)} & {generator} \\\\")
        else:
            lines.append(f"{str(element).ljust(12)} {format_weight(d.label).ljust(16)} {generator}")
    return "\n".join(lines)


def render_table(rows: Sequence[FigureRow], subsets: Sequence[Sequence[int]], fmt: str) -> str:
    if fmt == JSON:
        return dumps(
            [
                {
                    "v": str(row.v),
                    "weight": weight_to_json(row.weight),
                    "label": weight_to_json(row.label),
                    "in": list(row.in_coset_reps),
                }
                for row in rows
            ]
        )
    latex = fmt == LATEX
    lines = []
    for row in rows:
        stars = ["*" if member else "" for member in row.in_coset_reps]
        cells = [str(row.v), format_weight(row.weight, latex=latex), format_weight(row.label, latex=latex)]
        if latex:
            lines.append(" & ".join(cells + stars) + " \\\\")
        else:
            marks = " ".join(s.ljust(1) for s in stars)
            lines.append(f"{cells[0].ljust(12)} {cells[1].ljust(14)} {cells[2].ljust(14)} {marks}")
    if not latex:
        names = ", ".join(
            "I=" + ("none" if len(s) == 0 else ",".join(f"s{i + 1}" for i in s)) for s in subsets
        )
        lines.append(colored(f"(* marks v in W^I for {names})", COLOR_MUTED))
    return "\n".join(lines)


def render_laurent(f: LaurentPoly, fmt: str, *, spectral: Optional[RationalWeight] = None) -> str:
    if fmt == JSON:
        obj = laurent_to_json(f)
        if spectral is not None:
            obj["spectral"] = _rational_coords(spectral)
        return dumps(obj)
    text = format_laurent(f, latex=fmt == LATEX)
    if spectral is not None and fmt != LATEX:
        text += "\n" + colored(f"spectral vector ({', '.join(_rational_coords(spectral))})", COLOR_MUTED)
    return text


def render_jacobi(p: JacobiPoly, fmt: str) -> str:
    if fmt == JSON:
        obj = laurent_to_json(p.poly)
        obj["label"] = weight_to_json(p.label)
        obj["I"] = [i + 1 for i in p.subset]
        obj["k"] = [format_fraction(v) for v in p.k.values]
        obj["expansion"] = [
            {"mu": weight_to_json(mu), "coeff": format_fraction(c)} for mu, c in p.expansion
        ]
        return dumps(obj)
    latex = fmt == LATEX
    if latex:
        return format_laurent(p.poly, latex=True)
    expansion = " + ".join(
        f"{format_fraction(c)} m({format_weight(mu).replace(' ', '')})" for mu, c in p.expansion
    )
    return format_laurent(p.poly) + "\n" + colored(f"= {expansion}", COLOR_MUTED)


def render_vector(phi: VectorPoly, fmt: str) -> str:
    if fmt == JSON:
        return dumps(vector_to_json(phi))
    latex = fmt == LATEX
    entries = [format_laurent(c, latex=latex) for c in phi.components]
    if latex:
        return format_vector(entries, latex=True)
    return "\n".join(entries)


def render_chi_matrix(rows: Sequence[Sequence[Polynomial]], fmt: str) -> str:
    if fmt == JSON:
        return dumps([[polynomial_to_json(p) for p in row] for row in rows])
    latex = fmt == LATEX
    return format_matrix([[format_polynomial(p, latex=latex) for p in row] for row in rows], latex=latex)


def render_chi_vectors(labels: Sequence[Weight], vectors: Sequence[Sequence[Polynomial]], fmt: str) -> str:
    if fmt == JSON:
        return dumps(
            [
                {"label": weight_to_json(label), "P": [polynomial_to_json(p) for p in vector]}
                for label, vector in zip(labels, vectors)
            ]
        )
    latex = fmt == LATEX
    lines = []
    for label, vector in zip(labels, vectors):
        entries = format_vector([format_polynomial(p, latex=latex) for p in vector], latex=latex)
        lines.append(f"{format_weight(label, latex=latex)}: {entries}")
    return "\n".join(lines)


def render_results(results: Sequence[Result], kset: Sequence[Fraction], fmt: str) -> str:
    if fmt == JSON:
        return dumps(
            {
                "kset": [format_fraction(k) for k in kset],
                "results": [
                    {
                        "suite": r.case.suite,
                        "case": r.case.name,
                        "passed": r.passed,
                        "detail": r.detail,
                    }
                    for r in results
                ],
            }
        )
    lines = [colored(f"k-set: {', '.join(format_fraction(k) for k in kset)}", COLOR_MUTED)]
    for r in results:
        line = f"{passed_or_failed(r.passed)} {r.case.suite}: {r.case.name}"
        if not r.passed and len(r.detail) > 0:
            line += f" ({r.detail})"
        lines.append(line)
    failed = sum(1 for r in results if not r.passed)
    lines.append(f"{len(results) - failed}/{len(results)} cases passed")
    return "\n".join(lines)

