import json

from fractions import Fraction

from pjp.rootsys import RootSystem, Weight, Coweight, parse_root_system, simple_subset
from pjp.polynomial import MalformedInput, Polynomial

from typing import List, Dict, Sequence, Union, Any, Optional, TYPE_CHECKING

if TYPE_CHECKING:
    from pjp.laurent import LaurentPoly
    from pjp.vectorize import VectorPoly, MatrixRatOp, RationalFunction

TEXT = "text"
LATEX = "latex"
JSON = "json"

FORMATS = [TEXT, LATEX, JSON]


def format_fraction(value: Union[int, Fraction]) -> str:
    """Return a rational number as an integer or `p/q`.

    For example, Fraction(4, 2) => '2', Fraction(-1, 3) => '-1/3'
    """

    value = Fraction(value)
    if value.denominator == 1:
        return f"{value.numerator}"
    return f"{value.numerator}/{value.denominator}"


def _latex_fraction(value: Fraction) -> str:
    if value.denominator == 1:
        return f"{value.numerator}"
    sign = "-" if value < 0 else ""
    return f"{sign}\\frac{{{abs(value.numerator)}}}{{{value.denominator}}}"


def _join_terms(terms: Sequence[tuple]) -> str:
    """Join (coefficient, body) pairs as a signed sum; an empty body means a constant."""

    if len(terms) == 0:
        return "0"
    parts: List[str] = []
    for n, (coefficient, body, render) in enumerate(terms):
        magnitude = abs(coefficient)
        if len(body) == 0:
            text = render(magnitude)
        elif magnitude == 1:
            text = body
        else:
            text = f"{render(magnitude)} {body}"
        if n == 0:
            parts.append(f"-{text}" if coefficient < 0 else text)
        else:
            parts.append(f" - {text}" if coefficient < 0 else f" + {text}")
    return "".join(parts)


def format_weight(weight: Weight, *, latex: bool = False) -> str:
    """Return a weight as a combination of fundamental weights.

    For example, Weight((-1, 1)) => '-w1 + w2' or '-\\varpi_{1}+\\varpi_{2}' in LaTeX
    """

    render = _latex_fraction if latex else format_fraction
    terms = []
    for i, c in enumerate(weight.coords):
        if c != 0:
            name = f"\\varpi_{{{i + 1}}}" if latex else f"w{i + 1}"
            terms.append((c, name, render))
    text = _join_terms(terms)
    return text.replace(" ", "") if latex else text


def format_laurent(f: "LaurentPoly", *, latex: bool = False) -> str:
    """Return a Laurent polynomial with its terms in descending exponent order.

    For example, 'e^(w1) + 1/2 e^(-w1)' or 'e^{\\varpi_{1}}+\\frac{1}{2}e^{-\\varpi_{1}}'
    """

    render = _latex_fraction if latex else format_fraction
    terms = []
    for exponent, c in f.items():
        if exponent.is_zero:
            body = ""
        elif latex:
            body = f"e^{{{format_weight(exponent, latex=True)}}}"
        else:
            body = f"e^({format_weight(exponent).replace(' ', '')})"
        terms.append((c, body, render))
    text = _join_terms(terms)
    return text.replace(" ", "") if latex else text


def format_polynomial(p: Polynomial, *, latex: bool = False) -> str:
    """Return a polynomial in x1, …, xn, e.g. 'x1*x2 - 3' or 'x_{1}x_{2}-3' in LaTeX."""

    render = _latex_fraction if latex else format_fraction
    terms = []
    for exponent, c in p.items():
        factors = []
        for i, power in enumerate(exponent):
            if power == 0:
                continue
            name = f"x_{{{i + 1}}}" if latex else f"x{i + 1}"
            if power > 1:
                name = f"{name}^{{{power}}}" if latex else f"{name}^{power}"
            factors.append(name)
        terms.append((c, ("" if latex else "*").join(factors), render))
    text = _join_terms(terms)
    return text.replace(" ", "") if latex else text


def format_rational(r: "RationalFunction", *, latex: bool = False) -> str:
    num = format_laurent(r.num, latex=latex)
    if r.den == 1:
        return num
    den = format_laurent(r.den, latex=latex)
    if latex:
        return f"\\frac{{{num}}}{{{den}}}"
    return f"({num})/({den})"


def format_vector(entries: Sequence[str], *, latex: bool = False) -> str:
    if latex:
        return "\\begin{pmatrix}" + "\\\\".join(entries) + "\\end{pmatrix}"
    return "(" + ", ".join(entries) + ")"


def format_matrix(rows: Sequence[Sequence[str]], *, latex: bool = False) -> str:
    if latex:
        body = "\\\\".join("&".join(row) for row in rows)
        return "\\begin{pmatrix}" + body + "\\end{pmatrix}"
    widths = [max(len(row[j]) for row in rows) for j in range(len(rows[0]))]
    return "\n".join(
        "[ " + "  ".join(entry.ljust(w) for entry, w in zip(row, widths)) + " ]"
        for row in rows
    )


def format_operator(op: "MatrixRatOp", *, latex: bool = False) -> str:
    """Return an operator as a matrix whose entries are sums of coefficient·∂ terms."""

    cells: List[List[List[str]]] = [[[] for _ in range(op.size)] for _ in range(op.size)]
    for t in op.terms:
        coefficient = format_rational(t.coefficient, latex=latex)
        derivative = []
        for l, power in enumerate(t.derivative):
            if power == 0:
                continue
            name = f"\\partial_{{{l + 1}}}" if latex else f"d{l + 1}"
            derivative.append(name if power == 1 else f"{name}^{power}")
        text = coefficient if len(derivative) == 0 else f"{coefficient}*{'*'.join(derivative)}"
        cells[t.row][t.col].append(text)
    return format_matrix(
        [[" + ".join(cell) if len(cell) > 0 else "0" for cell in row] for row in cells],
        latex=latex,
    )


def _fraction_from_json(value: Any) -> Fraction:
    try:
        return Fraction(value)
    except (TypeError, ValueError, ZeroDivisionError):
        raise MalformedInput(f"not a rational number: {value!r}")


def weight_to_json(weight: Weight) -> List[str]:
    return [format_fraction(c) for c in weight.coords]


def weight_from_json(obj: Any) -> Weight:
    if not isinstance(obj, list):
        raise MalformedInput(f"a weight is a list of coordinates (got {obj!r})")
    try:
        return Weight.of(_fraction_from_json(c) for c in obj)
    except ValueError as e:
        raise MalformedInput(str(e))


def root_system_to_json(rs: RootSystem) -> Dict[str, str]:
    return {"rs": rs.name, "scale": format_fraction(rs.scale)}


def root_system_from_json(obj: Dict[str, Any]) -> RootSystem:
    try:
        return parse_root_system(obj["rs"], _fraction_from_json(obj.get("scale", 1)))
    except (KeyError, TypeError):
        raise MalformedInput("missing root system")


def laurent_to_json(f: "LaurentPoly", *, with_rs: bool = True) -> Dict[str, Any]:
    obj: Dict[str, Any] = root_system_to_json(f.rs) if with_rs else {}
    obj["terms"] = [
        {"exp": weight_to_json(exponent), "coeff": format_fraction(c)}
        for exponent, c in f.items()
    ]
    return obj


def laurent_from_json(obj: Dict[str, Any], rs: Optional[RootSystem] = None) -> "LaurentPoly":
    from pjp.laurent import LaurentPoly

    if rs is None:
        rs = root_system_from_json(obj)
    try:
        return LaurentPoly.from_terms(
            rs,
            [
                (weight_from_json(term["exp"]), _fraction_from_json(term["coeff"]))
                for term in obj["terms"]
            ],
        )
    except (KeyError, TypeError):
        raise MalformedInput("malformed Laurent polynomial")


def polynomial_to_json(p: Polynomial) -> Dict[str, Any]:
    return {
        "nvars": p.nvars,
        "terms": [
            {"exp": list(exponent), "coeff": format_fraction(c)} for exponent, c in p.items()
        ],
    }


def polynomial_from_json(obj: Dict[str, Any]) -> Polynomial:
    try:
        nvars = int(obj["nvars"])
        result = Polynomial.zero(nvars)
        for term in obj["terms"]:
            exponent = [int(e) for e in term["exp"]]
            if len(exponent) != nvars:
                raise MalformedInput(f"exponent {exponent} has the wrong length")
            result = result + Polynomial.monomial(exponent, _fraction_from_json(term["coeff"]))
        return result
    except (KeyError, TypeError, ValueError):
        raise MalformedInput("malformed polynomial")


def vector_to_json(phi: "VectorPoly") -> Dict[str, Any]:
    obj: Dict[str, Any] = root_system_to_json(phi.rs)
    obj["I"] = [i + 1 for i in phi.subset]
    obj["components"] = [laurent_to_json(c, with_rs=False) for c in phi.components]
    return obj


def vector_from_json(obj: Dict[str, Any]) -> "VectorPoly":
    from pjp.vectorize import vector

    rs = root_system_from_json(obj)
    try:
        subset = simple_subset(rs, (int(i) - 1 for i in obj["I"]))
        return vector(rs, subset, [laurent_from_json(c, rs) for c in obj["components"]])
    except (KeyError, TypeError, ValueError):
        raise MalformedInput("malformed vector polynomial")


def operator_to_json(op: "MatrixRatOp") -> Dict[str, Any]:
    obj: Dict[str, Any] = root_system_to_json(op.rs)
    obj["size"] = op.size
    obj["xis"] = [[format_fraction(v) for v in xi.values] for xi in op.xis]
    obj["terms"] = [
        {
            "i": t.row,
            "j": t.col,
            "num": laurent_to_json(t.coefficient.num, with_rs=False),
            "den": laurent_to_json(t.coefficient.den, with_rs=False),
            "deriv": list(t.derivative),
        }
        for t in op.terms
    ]
    return obj


def operator_from_json(obj: Dict[str, Any]) -> "MatrixRatOp":
    from pjp.vectorize import MatrixRatOp, OpTerm, RationalFunction

    rs = root_system_from_json(obj)
    try:
        xis = tuple(
            Coweight(tuple(_fraction_from_json(v) for v in values)) for values in obj["xis"]
        )
        terms = tuple(
            OpTerm(
                int(t["i"]),
                int(t["j"]),
                RationalFunction(laurent_from_json(t["num"], rs), laurent_from_json(t["den"], rs)),
                tuple(int(a) for a in t["deriv"]),
            )
            for t in obj["terms"]
        )
        return MatrixRatOp(rs, int(obj["size"]), xis, terms)
    except (KeyError, TypeError, ValueError):
        raise MalformedInput("malformed matrix operator")


def dumps(obj: Any) -> str:
    """Return deterministic JSON text."""

    return json.dumps(obj, indent=2, ensure_ascii=False, sort_keys=True)
