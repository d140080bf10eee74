"""
USAGE:
  pjp gens    --rs=<type> [--I=<indices>] [--alt] [--table] [options]
  pjp epoly   --rs=<type> --lambda=<weight> [--k=<values>] [--method=<name>] [options]
  pjp jacobi  --rs=<type> --lambda=<weight> [--I=<indices>] [--k=<values>]
              [--method=<name>] [options]
  pjp vec     --rs=<type> --lambda=<weight> [--I=<indices>] [--k=<values>] [options]
  pjp opapply --rs=<type> --lambda=<weight> (--q=<poly> | --op=<name>)
              [--I=<indices>] [--k=<values>] [options]
  pjp mvop    --rs=<type> [--I=<indices>] [--sigma=<weight>] [--k=<values>]
              [--part=<name>] [options]
  pjp verify  [--suite=<name>] [--kset=<values>] [--random=<n>] [--seed=<n>] [--box=<n>]
              [--jobs=<n>] [options]


OPTIONS:
     --rs=<type>          Specify root system, e.g. A2, B2 or G2
     --I=<indices>        Specify simple reflections of W_I (1-based, comma-separated;
                          `none` or `all`) [default: none]
     --lambda=<weight>    Specify a weight in fundamental-weight coordinates, e.g. -1,0
     --sigma=<weight>     Specify a dominant weight for the matrix polynomial
     --k=<values>         Specify multiplicity, one value or one per root orbit [default: 1]
     --method=<name>      Specify construction (jacobi: sym|gs|both, epoly: triangular|gs|both)
     --q=<poly>           Apply D_q for an invariant polynomial in x1, x2, ...
     --op=<name>          Apply a worked-example operator (M1|M2|D1|D2|T)
     --part=<name>        Show the matrix polynomial (M), weight (W) or columns (P) [default: M]
     --alt                Show the alternative generators
     --table              Show λ_v and v^-1 λ_v for every element of W
     --suite=<name>       Specify verification suite [default: all]
     --kset=<values>      Specify multiplicities to verify with [default: 1/2,1,2,5/3]
     --random=<n>         Add n random multiplicities in (0,3] to the k-set [default: 2]
     --seed=<n>           Specify seed for the random multiplicities [default: 0]
     --box=<n>            Specify radius of the box of weights [default: 3]
     --jobs=<n>           Run verification cases in parallel [default: 1]
     --scale=<c>          Scale every root by c [default: 1]
     --format=<fmt>       Specify output format (text|latex|json) [default: text]
     --out=<file>         Write output to file
     --no-color           Don't apply ANSI colors
  -d --debug              Show diagnostic messages
  -h --help               Show program help
  -v --version            Show program version

Weights with negative coordinates are given as --lambda=-1,0.
"""

import os
import sys
import json

from fractions import Fraction
from dataclasses import dataclass

from docopt import docopt, DocoptExit  # type: ignore

from pjp import __version__
from pjp.rootsys import (
    ComputationError,
    RootSystem,
    Weight,
    Coweight,
    Multiplicity,
    UnsupportedType,
    NotIDominant,
    InvalidSubset,
    InvalidMultiplicity,
    MismatchedRootSystem,
    ambient_coweight,
    full_subset,
    is_dominant,
    multiplicity,
    parse_root_system,
    simple_subset,
    xi_basis,
)
from pjp.polynomial import MalformedInput, Polynomial, parse_polynomial
from pjp.laurent import orbit_sum
from pjp.parabolic import steinberg_generators, alt_steinberg, figure_table, lower_ideal
from pjp.cherednik import e_poly, e_poly_gs, e_poly_both, spectral
from pjp.jacobi import METHODS, jacobi, invariant_generators, joint_spectrum
from pjp.vectorize import (
    EXAMPLE_SUBSET,
    OPERATOR_NAMES,
    big_p,
    example_root_system,
    gamma,
    induced_apply,
    matrix_op_apply,
    named_operator,
    spherical_apply,
    t_image,
)
from pjp.mvop import mvop_labels, mvop_matrix, script_p, weight_matrix
from pjp.verify import SUITES, ALL, cases, run_cases, with_random_multiplicities
from pjp.report import (
    render_chi_matrix,
    render_chi_vectors,
    render_generators,
    render_jacobi,
    render_laurent,
    render_results,
    render_table,
    render_vector,
)
from pjp.formatutil import FORMATS
from pjp.printutil import enable_color_escapes, suppress_color
from pjp.debug import (
    debug_report_ideal,
    debug_find_close_spectra,
    debug_report_separation,
    debug_report_failures,
)

from typing import List, Tuple, Optional, Sequence

COMMANDS = ["gens", "epoly", "jacobi", "vec", "opapply", "mvop", "verify"]

EPOLY_METHODS = ["triangular", "gs", "both"]
PARTS = ["M", "W", "P"]

# failures caused by what was asked for, rather than by the computation itself
INPUT_ERRORS = (
    MalformedInput,
    UnsupportedType,
    NotIDominant,
    InvalidSubset,
    InvalidMultiplicity,
    MismatchedRootSystem,
)


@dataclass(frozen=True)
class Request:
    command: str
    rs: Optional[RootSystem] = None
    subset: Tuple[int, ...] = ()
    k: Optional[Multiplicity] = None
    weight: Optional[Weight] = None
    method: Optional[str] = None
    q: Optional[Polynomial] = None
    op: Optional[str] = None
    part: str = "M"
    alt: bool = False
    table: bool = False
    suite: str = ALL
    kset: Tuple[Fraction, ...] = ()
    box: int = 3
    jobs: int = 1
    fmt: str = "text"
    out: Optional[str] = None
    is_verbose: bool = False
    no_color: bool = False


def parse_fractions(text: str) -> List[Fraction]:
    """Return the comma-separated rationals in `text`, e.g. '1/2,1' => [1/2, 1]."""

    values = []
    for part in text.split(","):
        try:
            values.append(Fraction(part.strip()))
        except (ValueError, ZeroDivisionError):
            raise MalformedInput(f"not a rational number: '{part}'")
    return values


def parse_weight(rs: RootSystem, text: str) -> Weight:
    coords = parse_fractions(text)
    if len(coords) != rs.rank:
        raise MalformedInput(f"{rs.name} weights have {rs.rank} coordinates (got '{text}')")
    try:
        return Weight.of(coords)
    except ValueError as e:
        raise MalformedInput(f"{e}")


def parse_subset(rs: RootSystem, text: str) -> Tuple[int, ...]:
    text = text.strip().lower()
    if text in ("none", ""):
        return simple_subset(rs, [])
    if text == "all":
        return full_subset(rs)
    try:
        indices = [int(i) - 1 for i in text.split(",")]
    except ValueError:
        raise MalformedInput(f"not a list of simple reflections: '{text}'")
    return simple_subset(rs, indices)


def parse_count(text: str, name: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise MalformedInput(f"{name} must be an integer (got '{text}')")
    if value < 0:
        raise MalformedInput(f"{name} must be nonnegative (got {value})")
    return value


def coweights_for(rs: RootSystem) -> List[Coweight]:
    """Return the coweights bound to x1, x2, … in `--q`."""

    if rs.family == "A":
        n = rs.rank + 1
        return [ambient_coweight(rs, [1 if j == i else 0 for j in range(n)]) for i in range(n)]
    return xi_basis(rs)


def parse(argv: Optional[Sequence[str]] = None) -> Request:
    """Return the request given on the command line.

    Raise `MalformedInput` (or another input error) for anything that does not parse.
    """

    args = docopt(__doc__, argv=argv, version="pjp " + __version__.__version__)
    command = next(c for c in COMMANDS if args[c])
    fmt = args["--format"]
    if fmt not in FORMATS:
        raise MalformedInput(f"unknown format: {fmt}")
    is_verbose = args["--debug"] or "DEBUG" in os.environ
    common = dict(
        command=command,
        fmt=fmt,
        out=args["--out"],
        is_verbose=is_verbose,
        no_color=args["--no-color"],
    )

    if command == "verify":
        suite = args["--suite"]
        if suite != ALL and suite not in SUITES:
            raise MalformedInput(f"unknown suite: {suite}")
        kset = tuple(parse_fractions(args["--kset"]))
        if any(k < 0 for k in kset):
            raise InvalidMultiplicity("multiplicities must be nonnegative")
        seed = parse_count(args["--seed"], "--seed")
        kset = with_random_multiplicities(kset, seed, parse_count(args["--random"], "--random"))
        return Request(
            suite=suite,
            kset=kset,
            box=parse_count(args["--box"], "--box"),
            jobs=max(1, parse_count(args["--jobs"], "--jobs")),
            **common,
        )

    scale = parse_fractions(args["--scale"])
    if len(scale) != 1:
        raise MalformedInput("--scale takes a single value")
    if args["--op"] is not None:
        if args["--op"] not in OPERATOR_NAMES:
            raise MalformedInput(f"unknown operator: {args['--op']}")
        rs = example_root_system()
        subset = EXAMPLE_SUBSET
    else:
        rs = parse_root_system(args["--rs"], scale[0])
        subset = parse_subset(rs, args["--I"])
    k = multiplicity(rs, parse_fractions(args["--k"]))

    method = args["--method"]
    if command == "jacobi":
        method = method or METHODS[0]
        if method not in METHODS:
            raise MalformedInput(f"unknown method: {method}")
    elif command == "epoly":
        method = method or EPOLY_METHODS[0]
        if method not in EPOLY_METHODS:
            raise MalformedInput(f"unknown method: {method}")

    weight = None
    if args["--lambda"] is not None:
        weight = parse_weight(rs, args["--lambda"])
    elif args["--sigma"] is not None:
        weight = parse_weight(rs, args["--sigma"])
        if not is_dominant(rs, weight, full_subset(rs)):
            raise NotIDominant(f"{weight.coords} is not dominant")
    elif command == "mvop":
        weight = Weight.zero(rs.rank)

    if args["--part"] not in PARTS:
        raise MalformedInput(f"unknown part: {args['--part']}")

    q = None
    if args["--q"] is not None:
        q = parse_polynomial(args["--q"], len(coweights_for(rs)))

    return Request(
        rs=rs,
        subset=subset,
        k=k,
        weight=weight,
        method=method,
        q=q,
        op=args["--op"],
        part=args["--part"],
        alt=args["--alt"],
        table=args["--table"],
        **common,
    )


def run(request: Request) -> Tuple[str, int]:
    """Return the output of a request and its exit code."""

    if request.command == "verify":
        results = run_cases(cases(request.suite, request.kset, request.box), request.jobs)
        if request.is_verbose:
            debug_report_failures(
                (f"{r.case.suite}: {r.case.name}", r.detail) for r in results if not r.passed
            )
        passed = all(r.passed for r in results)
        return render_results(results, request.kset, request.fmt), 0 if passed else 1

    rs, subset, k, weight, fmt = request.rs, request.subset, request.k, request.weight, request.fmt
    assert rs is not None and k is not None

    if request.command == "gens":
        if request.table:
            subsets = [()] + ([subset] if 0 < len(subset) < rs.rank else []) + [full_subset(rs)]
            return render_table(figure_table(rs, subsets), subsets, fmt), 0
        data = alt_steinberg(rs, subset) if request.alt else steinberg_generators(rs, subset)
        return render_generators(rs, data, fmt), 0

    assert weight is not None

    if request.command == "epoly":
        construct = {"triangular": e_poly, "gs": e_poly_gs, "both": e_poly_both}[request.method]
        f = construct(rs, weight, k)
        return render_laurent(f, fmt, spectral=spectral(rs, weight, k).value), 0

    if request.command == "jacobi":
        p = jacobi(rs, subset, weight, k, request.method)
        if request.is_verbose:
            debug_report_ideal(rs, subset, weight)
            try:
                generators, xis = invariant_generators(rs, subset)
                spectrum = joint_spectrum(rs, k, lower_ideal(rs, subset, weight), generators, xis)
                debug_find_close_spectra(spectrum)
                debug_report_separation(spectrum)
            except UnsupportedType:
                pass
        return render_jacobi(p, fmt), 0

    if request.command == "vec":
        return render_vector(big_p(rs, subset, weight, k), fmt), 0

    if request.command == "opapply":
        phi = gamma(rs, subset, orbit_sum(rs, subset, weight))
        if request.q is not None:
            return render_vector(induced_apply(request.q, coweights_for(rs), k, phi), fmt), 0
        assert request.op is not None
        if request.op == "T":
            return render_vector(t_image(phi), fmt), 0
        op = named_operator(request.op, k.values[0])
        if request.op.startswith("D"):
            # D acts on T^{-1}Γ; report its image back on the Γ side
            return render_vector(spherical_apply(op, phi), fmt), 0
        return render_vector(matrix_op_apply(op, phi), fmt), 0

    if request.command == "mvop":
        if request.part == "W":
            return render_chi_matrix(weight_matrix(rs, subset), fmt), 0
        if request.part == "P":
            labels = mvop_labels(rs, subset, weight)
            return render_chi_vectors(labels, [script_p(rs, subset, l, k) for l in labels], fmt), 0
        return render_chi_matrix(mvop_matrix(rs, subset, weight, k), fmt), 0

    raise ValueError(f"unknown command: {request.command}")


def error_text(e: ComputationError) -> str:
    return json.dumps({"error": e.code, "detail": e.message}, ensure_ascii=False)


def main() -> None:
    """Entry point for invoking the command-line interface."""

    if sys.version_info < (3, 8):
        sys.exit(
            f"Python 3.8+ required; "
            f"{sys.version_info[0]}.{sys.version_info[1]} currently"
        )

    try:
        request = parse(sys.argv[1:])
    except DocoptExit as e:
        print(f"{e}", file=sys.stderr)
        sys.exit(2)
    except INPUT_ERRORS as e:
        print(error_text(e), file=sys.stderr)
        sys.exit(2)

    enable_color_escapes()

    # see https://no-color.org
    if request.no_color or "NO_COLOR" in os.environ or request.out is not None:
        suppress_color(True)

    try:
        output, code = run(request)
    except INPUT_ERRORS as e:
        print(error_text(e), file=sys.stderr)
        sys.exit(2)
    except ComputationError as e:
        print(error_text(e), file=sys.stderr)
        sys.exit(1)

    if request.out is not None:
        with open(request.out, "w", newline="") as file:
            print(output, file=file)
    else:
        print(output)

    sys.exit(code)


if __name__ == "__main__":
    main()
