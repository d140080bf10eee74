import sys
import json

import pytest

from fractions import Fraction

from docopt import DocoptExit  # type: ignore

from pjp.rootsys import (
    Weight,
    NotIDominant,
    UnsupportedType,
    InvalidMultiplicity,
    InvalidSubset,
)
from pjp.laurent import LaurentPoly
from pjp.polynomial import MalformedInput
from pjp.formatutil import vector_from_json
from pjp.verify import DEFAULT_KSET
from pjp.__main__ import parse, run, main


def test_parse():
    request = parse(["gens", "--rs=A2", "--I=2"])
    assert request.command == "gens"
    assert request.subset == (1,)
    assert request.fmt == "text"

    request = parse(["jacobi", "--rs=A2", "--lambda=-1,1", "--I=all", "--k=1/2"])
    assert request.subset == (0, 1)
    assert request.weight == Weight((-1, 1))
    assert request.k.values == (Fraction(1, 2),)
    assert request.method == "sym"

    request = parse(["mvop", "--rs=A1"])
    assert request.weight == Weight((0,))
    assert request.part == "M"

    request = parse(["verify", "--suite=mvop", "--kset=1,2", "--random=0", "--box=2", "--jobs=0"])
    assert request.kset == (1, 2)
    assert request.box == 2
    assert request.jobs == 1

    request = parse(["verify", "--seed=3"])
    assert request.kset[:4] == DEFAULT_KSET
    assert len(request.kset) == 6
    assert request.kset == parse(["verify", "--seed=3"]).kset
    assert all(0 < k <= 3 for k in request.kset[4:])


def test_parse_errors():
    with pytest.raises(DocoptExit):
        parse(["gens"])
    with pytest.raises(UnsupportedType):
        parse(["jacobi", "--rs=E6", "--lambda=1,0,0,0,0,0"])
    with pytest.raises(MalformedInput):
        parse(["epoly", "--rs=A2", "--lambda=1"])
    with pytest.raises(MalformedInput):
        parse(["epoly", "--rs=A1", "--lambda=1/3"])
    with pytest.raises(MalformedInput):
        parse(["jacobi", "--rs=A1", "--lambda=1", "--method=qr"])
    with pytest.raises(MalformedInput):
        parse(["verify", "--suite=nope"])
    with pytest.raises(InvalidMultiplicity):
        parse(["verify", "--kset=-1"])
    with pytest.raises(InvalidSubset):
        parse(["gens", "--rs=A2", "--I=3"])
    with pytest.raises(NotIDominant):
        parse(["mvop", "--rs=A1", "--sigma=-1"])
    with pytest.raises(MalformedInput):
        parse(["opapply", "--rs=A1", "--lambda=1", "--q=y1"])
    with pytest.raises(MalformedInput):
        parse(["gens", "--rs=A1", "--format=xml"])


def test_gens():
    output, code = run(parse(["gens", "--rs=A2", "--I=2"]))
    lines = output.splitlines()

    assert code == 0
    assert lines[0].split() == ["e", "0", "1"]
    assert lines[1].startswith("s1")
    assert lines[1].endswith("e^(-w2) + e^(-w1+w2)")
    assert lines[2].startswith("s2*s1")

    output, _ = run(parse(["gens", "--rs=A2", "--I=2", "--format=json"]))
    obj = json.loads(output)
    assert [g["v"] for g in obj["generators"]] == ["e", "s1", "s2*s1"]
    assert obj["generators"][2]["label"] == ["-1", "0"]


def test_epoly():
    output, code = run(parse(["epoly", "--rs=A1", "--lambda=-1"]))

    assert code == 0
    assert output.splitlines() == ["1/2 e^(w1) + e^(-w1)", "spectral vector (-2)"]


def test_jacobi():
    output, code = run(parse(["jacobi", "--rs=A1", "--I=1", "--lambda=2"]))

    assert code == 0
    assert output.splitlines() == ["e^(2w1) + 1 + e^(-2w1)", "= 1 m(2w1) + 1 m(0)"]

    output, _ = run(parse(["jacobi", "--rs=A1", "--I=1", "--lambda=2", "--format=json"]))
    obj = json.loads(output)
    assert obj["expansion"] == [
        {"mu": ["2"], "coeff": "1"},
        {"mu": ["0"], "coeff": "1"},
    ]

    with pytest.raises(NotIDominant):
        run(parse(["jacobi", "--rs=A1", "--I=1", "--lambda=-1"]))


def test_opapply():
    output, _ = run(parse(["opapply", "--rs=A1", "--lambda=1", "--q=x1"]))

    assert output.splitlines() == ["e^(w1)", "e^(-w1)"]


def test_opapply_spherical():
    request = parse(["opapply", "--rs=A2", "--lambda=0,0", "--op=D1", "--format=json"])
    output, code = run(request)

    # M₁Γ(1) = −2kΓ(1), and 𝒟₁ differs from T^{-1}M₁T by ⅔
    assert code == 0
    phi = vector_from_json(json.loads(output))
    assert phi.components == (LaurentPoly.constant(phi.rs, Fraction(-8, 3)),) * 3


def test_mvop():
    output, _ = run(parse(["mvop", "--rs=A1", "--part=W"]))
    assert output == "[ 2   x1 ]\n[ x1  2  ]"

    output, _ = run(parse(["mvop", "--rs=A1"]))
    assert output == "[ 1  1/2 x1 ]\n[ 0  1/2    ]"


def test_verify():
    output, code = run(parse(["verify", "--suite=steinberg", "--kset=1", "--random=0", "--box=1"]))

    assert code == 0
    assert output.splitlines()[0] == "k-set: 1"
    assert output.splitlines()[-1] == "9/9 cases passed"


def test_main_exit_codes(monkeypatch, capsys):
    monkeypatch.setattr(sys, "argv", ["pjp", "jacobi", "--rs=A1", "--I=1", "--lambda=-1"])
    with pytest.raises(SystemExit) as e:
        main()
    assert e.value.code == 2
    assert json.loads(capsys.readouterr().err)["error"] == "NotIDominant"

    monkeypatch.setattr(sys, "argv", ["pjp", "vec", "--rs=A1", "--I=1", "--lambda=2"])
    with pytest.raises(SystemExit) as e:
        main()
    assert e.value.code == 0
    assert capsys.readouterr().out == "e^(2w1) + 1 + e^(-2w1)\n"
