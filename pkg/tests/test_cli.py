import json

import pytest

from flagadd import SimpleType, SpecError, format_spec, parse_spec
from flagadd.cli import EXIT_ADMITS, EXIT_FAILS, EXIT_USAGE, main

GOLDEN_DECIDE_G2 = """\
{
  "spec": "G2[1]",
  "admits": true,
  "dimension": 5,
  "components": [
    {
      "family": "G",
      "rank": 2,
      "marking": [
        1
      ],
      "commutative": false,
      "exceptional": {
        "family": "B",
        "rank": 3,
        "marking": [
          1
        ],
        "label": "SO(7)"
      },
      "dimension": 5
    }
  ]
}
"""

GOLDEN_DECIDE_E8 = """\
{
  "spec": "E8[1]",
  "admits": false,
  "dimension": 78,
  "components": [
    {
      "family": "E",
      "rank": 8,
      "marking": [
        1
      ],
      "commutative": false,
      "exceptional": null,
      "dimension": 78
    }
  ]
}
"""

GOLDEN_EXPLAIN_A2 = """\
spec: A2[1]
type: A2 (PSL(3))
marking: {1}
positive roots: 3
highest root: (1,1), degree 1
grading of positive roots by degree:
  0: 1 root: (0,1)
  1: 2 roots: (1,0), (1,1)
flag dimension (nilradical size): 2
criteria:
  degree of highest root <= 1: yes
  no two nilradical roots sum to a root: yes
  fundamental weight 1 minuscule in dual A2: yes
exceptional pair: none
verdict: admits (commutative unipotent radical)
"""


def test_parse_simple():
    assert parse_spec("C3[3]") == [(SimpleType("C", 3), frozenset({3}))]


def test_parse_product_with_whitespace_and_case():
    got = parse_spec("  a3 [ 1 , 3 ] X g2[1] ")
    assert got == [
        (SimpleType("A", 3), frozenset({1, 3})),
        (SimpleType("G", 2), frozenset({1})),
    ]


def test_parse_empty_marking():
    assert parse_spec("B4[]") == [(SimpleType("B", 4), frozenset())]


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("", "component"),
        ("H3[1]", "unknown family"),
        ("A[1]", "rank"),
        ("A3", "expected '['"),
        ("A3[0]", "out of range"),
        ("A3[4]", "out of range"),
        ("A3[1,1]", "duplicate"),
        ("A3[1 2]", "',' or ']'"),
        ("A3[1] G2[1]", "expected 'x'"),
        ("D2[1]", "A1 x A1"),
        ("B1[1]", "A1"),
    ],
)
def test_parse_errors_carry_offsets(text, fragment):
    with pytest.raises(SpecError) as err:
        parse_spec(text)
    assert fragment in str(err.value)
    assert 0 <= err.value.offset <= len(text)


def test_round_trip():
    for text in ("C3[3]", "A3[1,3] x G2[1]", "B4[]", "a2[2,1]x e6[6]"):
        comps = parse_spec(text)
        assert parse_spec(format_spec(comps)) == comps


def test_decide_golden_g2(capsys):
    code = main(["decide", "G2[1]", "--format", "json"])
    assert code == EXIT_ADMITS
    assert capsys.readouterr().out == GOLDEN_DECIDE_G2


def test_decide_golden_e8(capsys):
    code = main(["decide", "E8[1]", "--format", "json"])
    assert code == EXIT_FAILS
    assert capsys.readouterr().out == GOLDEN_DECIDE_E8


def test_explain_golden_a2(capsys):
    code = main(["explain", "A2[1]"])
    assert code == EXIT_ADMITS
    assert capsys.readouterr().out == GOLDEN_EXPLAIN_A2


def test_output_is_byte_stable_across_runs(capsys):
    main(["decide", "A2[1] x C3[3]", "--format", "json"])
    first = capsys.readouterr().out
    main(["decide", "A2[1] x C3[3]", "--format", "json"])
    assert capsys.readouterr().out == first
    main(["enumerate", "--max-rank", "4", "--format", "json"])
    table = capsys.readouterr().out
    main(["enumerate", "--max-rank", "4", "--format", "json"])
    assert capsys.readouterr().out == table


def test_decide_product_dimension_sums(capsys):
    # dim A2/P1 = 1*(3-1) = 2; dim C3/P3 is the Lagrangian Grassmannian,
    # r(r+1)/2 = 6 (equivalently 9 positive roots minus the 3 of the A2 Levi)
    code = main(["decide", "A2[1] x C3[3]", "--format", "json"])
    assert code == EXIT_ADMITS
    payload = json.loads(capsys.readouterr().out)
    assert payload["admits"] is True
    assert payload["dimension"] == 8
    assert [c["dimension"] for c in payload["components"]] == [2, 6]


def test_exit_codes_on_bad_input(capsys):
    assert main(["decide", "D2[1]"]) == EXIT_USAGE
    assert main(["decide", "A3[9]"]) == EXIT_USAGE
    assert main(["decide", "A3[1] y B2[1]"]) == EXIT_USAGE
    assert main(["nonsense"]) == EXIT_USAGE
    assert main(["enumerate", "--max-rank", "1"]) == EXIT_USAGE
    assert main(["enumerate", "--max-rank", "3", "--commutative", "--admits"]) == EXIT_USAGE
    assert main(["explain", "A2[1] x A3[1]"]) == EXIT_USAGE
    capsys.readouterr()


def test_enumerate_filters(capsys):
    code = main(["enumerate", "--max-rank", "3", "--exceptional", "--format", "json"])
    assert code == 0
    rows = json.loads(capsys.readouterr().out)["rows"]
    assert {(r["family"], r["rank"], r["index"]) for r in rows} == {
        ("B", 2, 2),
        ("B", 3, 3),
        ("C", 2, 1),
        ("C", 3, 1),
        ("G", 2, 1),
    }
    assert all(r["admits"] and not r["commutative"] for r in rows)


def test_enumerate_text_has_coverings(capsys):
    main(["enumerate", "--max-rank", "2", "--admits"])
    out = capsys.readouterr().out
    assert "G2[1]" in out and "SO(7) = B3[1]" in out


def test_explain_empty_marking(capsys):
    code = main(["explain", "B2[]"])
    assert code == EXIT_ADMITS
    out = capsys.readouterr().out
    assert "flag dimension (nilradical size): 0" in out
    assert "verdict: admits (commutative unipotent radical)" in out


def test_malformed_input_never_raises(capsys):
    import random

    rng = random.Random(64)
    alphabet = "ABGXabgx0123456789[],x ⊕-"
    for _ in range(300):
        text = "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 12)))
        code = main(["decide", text])
        assert code in (EXIT_ADMITS, EXIT_FAILS, EXIT_USAGE)
    capsys.readouterr()


def test_dump_constants_cli(capsys):
    assert main(["dump-constants", "A2"]) == 0
    first = capsys.readouterr().out
    lines = first.strip().splitlines()
    assert len(lines) == 12
    assert main(["dump-constants", "a2"]) == 0
    assert capsys.readouterr().out == first
    assert main(["dump-constants", "Q9"]) == EXIT_USAGE
    capsys.readouterr()
