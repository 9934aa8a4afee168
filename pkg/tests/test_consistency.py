"""Cross-validation of certifiers against the independent oracle.

For every corpus instance where a criterion says Irreducible: if the
degree is within Kronecker's reach the factorization must be trivial; up
to degree 24 the sieve must not contradict (it cannot, by construction,
but its verdict is recorded and a ProvenIrreducible is a genuine
independent confirmation).
"""
import json
import os

from irredcert.cli import _run_check, parse_poly
from irredcert.criteria import SchurInput, Verdict, truncated_exp_poly
from irredcert.intpoly import IntPoly
from irredcert.oracle import SieveVerdict, degree_set_sieve, kronecker_factor

CORPUS = os.path.join(os.path.dirname(__file__), "..", "corpus", "paper_cases.json")

ONE = IntPoly((1,))


def _flag(args, name):
    return args[args.index(name) + 1]


def _indexed(args, n):
    return [parse_poly(_flag(args, f"--a{i}")) for i in range(n)]


def _subject_polynomial(case):
    criterion, args = case["args"][0], case["args"][1:]
    if criterion == "schur":
        n = int(_flag(args, "--n"))
        inp = SchurInput(
            parse_poly(_flag(args, "--phi")),
            n,
            tuple(_indexed(args, n)),
            int(_flag(args, "--an")),
        )
        return inp.polynomial()
    if criterion == "coleman":
        n = int(_flag(args, "--n"))
        return truncated_exp_poly(
            parse_poly(_flag(args, "--phi")), n, _indexed(args, n) + [ONE]
        )
    return parse_poly(_flag(args, "--f"))


def test_no_certified_polynomial_factors():
    with open(CORPUS, encoding="utf-8") as fh:
        cases = json.load(fh)
    confirmed = 0
    for case in cases:
        if case["command"] != "check":
            continue
        _, cert, _ = _run_check(case["args"])
        if cert.verdict is not Verdict.IRREDUCIBLE:
            continue
        f = _subject_polynomial(case)
        if f.degree <= 8:
            assert kronecker_factor(f).is_irreducible, str(f)
            confirmed += 1
        if f.degree <= 24:
            outcome = degree_set_sieve(f)
            assert outcome.verdict in (
                SieveVerdict.PROVEN_IRREDUCIBLE,
                SieveVerdict.INCONCLUSIVE,
            )
            if outcome.verdict is SieveVerdict.PROVEN_IRREDUCIBLE:
                confirmed += 1
    assert confirmed >= 8


def test_failed_hypotheses_do_not_mean_reducible():
    # the spec p=3 instance is inapplicable for the criterion yet irreducible
    f = parse_poly("(x^2+x+1)^2 + 3*(x+1)")
    assert kronecker_factor(f).is_irreducible
