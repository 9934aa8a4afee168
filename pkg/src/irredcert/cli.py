"""Command-line front end: polynomial parsing, criterion dispatch, JSON output.

Subcommands: expand, polygon, check (schur, coleman, filaseta, schonemann,
gen-schonemann), oracle (factor, sieve, roots), corpus. All output is JSON
on stdout; slopes and contents are serialized as exact strings, never
floats. Exit codes: 0 a verdict was produced (whatever it is), 1 the
verdict was HypothesisFailed and --strict was requested (or a corpus
expectation failed), 2 parse or usage error, 3 internal error.
"""
from __future__ import annotations

import argparse
import json
import re
import sys

from .criteria import (
    Certificate,
    SchurInput,
    Verdict,
    check_coleman,
    check_filaseta_window,
    check_gen_schonemann,
    check_schonemann,
    check_schur,
    polygon_json,
)
from .intpoly import IntPoly, phi_expand
from .oracle import degree_set_sieve, kronecker_factor, rational_roots
from .polygon import build_polygon, polygon_points


class ParseError(Exception):
    def __init__(self, line: int, column: int, expected: str):
        self.line = line
        self.column = column
        self.expected = expected
        super().__init__(f"line {line}, column {column}: expected {expected}")


class _Parser:
    """Recursive-descent parser for the little polynomial grammar:

    expr   := ('+'|'-')? term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := base ('^' uint)?
    base   := integer | 'x' | '(' expr ')'
    """

    def __init__(self, src: str):
        self.src = src
        self.pos = 0

    def error(self, expected: str):
        line = self.src.count("\n", 0, self.pos) + 1
        last_nl = self.src.rfind("\n", 0, self.pos)
        column = self.pos - last_nl
        raise ParseError(line, column, expected)

    def skip_ws(self):
        while self.pos < len(self.src) and self.src[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.src[self.pos] if self.pos < len(self.src) else ""

    def expr(self) -> IntPoly:
        sign = 1
        if self.peek() in ("+", "-"):
            if self.src[self.pos] == "-":
                sign = -1
            self.pos += 1
        acc = self.term() * sign
        while self.peek() in ("+", "-"):
            op = self.src[self.pos]
            self.pos += 1
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> IntPoly:
        acc = self.factor()
        while self.peek() == "*":
            self.pos += 1
            acc = acc * self.factor()
        return acc

    def factor(self) -> IntPoly:
        base = self.base()
        if self.peek() == "^":
            self.pos += 1
            return base ** self.uint()
        return base

    def base(self) -> IntPoly:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            inner = self.expr()
            if self.peek() != ")":
                self.error("')'")
            self.pos += 1
            return inner
        if ch == "x":
            self.pos += 1
            return IntPoly((0, 1))
        if ch.isdigit():
            return IntPoly((self.uint(),))
        self.error("integer, 'x', or '('")

    def uint(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.src) and self.src[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("unsigned integer")
        return int(self.src[start : self.pos])


def parse_poly(src: str) -> IntPoly:
    parser = _Parser(src)
    poly = parser.expr()
    if parser.peek() != "":
        parser.error("end of input")
    return poly


def _emit(obj: dict) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _extract_indexed_flags(args: list[str]) -> tuple[list[str], dict[int, str]]:
    """Pull --a0, --a1, ... value pairs out of an argument list."""
    rest: list[str] = []
    indexed: dict[int, str] = {}
    i = 0
    while i < len(args):
        m = re.fullmatch(r"--a(\d+)", args[i])
        if m:
            if i + 1 >= len(args):
                raise argparse.ArgumentTypeError(f"{args[i]} needs a value")
            indexed[int(m.group(1))] = args[i + 1]
            i += 2
        else:
            rest.append(args[i])
            i += 1
    return rest, indexed


def _collect_parts(indexed: dict[int, str], count: int, what: str) -> list[IntPoly]:
    missing = [i for i in range(count) if i not in indexed]
    if missing:
        raise argparse.ArgumentTypeError(f"missing --a{missing[0]} for {what}")
    extra = [i for i in indexed if i >= count]
    if extra:
        raise argparse.ArgumentTypeError(f"unexpected --a{extra[0]} for {what}")
    return [parse_poly(indexed[i]) for i in range(count)]


def _run_check(argv: list[str]) -> tuple[dict, Certificate, bool]:
    if not argv:
        raise argparse.ArgumentTypeError(
            "check needs a criterion: schur, coleman, filaseta, "
            "schonemann, gen-schonemann"
        )
    criterion, rest = argv[0], argv[1:]
    rest, indexed = _extract_indexed_flags(rest)
    ap = argparse.ArgumentParser(prog=f"irredcert check {criterion}", allow_abbrev=False)
    ap.add_argument("--strict", action="store_true")
    if criterion == "schur":
        ap.add_argument("--phi", required=True)
        ap.add_argument("--n", type=int, required=True)
        ap.add_argument("--an", required=True)
        ns = ap.parse_args(rest)
        a_parts = _collect_parts(indexed, ns.n, f"n = {ns.n}")
        inp = SchurInput(parse_poly(ns.phi), ns.n, tuple(a_parts), int(ns.an))
        cert = check_schur(inp)
    elif criterion == "coleman":
        ap.add_argument("--phi", required=True)
        ap.add_argument("--n", type=int, required=True)
        ns = ap.parse_args(rest)
        a_parts = _collect_parts(indexed, ns.n, f"n = {ns.n}")
        cert = check_coleman(parse_poly(ns.phi), ns.n, a_parts)
    elif criterion == "filaseta":
        ap.add_argument("--f", required=True)
        ap.add_argument("--phi", required=True)
        ap.add_argument("--prime", type=int, required=True)
        ap.add_argument("--k", type=int, required=True)
        ap.add_argument("--ell", type=int, required=True)
        ns = ap.parse_args(rest)
        f = parse_poly(ns.f)
        phi = parse_poly(ns.phi)
        n = len(phi_expand(f, phi).parts) - 1
        a_parts = _collect_parts(indexed, n + 1, f"expansion top index {n}")
        cert = check_filaseta_window(f, phi, ns.prime, ns.k, ns.ell, a_parts)
    elif criterion in ("schonemann", "gen-schonemann"):
        ap.add_argument("--f", required=True)
        ap.add_argument("--phi", required=True)
        ap.add_argument("--prime", type=int, required=True)
        ns = ap.parse_args(rest)
        checker = check_schonemann if criterion == "schonemann" else check_gen_schonemann
        cert = checker(parse_poly(ns.f), parse_poly(ns.phi), ns.prime)
    else:
        raise argparse.ArgumentTypeError(f"unknown criterion {criterion!r}")
    return cert.to_json_dict(), cert, ns.strict


def _run_oracle(argv: list[str]) -> tuple[dict, str | None]:
    if not argv:
        raise argparse.ArgumentTypeError("oracle needs a mode: factor, sieve, roots")
    mode, rest = argv[0], argv[1:]
    ap = argparse.ArgumentParser(prog=f"irredcert oracle {mode}", allow_abbrev=False)
    ap.add_argument("--f", required=True)
    if mode == "factor":
        ap.add_argument("--cap", type=int, default=8)
        ns = ap.parse_args(rest)
        fac = kronecker_factor(parse_poly(ns.f), cap=ns.cap)
        verdict = "Irreducible" if fac.is_irreducible else "Reducible"
        return fac.to_json_dict(), verdict
    if mode == "sieve":
        ap.add_argument("--budget", type=int, default=10)
        ns = ap.parse_args(rest)
        out = degree_set_sieve(parse_poly(ns.f), prime_budget=ns.budget)
        return out.to_json_dict(), out.verdict.value
    if mode == "roots":
        ns = ap.parse_args(rest)
        roots = rational_roots(parse_poly(ns.f))
        return {"roots": [str(r) for r in roots]}, None
    raise argparse.ArgumentTypeError(f"unknown oracle mode {mode!r}")


def _factors_match(expected: list[dict], got: list[dict]) -> bool:
    def canon(items):
        out = []
        for item in items:
            poly = parse_poly(item["poly"])
            out.append((poly.coeffs, int(item.get("mult", 1))))
        return sorted(out)

    return canon(expected) == canon(got)


def _run_corpus(argv: list[str]) -> int:
    ap = argparse.ArgumentParser(prog="irredcert corpus", allow_abbrev=False)
    ap.add_argument("--file", required=True)
    ns = ap.parse_args(argv)
    with open(ns.file, encoding="utf-8") as fh:
        cases = json.load(fh)
    results = []
    all_ok = True
    for idx, case in enumerate(cases):
        command = case["command"]
        args = list(case.get("args", []))
        if command == "check":
            result, cert, _ = _run_check(args)
            verdict = cert.verdict.value
        elif command == "oracle":
            result, verdict = _run_oracle(args)
        else:
            raise argparse.ArgumentTypeError(
                f"corpus case {idx}: unsupported command {command!r}"
            )
        ok = True
        if "expected_verdict" in case:
            ok = ok and verdict == case["expected_verdict"]
        if "expected_factors" in case:
            ok = ok and _factors_match(case["expected_factors"], result["factors"])
        all_ok = all_ok and ok
        results.append(
            {
                "index": idx,
                "command": command,
                "verdict": verdict,
                "ok": ok,
                "expected": case.get("expected_verdict"),
            }
        )
    _emit({"cases": results, "all_ok": all_ok})
    return 0 if all_ok else 1


def run_command(argv: list[str]) -> int:
    """Dispatch a full command line; prints JSON, returns the exit code."""
    try:
        if not argv:
            print("usage: irredcert {expand,polygon,check,oracle,corpus} ...",
                  file=sys.stderr)
            return 2
        command, rest = argv[0], argv[1:]
        if command == "expand":
            ap = argparse.ArgumentParser(prog="irredcert expand", allow_abbrev=False)
            ap.add_argument("--f", required=True)
            ap.add_argument("--phi", required=True)
            ns = ap.parse_args(rest)
            expansion = phi_expand(parse_poly(ns.f), parse_poly(ns.phi))
            _emit(
                {
                    "phi": str(expansion.phi),
                    "parts": [str(part) for part in expansion.parts],
                }
            )
            return 0
        if command == "polygon":
            ap = argparse.ArgumentParser(prog="irredcert polygon", allow_abbrev=False)
            ap.add_argument("--f", required=True)
            ap.add_argument("--phi", required=True)
            ap.add_argument("--prime", type=int, required=True)
            ns = ap.parse_args(rest)
            np = build_polygon(
                polygon_points(parse_poly(ns.f), parse_poly(ns.phi), ns.prime)
            )
            _emit(polygon_json(np, ns.prime))
            return 0
        if command == "check":
            result, cert, strict = _run_check(rest)
            _emit(result)
            if strict and cert.verdict is Verdict.HYPOTHESIS_FAILED:
                return 1
            return 0
        if command == "oracle":
            result, _ = _run_oracle(rest)
            _emit(result)
            return 0
        if command == "corpus":
            return _run_corpus(rest)
        print(f"unknown command {command!r}", file=sys.stderr)
        return 2
    except (ParseError, argparse.ArgumentTypeError, ValueError, TypeError,
            OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:
        # argparse reports its own usage errors and exits with 2
        return 2 if exc.code else 0
    except Exception as exc:  # pragma: no cover - internal errors
        print(f"internal error: {exc}", file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
