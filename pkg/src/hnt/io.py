"""Text formats for codes (``.hc``) and groups (``.hg``).

Code file: first line ``m q``, then one vertex per line as space-separated
0-based symbols.  Group file: first line ``m q``, then one generator per line
as ``m`` alphabet permutations in image notation separated by ``;``, a ``|``,
and the entry permutation.  Lines starting with ``#`` are comments.
"""

from __future__ import annotations

from pathlib import Path

from hnt.errors import ParameterError
from hnt.groups import AutElem, GroupGens
from hnt.hamming import Code, GraphParams


def _lines(text: str):
    for n, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if line and not line.startswith("#"):
            yield n, line


def _header(lines) -> GraphParams:
    try:
        n, line = next(lines)
    except StopIteration:
        raise ParameterError("empty file: expected a header line 'm q'") from None
    parts = line.split()
    if len(parts) != 2:
        raise ParameterError(f"line {n}: expected 'm q', got {line!r}")
    return GraphParams(int(parts[0]), int(parts[1]))


def parse_code(text: str) -> Code:
    lines = _lines(text)
    params = _header(lines)
    words = []
    seen = set()
    for n, line in lines:
        try:
            w = params.check(int(a) for a in line.split())
        except (ValueError, ParameterError) as exc:
            raise ParameterError(f"line {n}: {exc}") from None
        if w in seen:
            raise ParameterError(f"line {n}: duplicate vertex {line!r}")
        seen.add(w)
        words.append(w)
    return Code(params, frozenset(words))


def format_code(code: Code) -> str:
    lines = [f"{code.m} {code.q}"]
    lines += [" ".join(map(str, w)) for w in code.sorted_words]
    return "\n".join(lines) + "\n"


def parse_group(text: str) -> GroupGens:
    lines = _lines(text)
    params = _header(lines)
    gens = []
    for n, line in lines:
        try:
            base_txt, top_txt = line.split("|")
            base = [[int(a) for a in h.split()] for h in base_txt.split(";")]
            top = [int(a) for a in top_txt.split()]
            x = AutElem.make(base, top)
        except ValueError as exc:
            raise ParameterError(f"line {n}: {exc}") from None
        if x.m != params.m or x.q != params.q:
            raise ParameterError(f"line {n}: generator does not act on H({params.m},{params.q})")
        gens.append(x)
    return GroupGens(params, tuple(gens))


def format_group(X: GroupGens) -> str:
    lines = [f"{X.params.m} {X.params.q}"]
    for g in X.gens:
        base = "; ".join(" ".join(map(str, h)) for h in g.base)
        lines.append(f"{base} | {' '.join(map(str, g.top))}")
    return "\n".join(lines) + "\n"


def read_code(path) -> Code:
    return parse_code(Path(path).read_text(encoding="utf-8"))


def write_code(code: Code, path) -> None:
    Path(path).write_text(format_code(code), encoding="utf-8")


def read_group(path) -> GroupGens:
    return parse_group(Path(path).read_text(encoding="utf-8"))


def write_group(X: GroupGens, path) -> None:
    Path(path).write_text(format_group(X), encoding="utf-8")
