"""Line-oriented text formats: .grp groups, .sigma partitions, manifests.

All formats are UTF-8, comments run from ``#`` to end of line, and points
in cycle notation are 1-based.  Emission is canonical so parse/emit round
trips are byte-stable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadPermutation, OverlappingBlocks, ParseError
from .group import DEFAULT_MAX_ORDER, Group, group_from_generators
from .perm import Permutation
from .sigma import REST_ONE_BLOCK, REST_SINGLETONS, SigmaPartition, is_prime


def _logical_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _parse_cycles(body: str, degree: int, lineno: int) -> list[tuple[int, ...]]:
    cycles: list[tuple[int, ...]] = []
    pos = 0
    n = len(body)
    while pos < n:
        ch = body[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch != "(":
            raise ParseError(f"expected '(' in cycle list, found {ch!r}", lineno, pos + 1)
        close = body.find(")", pos)
        if close == -1:
            raise ParseError("unclosed cycle", lineno, pos + 1)
        inner = body[pos + 1 : close].split()
        points = []
        for tok in inner:
            if not tok.isdigit():
                raise ParseError(f"bad point {tok!r}", lineno, pos + 1)
            value = int(tok)
            if not 1 <= value <= degree:
                raise ParseError(f"point {value} outside 1..{degree}", lineno, pos + 1)
            points.append(value - 1)
        if points:
            cycles.append(tuple(points))
        pos = close + 1
    return cycles


def parse_group_file(text: str, max_order: int = DEFAULT_MAX_ORDER) -> Group:
    """Parse a .grp description and materialize the generated group."""
    name = None
    degree = None
    gens: list[Permutation] = []
    for lineno, line in _logical_lines(text):
        keyword, _, body = line.partition(" ")
        body = body.strip()
        if keyword == "name":
            if name is not None:
                raise ParseError("duplicate name line", lineno)
            if not body:
                raise ParseError("name line needs a value", lineno)
            name = body
        elif keyword == "degree":
            if degree is not None:
                raise ParseError("duplicate degree line", lineno)
            if not body.isdigit() or int(body) < 1:
                raise ParseError("degree must be a positive integer", lineno)
            degree = int(body)
        elif keyword == "gen":
            if degree is None:
                raise ParseError("degree must come before gen lines", lineno)
            cycles = _parse_cycles(body, degree, lineno)
            try:
                gens.append(Permutation.from_cycles(degree, cycles))
            except BadPermutation as exc:
                raise ParseError(str(exc), lineno) from exc
        else:
            raise ParseError(f"unknown keyword {keyword!r}", lineno)
    if degree is None:
        raise ParseError("missing degree line")
    return group_from_generators(degree, gens, max_order=max_order, name=name)


def emit_group_file(G: Group) -> str:
    """Canonical .grp text: name, degree, then non-identity generators."""
    lines = []
    if G.name:
        lines.append(f"name {G.name}")
    lines.append(f"degree {G.degree}")
    gen_lines = [f"gen {g.cycle_string()}" for g in G.generators if not g.is_identity()]
    lines.extend(gen_lines if gen_lines else ["gen ()"])
    return "\n".join(lines) + "\n"


def parse_sigma_file(text: str) -> SigmaPartition:
    """Parse a .sigma description: block lines plus exactly one rest line."""
    blocks: list[tuple[int, ...]] = []
    rest = None
    claimed: dict[int, int] = {}
    for lineno, line in _logical_lines(text):
        keyword, _, body = line.partition(" ")
        body = body.strip()
        if keyword == "block":
            primes = []
            for tok in body.split():
                if not tok.isdigit():
                    raise ParseError(f"bad prime {tok!r}", lineno)
                p = int(tok)
                if not is_prime(p):
                    raise ParseError(f"{p} is not a prime", lineno)
                if p in primes:
                    raise ParseError(f"prime {p} repeated in block", lineno)
                primes.append(p)
            if not primes:
                raise ParseError("empty block line", lineno)
            for p in primes:
                if p in claimed:
                    raise OverlappingBlocks(
                        f"prime {p} already in the block on line {claimed[p]}", lineno
                    )
                claimed[p] = lineno
            blocks.append(tuple(sorted(primes)))
        elif keyword == "rest":
            if rest is not None:
                raise ParseError("duplicate rest line", lineno)
            if body == "singletons":
                rest = REST_SINGLETONS
            elif body == "one-block":
                rest = REST_ONE_BLOCK
            else:
                raise ParseError("rest must be 'singletons' or 'one-block'", lineno)
        else:
            raise ParseError(f"unknown keyword {keyword!r}", lineno)
    if rest is None:
        raise ParseError("missing rest line")
    return SigmaPartition(tuple(blocks), rest)


def emit_sigma_file(sigma: SigmaPartition) -> str:
    lines = [f"block {' '.join(str(p) for p in block)}" for block in sigma.blocks]
    lines.append("rest " + ("singletons" if sigma.rest_policy == REST_SINGLETONS else "one-block"))
    return "\n".join(lines) + "\n"


# -- manifests ----------------------------------------------------------------


@dataclass(frozen=True)
class ManifestCheck:
    group_ref: str
    sigma_ref: str
    predicate: str
    expect: bool | None  # None means compute-and-record
    provenance: str


@dataclass(frozen=True)
class VerificationManifest:
    checks: tuple[ManifestCheck, ...]

    def pairs(self) -> list[tuple[str, str]]:
        out = []
        for c in self.checks:
            pair = (c.group_ref, c.sigma_ref)
            if pair not in out:
                out.append(pair)
        return out


def parse_manifest(text: str) -> VerificationManifest:
    checks = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line, _, comment = raw.partition("#")
        line = line.strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 6 or parts[0] != "check" or parts[4] != "expect":
            raise ParseError(
                "expected 'check <group> <sigma> <predicate> expect <true|false|record>'",
                lineno,
            )
        value = parts[5].lower()
        if value == "true":
            expect = True
        elif value == "false":
            expect = False
        elif value == "record":
            expect = None
        else:
            raise ParseError(f"bad expect value {parts[5]!r}", lineno)
        checks.append(
            ManifestCheck(
                group_ref=parts[1],
                sigma_ref=parts[2],
                predicate=parts[3],
                expect=expect,
                provenance=comment.strip(),
            )
        )
    return VerificationManifest(tuple(checks))


def emit_manifest(manifest: VerificationManifest) -> str:
    lines = []
    for c in manifest.checks:
        value = "record" if c.expect is None else ("true" if c.expect else "false")
        line = f"check {c.group_ref} {c.sigma_ref} {c.predicate} expect {value}"
        if c.provenance:
            line += f"  # {c.provenance}"
        lines.append(line)
    return "\n".join(lines) + "\n"
