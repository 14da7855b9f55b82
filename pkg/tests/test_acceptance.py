"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` to see the per-criterion
lines.  Every expected value here is pinned; nothing is tuned at runtime.
"""

import json
import time

from sigmagroups.catalog import (
    BUILTIN_MANIFEST,
    CORPUS_SIGMAS,
    SIGMA_CONFIGS,
    built_group,
    built_lattice,
)
from sigmagroups.cli import main
from sigmagroups.embeddings import psigmat_transitive_in
from sigmagroups.formats import parse_manifest
from sigmagroups.structure import check_theorem_A, corollary_closure_check
from sigmagroups.suites import (
    Caps,
    builtin_pairs,
    eval_predicate,
    oracle_equivalence_issues,
    resolve_pair,
    run_suite,
)

CAPS = Caps(max_order=1000, max_subgroups=20000)

REQUIRED_GROUPS = ("c6", "s3", "d4", "q8", "a4", "s4", "f21", "sl23", "g168")


def _report(criterion: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    suffix = f"  ({detail})" if detail else ""
    print(f"ACCEPTANCE {criterion}: {status}{suffix}")
    assert ok, f"{criterion}: {detail}"


def _contexts():
    return [resolve_pair(spec, CAPS) for spec in builtin_pairs()]


def test_criterion_1_order_168_pins():
    started = time.monotonic()
    G, L = built_group("g168"), built_lattice("g168")
    with_pairing = psigmat_transitive_in(L, SIGMA_CONFIGS["p23"], L.top_id)[0]
    classical = psigmat_transitive_in(L, SIGMA_CONFIGS["s0"], L.top_id)[0]
    elapsed = time.monotonic() - started
    ok = G.order == 168 and with_pairing and not classical and elapsed < 300
    _report(
        "1 (order-168 pins)",
        ok,
        f"pairing-transitive={with_pairing} classical-transitive={classical} {elapsed:.1f}s",
    )


def test_criterion_2_theorem_a_equivalence():
    started = time.monotonic()
    pairs = builtin_pairs()
    assert len(pairs) >= 30
    groups = {p.group_label for p in pairs}
    assert set(REQUIRED_GROUPS) <= groups
    assert set(CORPUS_SIGMAS) == {"s0", "p23", "p23-split"}
    disagreements = []
    soluble_pairs = 0
    for ctx in _contexts():
        assert ctx.group.order <= 200
        rep = check_theorem_A(ctx.group, ctx.lattice, ctx.sigma)
        if rep.is_sigma_soluble:
            soluble_pairs += 1
            if rep.psigmat_bruteforce != rep.conditions_hold:
                disagreements.append(ctx.spec.label)
        elif not rep.equivalence_holds:
            disagreements.append(ctx.spec.label)
    elapsed = time.monotonic() - started
    ok = not disagreements and elapsed < 1800
    _report(
        "2 (split characterization)",
        ok,
        f"{len(pairs)} pairs, {soluble_pairs} soluble, "
        f"disagreements={disagreements} {elapsed:.1f}s",
    )


def test_criterion_3_theorem_b_suite():
    doc = run_suite("theorem-b", builtin_pairs(), CAPS)
    _report(
        "3 (factorization hypotheses)",
        doc["ok"] and doc["checked"] > 0,
        f"{doc['checked']} candidate subgroups, violations={len(doc['violations'])}",
    )


def test_criterion_4_section4_equivalences():
    counts = {}
    for suite in ("t41", "t43", "t46"):
        doc = run_suite(suite, builtin_pairs(), CAPS)
        counts[suite] = (doc["checked"], len(doc["violations"]))
    ok = all(v == 0 and n > 0 for n, v in counts.values())
    _report("4 (section-4 equivalences)", ok, str(counts))


def test_criterion_5_lemma_suite():
    doc = run_suite("lemmas", builtin_pairs(), CAPS, seed=0)
    counts = doc["lemma_counts"]
    short = {k: v for k, v in counts.items() if v < 200}
    ok = doc["ok"] and len(counts) == 17 and not short
    _report(
        "5 (lemma instances)",
        ok,
        f"parts={len(counts)} min={min(counts.values())} "
        f"violations={len(doc['violations'])}",
    )


def test_criterion_6_oracle_equivalences():
    issues = []
    for ctx in _contexts():
        issues.extend(f"{ctx.spec.label}: {msg}" for msg in oracle_equivalence_issues(ctx))
    _report("6 (oracle equivalences)", not issues, f"issues={issues[:3]}")


def test_criterion_7_corollary_pins():
    doc = run_suite("corollaries", builtin_pairs(), CAPS)
    closure_pins = []
    for gname, sname in (("f21", "s0"), ("g168", "p23")):
        G, L = built_group(gname), built_lattice(gname)
        ok, _ = corollary_closure_check(G, L, SIGMA_CONFIGS[sname])
        closure_pins.append(ok)
    manifest = parse_manifest(BUILTIN_MANIFEST)
    pin_fails = []
    by_label = {p.label: p for p in builtin_pairs()}
    for check in manifest.checks:
        ctx = resolve_pair(by_label[f"{check.group_ref}:{check.sigma_ref}"], CAPS)
        value = eval_predicate(check.predicate, ctx)
        if check.expect is not None and value != check.expect:
            pin_fails.append(f"{check.group_ref}:{check.sigma_ref}:{check.predicate}")
    ok = doc["ok"] and all(closure_pins) and not pin_fails
    _report(
        "7 (corollary pins)",
        ok,
        f"suite-violations={len(doc['violations'])} closure={closure_pins} pins={pin_fails}",
    )


def test_criterion_8_determinism(capsys):
    argv = ["verify", "lemmas", "--builtin", "--seed", "3", "--json"]
    code1 = main(list(argv))
    first = capsys.readouterr().out
    code2 = main(list(argv))
    second = capsys.readouterr().out
    ok = code1 == code2 == 0 and first == second and json.loads(first)["ok"]
    with capsys.disabled():
        _report("8 (byte-identical reruns)", ok, f"{len(first)} bytes")
