"""Verification suites over a corpus of (group, partition) pairs.

Each suite turns the corpus into an ordered list of tasks, evaluates them
(serially or across processes), and aggregates per-task records, instance
counts and violations into one deterministic summary document.  Sampled
suites draw every instance from a string-seeded RNG per (seed, task), so
identical flags reproduce identical output bytes.
"""

from __future__ import annotations

import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cache
from pathlib import Path

from . import catalog
from .errors import ParseError
from .formats import ManifestCheck, parse_group_file, parse_manifest, parse_sigma_file
from .group import Group, Subgroup, product_members
from .lattice import SubgroupLattice, all_subgroups, frattini
from .sigma import (
    SigmaPartition,
    block_coresidual_id,
    block_radical_id,
    has_normal_halls,
    is_D_block_rel,
    is_sigma_full_sylow_type,
    is_sigma_nilpotent,
    is_sigma_primary,
    is_sigma_soluble,
    part_for_block,
    sigma_nilpotent_by_decomposition,
    sigma_of,
    sorted_blocks,
)
from .embeddings import (
    STRICT,
    WITNESS,
    hall_factorization_check,
    is_hypercentrally_embedded,
    is_sigma_modular_everywhere,
    iterated_centre,
    permutability_in,
    psigmat_transitive_in,
    satisfies_Y,
    sigma_hypercentre,
    subnormal_chain_in,
    subnormal_ids_in,
)
from .structure import (
    check_theorem_A,
    check_theorem_B,
    corollary_closure_check,
    induces_power_automorphisms,
    is_sigma_hall_subgroup,
    residual_id,
)
from .report import describe_subgroup

SUITES = ("theorem-a", "theorem-b", "t41", "t43", "t46", "lemmas", "corollaries")
SEARCH_PREDICATES = ("psigmat", "pst", "sigma-nilpotent", "sigma-soluble", "sigma-full", "sigma-primary")
DEFAULT_SECTION4_MAX_ORDER = 100
LEMMA_BUDGET = 8


@dataclass(frozen=True)
class PairSpec:
    """Resolvable reference to one corpus pair; plain data, safe to pickle."""

    group_label: str
    sigma_label: str
    group_source: tuple[str, str]  # ("catalog", name) | ("file", path)
    sigma_source: tuple[str, str]

    @property
    def label(self) -> str:
        return f"{self.group_label}:{self.sigma_label}"


@dataclass(frozen=True)
class Caps:
    max_order: int
    max_subgroups: int
    mode: str = STRICT
    section4_max_order: int = DEFAULT_SECTION4_MAX_ORDER


@cache
def _file_group(path: str, max_order: int) -> Group:
    return parse_group_file(Path(path).read_text(encoding="utf-8"), max_order=max_order)


@cache
def _file_lattice(path: str, max_order: int, max_subgroups: int) -> SubgroupLattice:
    return all_subgroups(_file_group(path, max_order), max_subgroups)


@cache
def _file_sigma(path: str) -> SigmaPartition:
    return parse_sigma_file(Path(path).read_text(encoding="utf-8"))


@dataclass(frozen=True)
class PairCtx:
    spec: PairSpec
    group: Group
    lattice: SubgroupLattice
    sigma: SigmaPartition


def resolve_pair(spec: PairSpec, caps: Caps) -> PairCtx:
    kind, ref = spec.group_source
    if kind == "catalog":
        G = catalog.built_group(ref)
        L = catalog.built_lattice(ref, caps.max_subgroups)
    else:
        G = _file_group(ref, caps.max_order)
        L = _file_lattice(ref, caps.max_order, caps.max_subgroups)
    skind, sref = spec.sigma_source
    sigma = catalog.SIGMA_CONFIGS[sref] if skind == "catalog" else _file_sigma(sref)
    return PairCtx(spec, G, L, sigma)


# -- corpus loading --------------------------------------------------------------


def builtin_pairs(only: tuple[str, ...] | None = None) -> list[PairSpec]:
    out = []
    for gname, sname in catalog.BUILTIN_CORPUS:
        if only and gname not in only:
            continue
        out.append(PairSpec(gname, sname, ("catalog", gname), ("catalog", sname)))
    return out


def corpus_dir_pairs(
    directory: str, only: tuple[str, ...] | None = None
) -> tuple[list[PairSpec], list[ManifestCheck]]:
    """Pairs from a corpus directory.

    With manifests present, the manifest lines define the pair list and any
    expectations; otherwise every .grp is crossed with every .sigma.
    """
    root = Path(directory)
    if not root.is_dir():
        raise ParseError(f"corpus directory {directory!r} does not exist")
    grp_files = sorted(root.glob("*.grp"))
    sigma_files = sorted(root.glob("*.sigma"))
    manifests = sorted(root.glob("*.manifest"))

    def group_source(ref: str) -> tuple[str, tuple[str, str]]:
        path = root / f"{ref}.grp"
        if path.is_file():
            return ref, ("file", str(path))
        if ref in catalog.CATALOG:
            return ref, ("catalog", ref)
        raise ParseError(f"unknown group reference {ref!r}")

    def sigma_source(ref: str) -> tuple[str, tuple[str, str]]:
        path = root / f"{ref}.sigma"
        if path.is_file():
            return ref, ("file", str(path))
        if ref in catalog.SIGMA_CONFIGS:
            return ref, ("catalog", ref)
        raise ParseError(f"unknown partition reference {ref!r}")

    checks: list[ManifestCheck] = []
    pairs: list[PairSpec] = []
    seen = set()
    if manifests:
        for mf in manifests:
            checks.extend(parse_manifest(mf.read_text(encoding="utf-8")).checks)
        for c in checks:
            glabel, gsrc = group_source(c.group_ref)
            slabel, ssrc = sigma_source(c.sigma_ref)
            spec = PairSpec(glabel, slabel, gsrc, ssrc)
            if spec not in seen:
                seen.add(spec)
                pairs.append(spec)
    else:
        for g in grp_files:
            for s in sigma_files:
                pairs.append(PairSpec(g.stem, s.stem, ("file", str(g)), ("file", str(s))))
    if only:
        pairs = [p for p in pairs if p.group_label in only]
        checks = [c for c in checks if c.group_ref in only]
    if not pairs:
        raise ParseError(f"corpus {directory!r} contains no (group, partition) pairs")
    return pairs, checks


# -- predicate evaluation -----------------------------------------------------------


def eval_predicate(name: str, ctx: PairCtx, mode: str = STRICT) -> bool:
    G, L, sigma = ctx.group, ctx.lattice, ctx.sigma
    if name == "psigmat":
        return psigmat_transitive_in(L, sigma, L.top_id, mode)[0]
    if name == "pst":
        return psigmat_transitive_in(L, SigmaPartition.singletons(), L.top_id, mode)[0]
    if name == "sigma-nilpotent":
        return is_sigma_nilpotent(G, L, sigma)
    if name == "sigma-soluble":
        return is_sigma_soluble(G, L, sigma)
    if name == "sigma-full":
        return is_sigma_full_sylow_type(G, L, sigma)
    if name == "sigma-primary":
        return is_sigma_primary(G, sigma)
    raise ParseError(f"unknown predicate {name!r}")


def parse_search_expression(expr: str) -> list[tuple[str, bool]]:
    """``[not] pred (and [not] pred)*`` -> list of (predicate, negated)."""
    tokens = expr.split()
    terms: list[tuple[str, bool]] = []
    idx = 0
    while idx < len(tokens):
        if terms:
            if tokens[idx] != "and":
                raise ParseError(f"expected 'and', found {tokens[idx]!r}")
            idx += 1
        negated = False
        if idx < len(tokens) and tokens[idx] == "not":
            negated = True
            idx += 1
        if idx >= len(tokens):
            raise ParseError("dangling expression")
        pred = tokens[idx]
        if pred not in SEARCH_PREDICATES:
            raise ParseError(f"unknown predicate {pred!r} (expected one of {SEARCH_PREDICATES})")
        terms.append((pred, negated))
        idx += 1
    if not terms:
        raise ParseError("empty search expression")
    return terms


# -- task framework -------------------------------------------------------------------


def _rng_for(seed: int, *parts) -> random.Random:
    return random.Random(":".join([str(seed)] + [str(p) for p in parts]))


def _subgroup_str(S: Subgroup) -> str:
    doc = describe_subgroup(S)
    return f"order {doc['order']} = <{', '.join(doc['generators'])}>"


def _violation(task: str, pair: str, detail: str) -> dict:
    return {"task": task, "pair": pair, "detail": detail}


def run_task(kind: str, spec: PairSpec, caps: Caps, seed: int) -> dict:
    """Evaluate one suite task for one pair; returns a plain-data record."""
    ctx = resolve_pair(spec, caps)
    return TASK_FUNCS[kind](ctx, caps, seed)


def _task_payload(kind: str, spec: PairSpec, caps: Caps, seed: int):
    return (kind, spec, caps, seed)


def _run_payload(payload) -> dict:
    return run_task(*payload)


def _execute(tasks, jobs: int) -> list[dict]:
    if jobs <= 1 or len(tasks) <= 1:
        return [_run_payload(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_payload, tasks))


# -- individual suite tasks --------------------------------------------------------


def _record(ctx: PairCtx, task: str, checked: int, violations: list[dict], **extra) -> dict:
    rec = {"task": task, "pair": ctx.spec.label, "checked": checked, "violations": violations}
    rec.update(extra)
    return rec


def _task_theorem_a(ctx: PairCtx, caps: Caps, seed: int) -> dict:
    rep = check_theorem_A(ctx.group, ctx.lattice, ctx.sigma)
    violations = []
    if not rep.equivalence_holds:
        violations.append(
            _violation(
                "theorem-a",
                ctx.spec.label,
                f"soluble={rep.is_sigma_soluble} transitive={rep.psigmat_bruteforce} "
                f"conditions={rep.conditions_hold}",
            )
        )
    return _record(
        ctx,
        "theorem-a",
        1,
        violations,
        sigma_soluble=rep.is_sigma_soluble,
        psigmat=rep.psigmat_bruteforce,
        conditions=rep.conditions_hold,
        residual_order=rep.residual.order,
    )


def _task_theorem_b(ctx: PairCtx, caps: Caps, seed: int) -> dict:
    G, L, sigma = ctx.group, ctx.lattice, ctx.sigma
    checked = 0
    violations = []
    for n in L.normal_ids():
        D = L.subgroup(n)
        if is_sigma_hall_subgroup(G, sigma, D) is None:
            continue
        rep = check_theorem_B(G, L, sigma, D)
        checked += 1
        if rep.hypotheses_hold and not rep.conclusion_holds:
            violations.append(
                _violation(
                    "theorem-b", ctx.spec.label, f"hypotheses hold for D {_subgroup_str(D)}"
                )
            )
    return _record(ctx, "theorem-b", checked, violations)


def _t41_equiv(ctx: PairCtx) -> tuple[bool, bool, str]:
    G, L, sigma = ctx.group, ctx.lattice, ctx.sigma
    psig = psigmat_transitive_in(L, sigma, L.top_id)[0]
    embedded = True
    detail = ""
    for a in subnormal_ids_in(L, sigma, L.top_id):
        if not is_hypercentrally_embedded(G, L, sigma, L.subgroup(a)):
            embedded = False
            detail = f"subnormal {_subgroup_str(L.subgroup(a))} not hypercentrally embedded"
            break
    return psig, embedded, detail


def _t43_equiv(ctx: PairCtx) -> tuple[bool, bool, str]:
    G, L, sigma = ctx.group, ctx.lattice, ctx.sigma
    psig = psigmat_transitive_in(L, sigma, L.top_id)[0]
    holds = True
    detail = ""
    for bid in sorted_blocks(sigma, G.order):
        ok, pair = satisfies_Y(G, L, sigma, bid)
        if not ok:
            holds = False
            detail = (
                f"block {sigma.describe_block(bid)}: {_subgroup_str(pair[0])} "
                f"inside {_subgroup_str(pair[1])}"
            )
            break
    return psig, holds, detail


def _t46_equiv(ctx: PairCtx) -> tuple[bool, bool, str]:
    G, L, sigma = ctx.group, ctx.lattice, ctx.sigma
    psig = psigmat_transitive_in(L, sigma, L.top_id)[0]
    holds = True
    detail = ""
    for a in subnormal_ids_in(L, sigma, L.top_id):
        ok, witness = is_sigma_modular_everywhere(G, L, sigma, L.subgroup(a))
        if not ok:
            holds = False
            detail = (
                f"subnormal {_subgroup_str(L.subgroup(a))} fails the modular law "
                f"in {_subgroup_str(witness[0])}"
            )
            break
    return psig, holds, detail


def _section4_task(name: str, equiv) :
    def task(ctx: PairCtx, caps: Caps, seed: int) -> dict:
        G, L, sigma = ctx.group, ctx.lattice, ctx.sigma
        if G.order > caps.section4_max_order or not is_sigma_soluble(G, L, sigma):
            return _record(ctx, name, 0, [], skipped=True)
        psig, other, detail = equiv(ctx)
        violations = []
        if psig != other:
            violations.append(
                _violation(name, ctx.spec.label, f"transitive={psig} characterization={other} {detail}")
            )
        return _record(ctx, name, 1, violations, psigmat=psig, characterization=other)

    return task


# -- lemma suite -----------------------------------------------------------------------


def _quotient_image(L: SubgroupLattice, proj, members) -> frozenset[int]:
    return frozenset(proj[i] for i in members)


def _lemma_soluble_implies_full(ctx: PairCtx, rng, budget):
    G, L, sigma = ctx.group, ctx.lattice, ctx.sigma
    if not is_sigma_soluble(G, L, sigma):
        return 0, []
    cands = [(e, bid) for e in range(len(L)) for bid in sorted_blocks(sigma, L.orders[e])]
    out = []
    for e, bid in rng.sample(cands, min(budget, len(cands))):
        if not is_D_block_rel(L, sigma, e, bid):
            out.append(
                f"subgroup {_subgroup_str(L.subgroup(e))} not dominated on block "
                f"{sigma.describe_block(bid)}"
            )
    return min(budget, len(cands)), out


def _lemma_nilpotent_closure(ctx: PairCtx, rng, budget):
    G, L, sigma = ctx.group, ctx.lattice, ctx.sigma
    normals = L.normal_ids()

    def nil(ambient: int) -> bool:
        return has_normal_halls(L, sigma, ambient=ambient)

    cands = []
    nil_normals = [n for n in normals if nil(n)]
    for i, a in enumerate(nil_normals):
        for b in nil_normals[i + 1 :]:
            cands.append(("product", a, b))
    if nil(L.top_id):
        for n in normals:
            cands.append(("image", n, None))
        for h in range(len(L)):
            cands.append(("subgroup", h, None))
    phi_id = L.id_of(frattini(L).members)
    for e in normals:
        if has_normal_halls(L, sigma, ambient=e, above=L.meet(e, phi_id)):
            cands.append(("frattini", e, None))
    sample = rng.sample(cands, min(budget, len(cands)))
    out = []
    for kind, x, y in sample:
        if kind == "product":
            ok = nil(L.join(x, y))
        elif kind == "image":
            # check the materialized quotient with its own lattice
            Q, _proj, LQ = L.quotient_by(x)
            ok = is_sigma_nilpotent(Q, LQ, sigma)
        else:  # "subgroup" and "frattini"
            ok = nil(x)
        if not ok:
            out.append(f"{kind} instance at {_subgroup_str(L.subgroup(x))}")
    return len(sample), out


def _lemma_residual_quotient(ctx: PairCtx, rng, budget):
    G, L, sigma = ctx.group, ctx.lattice, ctx.sigma
    d_id = residual_id(L, sigma)
    normals = list(L.normal_ids())
    sample = rng.sample(normals, min(budget, len(normals)))
    out = []
    for n in sample:
        Q, proj, LQ = L.quotient_by(n)
        dq = residual_id(LQ, sigma)
        image = _quotient_image(LQ, proj, product_members(G, L.members[d_id], L.members[n]))
        if LQ.members[dq] != image:
            out.append(f"residual image mismatch over N {_subgroup_str(L.subgroup(n))}")
    return len(sample), out


def _lemma_hall_intersection(ctx: PairCtx, rng, budget):
    G, L, sigma = ctx.group, ctx.lattice, ctx.sigma
    halls = [
        h for h in range(len(L)) if math.gcd(L.orders[h], G.order // L.orders[h]) == 1
    ]
    checked = 0
    out = []
    for _ in range(20 * budget):
        if checked >= budget:
            break
        h = rng.choice(halls)
        k = rng.randrange(len(L))
        n = rng.randrange(len(L))
        if not (L.permutes(h, k) and L.permutes(h, n) and L.permutes(k, n)):
            continue
        checked += 1
        if not hall_factorization_check(
            G, L, L.subgroup(n), L.subgroup(h), L.subgroup(k)
        ):
            out.append(
                f"N {_subgroup_str(L.subgroup(n))}, H {_subgroup_str(L.subgroup(h))}, "
                f"K {_subgroup_str(L.subgroup(k))}"
            )
    return checked, out


def _lemma_subnormal_lift(ctx: PairCtx, rng, budget):
    G, L, sigma = ctx.group, ctx.lattice, ctx.sigma
    subn = set(subnormal_ids_in(L, sigma, L.top_id))
    cands = [(n, k) for n in L.normal_ids() for k in L.over(n)]
    sample = rng.sample(cands, min(budget, len(cands)))
    checked = 0
    out = []
    for n, k in sample:
        Q, proj, LQ = L.quotient_by(n)
        image_id = LQ.id_of(_quotient_image(LQ, proj, L.members[k]))
        if subnormal_chain_in(LQ, sigma, LQ.top_id, image_id) is None:
            continue
        checked += 1
        if k not in subn:
            out.append(f"K {_subgroup_str(L.subgroup(k))} over N {_subgroup_str(L.subgroup(n))}")
    return checked, out


def _lemma_subnormal_meet(ctx: PairCtx, rng, budget):
    G, L, sigma = ctx.group, ctx.lattice, ctx.sigma
    subn = subnormal_ids_in(L, sigma, L.top_id)
    cands = [(a, k) for a in subn for k in range(len(L))]
    sample = rng.sample(cands, min(budget, len(cands)))
    out = []
    for a, k in sample:
        if subnormal_chain_in(L, sigma, k, L.meet(a, k)) is None:
            out.append(f"A {_subgroup_str(L.subgroup(a))} meet K {_subgroup_str(L.subgroup(k))}")
    return len(sample), out


def _lemma_subnormal_hall_normal(ctx: PairCtx, rng, budget):
    G, L, sigma = ctx.group, ctx.lattice, ctx.sigma
    cands = [
        a
        for a in subnormal_ids_in(L, sigma, L.top_id)
        if is_sigma_hall_subgroup(G, sigma, L.subgroup(a)) is not None
    ]
    sample = rng.sample(cands, min(budget, len(cands)))
    out = []
    for a in sample:
        if not L.is_normal(a, L.top_id):
            out.append(f"Hall-like subnormal {_subgroup_str(L.subgroup(a))} not normal")
    return len(sample), out


def _pi_part(sigma: SigmaPartition, n: int, blocks) -> int:
    part = 1
    for bid in blocks:
        part *= part_for_block(sigma, n, bid)
    return part


def _lemma_subnormal_hall_meet(ctx: PairCtx, rng, budget):
    G, L, sigma = ctx.group, ctx.lattice, ctx.sigma
    subn = subnormal_ids_in(L, sigma, L.top_id)
    blocks = sorted_blocks(sigma, G.order)
    cands = []
    for size in range(1, len(blocks) + 1):
        from itertools import combinations

        for pi in combinations(blocks, size):
            part = _pi_part(sigma, G.order, pi)
            if part == 1:
                continue
            for h in L.hall_ids(L.top_id, part):
                for a in subn:
                    if sigma_of(sigma, L.orders[a]) & set(pi):
                        cands.append((a, h, pi))
    sample = rng.sample(cands, min(budget, len(cands)))
    out = []
    for a, h, pi in sample:
        meet = L.meet(a, h)
        if L.orders[meet] == 1 or L.orders[meet] != _pi_part(sigma, L.orders[a], pi):
            out.append(
                f"A {_subgroup_str(L.subgroup(a))} meet Hall {_subgroup_str(L.subgroup(h))}"
            )
    return len(sample), out


def _lemma_subnormal_image(ctx: PairCtx, rng, budget):
    G, L, sigma = ctx.group, ctx.lattice, ctx.sigma
    subn = subnormal_ids_in(L, sigma, L.top_id)
    cands = [(a, n) for a in subn for n in L.normal_ids()]
    sample = rng.sample(cands, min(budget, len(cands)))
    out = []
    for a, n in sample:
        Q, proj, LQ = L.quotient_by(n)
        image_id = LQ.id_of(
            _quotient_image(LQ, proj, product_members(G, L.members[a], L.members[n]))
        )
        if subnormal_chain_in(LQ, sigma, LQ.top_id, image_id) is None:
            out.append(f"AN/N not subnormal for A {_subgroup_str(L.subgroup(a))}")
    return len(sample), out


def _lemma_subnormal_transitive(ctx: PairCtx, rng, budget):
    G, L, sigma = ctx.group, ctx.lattice, ctx.sigma
    subn = set(subnormal_ids_in(L, sigma, L.top_id))
    cands = [(a, k) for a in sorted(subn) for k in subnormal_ids_in(L, sigma, a)]
    sample = rng.sample(cands, min(budget, len(cands)))
    out = []
    for a, k in sample:
        if k not in subn:
            out.append(
                f"K {_subgroup_str(L.subgroup(k))} subnormal in A {_subgroup_str(L.subgroup(a))}"
            )
    return len(sample), out


def _sigma_permutable_ids(ctx: PairCtx):
    L, sigma = ctx.lattice, ctx.sigma
    return [
        i for i in range(len(L)) if permutability_in(L, sigma, L.top_id, i).holds
    ]


def _lemma_permutable_subnormal(ctx: PairCtx, rng, budget):
    L, sigma = ctx.lattice, ctx.sigma
    subn = set(subnormal_ids_in(L, sigma, L.top_id))
    cands = _sigma_permutable_ids(ctx)
    sample = rng.sample(cands, min(budget, len(cands)))
    out = []
    for h in sample:
        if h not in subn:
            out.append(f"permutable {_subgroup_str(L.subgroup(h))} not subnormal")
    return len(sample), out


def _lemma_permutable_image(ctx: PairCtx, rng, budget):
    G, L, sigma = ctx.group, ctx.lattice, ctx.sigma
    perms = _sigma_permutable_ids(ctx)
    cands = [(h, r) for h in perms for r in L.normal_ids()]
    sample = rng.sample(cands, min(budget, len(cands)))
    out = []
    for h, r in sample:
        Q, proj, LQ = L.quotient_by(r)
        image_id = LQ.id_of(
            _quotient_image(LQ, proj, product_members(G, L.members[h], L.members[r]))
        )
        if not permutability_in(LQ, sigma, LQ.top_id, image_id).holds:
            out.append(f"HR/R not permutable for H {_subgroup_str(L.subgroup(h))}")
    return len(sample), out


def _lemma_radical_normalizer(ctx: PairCtx, rng, budget):
    G, L, sigma = ctx.group, ctx.lattice, ctx.sigma
    if not is_sigma_soluble(G, L, sigma):
        return 0, []
    blocks = sorted_blocks(sigma, G.order)
    cands = []
    for bid in blocks:
        for k in range(len(L)):
            if sigma_of(sigma, L.orders[k]) <= {bid}:
                cands.append((k, bid))
    sample = rng.sample(cands, min(budget, len(cands)))
    out = []
    for k, bid in sample:
        lhs = permutability_in(L, sigma, L.top_id, k).holds
        upper = block_coresidual_id(L, sigma, bid, L.top_id)
        rhs = L.members[upper] <= L.members[L.normalizer_in(k, L.top_id)]
        if lhs != rhs:
            out.append(
                f"K {_subgroup_str(L.subgroup(k))} block {sigma.describe_block(bid)}: "
                f"permutable={lhs} normalizer-criterion={rhs}"
            )
    return len(sample), out


def _lemma_permutable_core_nilpotent(ctx: PairCtx, rng, budget):
    """Permutable H has block-nilpotent H/H_G, checked on the materialized
    quotient of H as a standalone group."""
    from .group import quotient_group, subgroup_as_group

    L, sigma = ctx.lattice, ctx.sigma
    cands = _sigma_permutable_ids(ctx)
    sample = rng.sample(cands, min(budget, len(cands)))
    out = []
    for h in sample:
        core = L.core_in(h, L.top_id)
        H = subgroup_as_group(L.subgroup(h))
        Q, _proj = quotient_group(H, H.subgroup(frozenset(
            H.index_of(ctx.group.elements[i]) for i in L.members[core]
        )))
        LQ = all_subgroups(Q, L.max_subgroups)
        if not is_sigma_nilpotent(Q, LQ, sigma):
            out.append(f"H/H_G not block-nilpotent for {_subgroup_str(L.subgroup(h))}")
    return len(sample), out


def _lemma_transitive_vs_subnormal(ctx: PairCtx, rng, budget):
    G, L, sigma = ctx.group, ctx.lattice, ctx.sigma
    psig = psigmat_transitive_in(L, sigma, L.top_id)[0]
    subn = subnormal_ids_in(L, sigma, L.top_id)
    via = all(permutability_in(L, sigma, L.top_id, a).holds for a in subn)
    out = []
    if psig != via:
        out.append(f"transitivity={psig} but subnormal-permutability={via}")
    checked = 1
    if psig:
        sample = rng.sample(list(subn), min(budget, len(subn)))
        for a in sample:
            checked += 1
            if not permutability_in(L, sigma, L.top_id, a).holds:
                out.append(f"subnormal {_subgroup_str(L.subgroup(a))} not permutable")
    return checked, out


def _lemma_transitive_quotient(ctx: PairCtx, rng, budget):
    G, L, sigma = ctx.group, ctx.lattice, ctx.sigma
    if not psigmat_transitive_in(L, sigma, L.top_id)[0]:
        return 0, []
    normals = list(L.normal_ids())
    sample = rng.sample(normals, min(budget, len(normals)))
    out = []
    for n in sample:
        _Q, _proj, LQ = L.quotient_by(n)
        if not psigmat_transitive_in(LQ, sigma, LQ.top_id)[0]:
            out.append(f"quotient by {_subgroup_str(L.subgroup(n))} not transitive")
    return len(sample), out


def _lemma_permutable_image_rel(ctx: PairCtx, rng, budget):
    G, L, sigma = ctx.group, ctx.lattice, ctx.sigma
    normals = list(L.normal_ids())
    checked = 0
    out = []
    for _ in range(20 * budget):
        if checked >= budget:
            break
        h = rng.randrange(len(L))
        k = rng.choice(L.within(h))
        if not permutability_in(L, sigma, h, k).holds:
            continue
        n = rng.choice(normals)
        Q, proj, LQ = L.quotient_by(n)
        hn = LQ.id_of(_quotient_image(LQ, proj, product_members(G, L.members[h], L.members[n])))
        kn = LQ.id_of(_quotient_image(LQ, proj, product_members(G, L.members[k], L.members[n])))
        checked += 1
        if not permutability_in(LQ, sigma, hn, kn).holds:
            out.append(
                f"KN/N not permutable in HN/N for K {_subgroup_str(L.subgroup(k))} "
                f"inside H {_subgroup_str(L.subgroup(h))}"
            )
    return checked, out


LEMMA_PARTS = {
    "soluble-implies-full": _lemma_soluble_implies_full,
    "nilpotent-closure": _lemma_nilpotent_closure,
    "residual-quotient": _lemma_residual_quotient,
    "hall-intersection": _lemma_hall_intersection,
    "subnormal-lift": _lemma_subnormal_lift,
    "subnormal-meet": _lemma_subnormal_meet,
    "subnormal-hall-normal": _lemma_subnormal_hall_normal,
    "subnormal-hall-meet": _lemma_subnormal_hall_meet,
    "subnormal-image": _lemma_subnormal_image,
    "subnormal-transitive": _lemma_subnormal_transitive,
    "permutable-subnormal": _lemma_permutable_subnormal,
    "permutable-image": _lemma_permutable_image,
    "radical-normalizer": _lemma_radical_normalizer,
    "permutable-core-nilpotent": _lemma_permutable_core_nilpotent,
    "transitive-vs-subnormal": _lemma_transitive_vs_subnormal,
    "transitive-quotient": _lemma_transitive_quotient,
    "permutable-image-rel": _lemma_permutable_image_rel,
}


def _task_lemmas(ctx: PairCtx, caps: Caps, seed: int) -> dict:
    counts = {}
    violations = []
    for name, fn in LEMMA_PARTS.items():
        rng = _rng_for(seed, "lemma", name, ctx.spec.label)
        checked, fails = fn(ctx, rng, LEMMA_BUDGET)
        counts[name] = checked
        for detail in fails:
            violations.append(_violation(f"lemmas/{name}", ctx.spec.label, detail))
    total = sum(counts.values())
    return _record(ctx, "lemmas", total, violations, lemma_counts=counts)


# -- corollaries -----------------------------------------------------------------------


def _corollary_closure(ctx: PairCtx) -> tuple[int, list[str]]:
    G, L, sigma = ctx.group, ctx.lattice, ctx.sigma
    if not is_sigma_soluble(G, L, sigma) or not psigmat_transitive_in(L, sigma, L.top_id)[0]:
        return 0, []
    ok, witness = corollary_closure_check(G, L, sigma)
    if ok:
        return 1, []
    kind, sub = witness
    return 1, [f"{kind} {_subgroup_str(sub)} not transitive"]


def _corollary_classical_residual(ctx: PairCtx) -> tuple[int, list[str]]:
    """The singleton-partition specialization: soluble transitive groups have
    an abelian odd-order Hall residual acted on by power automorphisms."""
    G, L, sigma = ctx.group, ctx.lattice, ctx.sigma
    if sigma != SigmaPartition.singletons():
        return 0, []
    if not is_sigma_soluble(G, L, sigma) or not psigmat_transitive_in(L, sigma, L.top_id)[0]:
        return 0, []
    D = L.subgroup(residual_id(L, sigma))
    issues = []
    gens = D.generator_indices()
    if not all(G.mult(a, b) == G.mult(b, a) for a in gens for b in gens):
        issues.append("residual not abelian")
    if math.gcd(D.order, G.order // D.order) != 1:
        issues.append("residual not Hall")
    if D.order % 2 == 0:
        issues.append("residual has even order")
    if not induces_power_automorphisms(G, D)[0]:
        issues.append("non power automorphism action")
    return 1, issues


def _pair_family_conditions(ctx: PairCtx, sigma: SigmaPartition, pi_blocks) -> tuple[bool, bool]:
    """Literal two-block / split-block condition set; returns (lhs, rhs)."""
    from .lattice import complement_search

    G, L = ctx.group, ctx.lattice
    lhs = is_sigma_soluble(G, L, sigma) and psigmat_transitive_in(L, sigma, L.top_id)[0]
    d_id = residual_id(L, sigma)
    D = L.subgroup(d_id)
    M = complement_search(G, L, D)
    rhs = M is not None
    if rhs:
        gens = D.generator_indices()
        rhs = all(G.mult(a, b) == G.mult(b, a) for a in gens for b in gens)
        rhs = rhs and math.gcd(D.order, G.order // D.order) == 1 and D.order % 2 == 1
        rhs = rhs and induces_power_automorphisms(G, D)[0]
    if rhs:
        m_id = L.id_of_subgroup(M)
        total = 1
        for bid in pi_blocks["decompose"]:
            total *= L.orders[block_radical_id(L, sigma, bid, m_id)]
        rhs = total == L.orders[m_id]
    if rhs:
        for bid in pi_blocks["complement"]:
            radical = block_radical_id(L, sigma, bid, d_id)
            found = False
            for h in L.hall_ids(L.top_id, part_for_block(sigma, G.order, bid)):
                if not L.members[radical] <= L.members[h]:
                    continue
                for s in L.within(h):
                    if (
                        L.orders[s] * L.orders[radical] == L.orders[h]
                        and len(L.members[s] & L.members[radical]) == 1
                        and L.is_normal(s, h)
                    ):
                        found = True
                        break
                if found:
                    break
            if not found:
                rhs = False
                break
    return lhs, rhs


def _corollary_pair_family(ctx: PairCtx, pi: tuple[int, ...]) -> tuple[int, list[str]]:
    sigma = SigmaPartition.pair(pi)
    sub = PairCtx(ctx.spec, ctx.group, ctx.lattice, sigma)
    blocks = [("blk", 0), ("rest",)]
    lhs, rhs = _pair_family_conditions(
        sub, sigma, {"decompose": blocks, "complement": blocks}
    )
    general = check_theorem_A(ctx.group, ctx.lattice, sigma)
    issues = []
    if lhs != rhs:
        issues.append(f"pi={pi}: separable-transitive={lhs} conditions={rhs}")
    if rhs != general.conditions_hold:
        issues.append(f"pi={pi}: literal conditions disagree with general checker")
    return 1, issues


def _corollary_split_family(ctx: PairCtx, pi: tuple[int, ...]) -> tuple[int, list[str]]:
    sigma = SigmaPartition.split_pair(pi)
    sub = PairCtx(ctx.spec, ctx.group, ctx.lattice, sigma)
    split_blocks = [("blk", i) for i in range(len(pi))] + [("rest",)]
    lhs, rhs = _pair_family_conditions(
        sub, sigma, {"decompose": split_blocks, "complement": [("rest",)]}
    )
    issues = []
    if lhs != rhs:
        issues.append(f"split pi={pi}: soluble-transitive={lhs} conditions={rhs}")
    return 1, issues


def _corollary_factorization(ctx: PairCtx) -> tuple[int, list[str]]:
    """Normal Hall-like D with block-nilpotent quotient and all subgroups of D
    normal in G forces transitivity; same with transitive quotient and only
    subnormal subgroups of D normal (checked on the singleton partition)."""
    G, L, sigma = ctx.group, ctx.lattice, ctx.sigma
    checked = 0
    issues = []
    psig = psigmat_transitive_in(L, sigma, L.top_id)[0]
    for n in L.normal_ids():
        D = L.subgroup(n)
        if is_sigma_hall_subgroup(G, sigma, D) is None:
            continue
        if has_normal_halls(L, sigma, above=n):
            all_normal = all(L.is_normal(s, L.top_id) for s in L.within(n))
            checked += 1
            if all_normal and not psig:
                issues.append(f"nilpotent-quotient candidate D {_subgroup_str(D)} fails")
        if sigma == SigmaPartition.singletons():
            rep = check_theorem_B(G, L, sigma, D)
            checked += 1
            if rep.hypotheses_hold and not rep.conclusion_holds:
                issues.append(f"classical candidate D {_subgroup_str(D)} fails")
    return checked, issues


def _corollary_classical_section4(ctx: PairCtx, caps: Caps) -> tuple[int, list[str]]:
    """Singleton-partition instances of the three section-4 equivalences,
    plus the iterated-centre oracle for the hypercentre."""
    G, L, sigma = ctx.group, ctx.lattice, ctx.sigma
    if sigma != SigmaPartition.singletons() or G.order > caps.section4_max_order:
        return 0, []
    if not is_sigma_soluble(G, L, sigma):
        return 0, []
    issues = []
    z = sigma_hypercentre(G, L, sigma)
    if z.members != iterated_centre(G).members:
        issues.append("hypercentre disagrees with iterated centre")
    for name, fn in (("t41", _t41_equiv), ("t43", _t43_equiv), ("t46", _t46_equiv)):
        psig, other, detail = fn(ctx)
        if psig != other:
            issues.append(f"{name}: transitive={psig} characterization={other} {detail}")
    return 4, issues


def _task_corollaries(ctx: PairCtx, caps: Caps, seed: int) -> dict:
    checked = 0
    violations = []
    parts: list[tuple[str, tuple[int, list[str]]]] = [
        ("closure", _corollary_closure(ctx)),
        ("classical-residual", _corollary_classical_residual(ctx)),
        ("factorization", _corollary_factorization(ctx)),
        ("classical-section4", _corollary_classical_section4(ctx, caps)),
    ]
    if ctx.spec.sigma_label == catalog.CORPUS_SIGMAS[0]:
        # per-group family instances, attached to one pair per group
        for pi in ((2, 3), (3, 7)):
            parts.append((f"pair-family-{pi[0]}{pi[1]}", _corollary_pair_family(ctx, pi)))
            parts.append((f"split-family-{pi[0]}{pi[1]}", _corollary_split_family(ctx, pi)))
    for name, (n, issues) in parts:
        checked += n
        for detail in issues:
            violations.append(_violation(f"corollaries/{name}", ctx.spec.label, detail))
    return _record(ctx, "corollaries", checked, violations)


TASK_FUNCS = {
    "theorem-a": _task_theorem_a,
    "theorem-b": _task_theorem_b,
    "t41": _section4_task("t41", _t41_equiv),
    "t43": _section4_task("t43", _t43_equiv),
    "t46": _section4_task("t46", _t46_equiv),
    "lemmas": _task_lemmas,
    "corollaries": _task_corollaries,
}


# -- suite drivers ----------------------------------------------------------------------


def run_suite(
    suite: str,
    pairs: list[PairSpec],
    caps: Caps,
    seed: int = 0,
    jobs: int = 1,
    manifest_checks: list[ManifestCheck] | None = None,
) -> dict:
    """Run one named suite over the corpus; deterministic summary document."""
    if suite not in SUITES:
        raise ParseError(f"unknown suite {suite!r} (expected one of {SUITES})")
    records = []
    violations = []
    if manifest_checks:
        for c in manifest_checks:
            spec = next(
                p for p in pairs if p.group_label == c.group_ref and p.sigma_label == c.sigma_ref
            )
            ctx = resolve_pair(spec, caps)
            value = eval_predicate(c.predicate, ctx, caps.mode)
            rec = {
                "task": "manifest",
                "pair": spec.label,
                "predicate": c.predicate,
                "value": value,
            }
            if c.expect is not None and value != c.expect:
                violations.append(
                    _violation(
                        "manifest", spec.label, f"{c.predicate} = {value}, pinned {c.expect}"
                    )
                )
            records.append(rec)
    tasks = [_task_payload(suite, spec, caps, seed) for spec in pairs]
    results = _execute(tasks, jobs)
    lemma_counts: dict[str, int] = {}
    checked = 0
    for rec in results:
        checked += rec["checked"]
        violations.extend(rec.pop("violations"))
        for part, n in rec.get("lemma_counts", {}).items():
            lemma_counts[part] = lemma_counts.get(part, 0) + n
        records.append(rec)
    doc = {
        "suite": suite,
        "seed": seed,
        "mode": caps.mode,
        "pair_count": len(pairs),
        "checked": checked,
        "records": records,
        "violations": violations,
        "ok": not violations,
    }
    if lemma_counts:
        doc["lemma_counts"] = dict(sorted(lemma_counts.items()))
    return doc


def run_search(
    expr: str, pairs: list[PairSpec], caps: Caps, jobs: int = 1
) -> dict:
    terms = parse_search_expression(expr)
    matches = []
    rows = []
    for spec in pairs:
        ctx = resolve_pair(spec, caps)
        value = all(
            eval_predicate(pred, ctx, caps.mode) != negated for pred, negated in terms
        )
        rows.append(
            {
                "pair": spec.label,
                "group": spec.group_label,
                "sigma": spec.sigma_label,
                "order": ctx.group.order,
                "match": value,
            }
        )
        if value:
            matches.append(spec.label)
    return {"expression": expr, "rows": rows, "matches": matches}


# -- cross-checks used by the acceptance tests -------------------------------------------


def oracle_equivalence_issues(ctx: PairCtx) -> list[str]:
    """Dual-route checks: decomposition search vs normal-Hall nilpotency,
    transitivity vs the subnormal route, strict vs witness permutability."""
    G, L, sigma = ctx.group, ctx.lattice, ctx.sigma
    issues = []
    if G.order <= 200:
        a = is_sigma_nilpotent(G, L, sigma)
        b = sigma_nilpotent_by_decomposition(G, L, sigma)
        if a != b:
            issues.append(f"nilpotency criterion {a} vs decomposition search {b}")
    psig = psigmat_transitive_in(L, sigma, L.top_id)[0]
    via = all(
        permutability_in(L, sigma, L.top_id, a).holds
        for a in subnormal_ids_in(L, sigma, L.top_id)
    )
    if psig != via:
        issues.append(f"transitive {psig} vs subnormal route {via}")
    if is_sigma_soluble(G, L, sigma):
        for i in range(len(L)):
            strict = permutability_in(L, sigma, L.top_id, i, STRICT).holds
            witness = permutability_in(L, sigma, L.top_id, i, WITNESS).holds
            if strict != witness:
                issues.append(
                    f"mode disagreement on {_subgroup_str(L.subgroup(i))}: "
                    f"strict={strict} witness={witness}"
                )
                break
    return issues
