"""Analysis reports: one nested plain-data document per (group, partition)
pair, rendered to canonical JSON or readable text.

Machine and human renderings carry the same facts.  Subgroups are rendered
as generator lists in cycle notation plus order; raw element dumps are never
emitted beyond order 24.  Rendering is deterministic for fixed inputs, so
re-parsing a JSON report and re-rendering reproduces identical bytes.
"""

from __future__ import annotations

import json

from .group import Group, Subgroup
from .lattice import SubgroupLattice
from .sigma import (
    SigmaPartition,
    complete_hall_sigma_sets,
    is_sigma_full_sylow_type,
    is_sigma_nilpotent,
    is_sigma_primary,
    is_sigma_soluble,
    sorted_blocks,
)
from .embeddings import (
    is_PsigmaT_transitive,
    is_PsigmaT_via_subnormal,
    satisfies_Y,
    sigma_hypercentre,
)
from .structure import TheoremAReport, check_theorem_A, check_theorem_B, is_sigma_hall_subgroup


def describe_subgroup(S: Subgroup) -> dict:
    doc = {
        "order": S.order,
        "generators": [p.cycle_string() for p in S.generator_perms()] or ["()"],
    }
    if S.order <= 24:
        doc["elements"] = [p.cycle_string() for p in S.element_perms()]
    return doc


def _theorem_a_doc(sigma: SigmaPartition, rep: TheoremAReport) -> dict:
    ci = rep.condition_i
    return {
        "residual": describe_subgroup(rep.residual),
        "sigma_soluble": rep.is_sigma_soluble,
        "condition_i": {
            "holds": ci.ok,
            "complement": describe_subgroup(ci.complement) if ci.complement else None,
            "residual_abelian": ci.d_abelian,
            "residual_hall": ci.d_hall,
            "residual_odd": ci.d_odd,
            "complement_sigma_nilpotent": ci.m_sigma_nilpotent,
            "power_automorphisms": ci.power_automorphisms,
        },
        "condition_ii": {
            sigma.describe_block(bid): {
                "holds": blockrep.ok,
                "radical": describe_subgroup(blockrep.radical),
                "hall": describe_subgroup(blockrep.hall) if blockrep.hall else None,
                "complement": describe_subgroup(blockrep.complement)
                if blockrep.complement
                else None,
            }
            for bid, blockrep in sorted(rep.condition_ii.items())
        },
        "conditions_hold": rep.conditions_hold,
        "psigmat_bruteforce": rep.psigmat_bruteforce,
        "equivalence_holds": rep.equivalence_holds,
    }


def build_analysis(
    G: Group,
    L: SubgroupLattice,
    sigma: SigmaPartition,
    mode: str = "strict",
    max_order: int | None = None,
    max_subgroups: int | None = None,
) -> dict:
    """Full predicate battery for one (group, partition) pair."""
    psig, psig_cx = is_PsigmaT_transitive(G, L, sigma, mode)
    via, via_cx = is_PsigmaT_via_subnormal(G, L, sigma, mode)
    z = sigma_hypercentre(G, L, sigma)
    y_docs = []
    for bid in sorted_blocks(sigma, G.order):
        holds, pair = satisfies_Y(G, L, sigma, bid, mode)
        entry = {"block": sigma.describe_block(bid), "holds": holds}
        if pair is not None:
            entry["counterexample"] = {
                "inner": describe_subgroup(pair[0]),
                "outer": describe_subgroup(pair[1]),
            }
        y_docs.append(entry)
    theorem_b_docs = []
    for n in L.normal_ids():
        D = L.subgroup(n)
        if is_sigma_hall_subgroup(G, sigma, D) is None:
            continue
        rep = check_theorem_B(G, L, sigma, D)
        theorem_b_docs.append(
            {
                "d": describe_subgroup(D),
                "hypotheses_hold": rep.hypotheses_hold,
                "conclusion_holds": rep.conclusion_holds,
            }
        )
    doc = {
        "group": {"name": G.name, "degree": G.degree, "order": G.order},
        "sigma": {"description": sigma.describe(), "key": sigma.key()},
        "settings": {
            "mode": mode,
            "max_order": max_order,
            "max_subgroups": max_subgroups,
            "subgroup_count": len(L),
        },
        "predicates": {
            "sigma_primary": is_sigma_primary(G, sigma),
            "sigma_soluble": is_sigma_soluble(G, L, sigma),
            "sigma_nilpotent": is_sigma_nilpotent(G, L, sigma),
            "sigma_full_sylow_type": is_sigma_full_sylow_type(G, L, sigma),
            "complete_hall_set_count": len(complete_hall_sigma_sets(G, L, sigma)),
            "psigmat_transitive": psig,
            "psigmat_via_subnormal": via,
            "hypercentre": describe_subgroup(z),
        },
        "y_properties": y_docs,
        "theorem_a": _theorem_a_doc(sigma, check_theorem_A(G, L, sigma)),
        "theorem_b_candidates": theorem_b_docs,
    }
    if psig_cx is not None:
        doc["predicates"]["psigmat_counterexample"] = {
            "inner": describe_subgroup(psig_cx[0]),
            "middle": describe_subgroup(psig_cx[1]),
        }
    if via_cx is not None:
        doc["predicates"]["via_subnormal_counterexample"] = describe_subgroup(via_cx)
    return doc


def render_json(doc) -> str:
    """Canonical machine rendering: sorted keys, fixed separators."""
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def _fmt_subgroup(doc: dict | None) -> str:
    if doc is None:
        return "absent"
    return f"order {doc['order']} = <{', '.join(doc['generators'])}>"


def render_text(doc: dict) -> str:
    g = doc["group"]
    p = doc["predicates"]
    ta = doc["theorem_a"]
    lines = [
        f"group     : {g['name'] or '(unnamed)'}  degree {g['degree']}  order {g['order']}",
        f"partition : {doc['sigma']['description']}",
        f"settings  : mode={doc['settings']['mode']}  subgroups={doc['settings']['subgroup_count']}",
        "",
        f"sigma-primary           : {p['sigma_primary']}",
        f"sigma-soluble           : {p['sigma_soluble']}",
        f"sigma-nilpotent         : {p['sigma_nilpotent']}",
        f"sigma-full (Sylow type) : {p['sigma_full_sylow_type']}",
        f"complete Hall sets      : {p['complete_hall_set_count']}",
        f"transitive permutability: {p['psigmat_transitive']}",
        f"  via subnormal route   : {p['psigmat_via_subnormal']}",
        f"hypercentre             : {_fmt_subgroup(p['hypercentre'])}",
    ]
    if "psigmat_counterexample" in p:
        cx = p["psigmat_counterexample"]
        lines.append(
            f"  counterexample: {_fmt_subgroup(cx['inner'])} inside {_fmt_subgroup(cx['middle'])}"
        )
    if "via_subnormal_counterexample" in p:
        lines.append(
            f"  subnormal witness: {_fmt_subgroup(p['via_subnormal_counterexample'])}"
        )
    lines.append("")
    for entry in doc["y_properties"]:
        lines.append(f"nested-pair property for block {entry['block']}: {entry['holds']}")
        if "counterexample" in entry:
            cx = entry["counterexample"]
            lines.append(
                f"  counterexample: {_fmt_subgroup(cx['inner'])} inside {_fmt_subgroup(cx['outer'])}"
            )
    lines += [
        "",
        f"residual                : {_fmt_subgroup(ta['residual'])}",
        f"condition (i)           : {ta['condition_i']['holds']}"
        f" (complement {_fmt_subgroup(ta['condition_i']['complement'])})",
        f"condition (ii)          : "
        + ", ".join(f"{blk}: {sub['holds']}" for blk, sub in ta["condition_ii"].items()),
        f"characterization agrees : {ta['equivalence_holds']}",
    ]
    for cand in doc["theorem_b_candidates"]:
        lines.append(
            f"factorization candidate D={_fmt_subgroup(cand['d'])}: "
            f"hypotheses {cand['hypotheses_hold']}, conclusion {cand['conclusion_holds']}"
        )
    return "\n".join(lines) + "\n"
