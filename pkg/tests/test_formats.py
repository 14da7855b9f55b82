import pytest

from sigmagroups.catalog import CATALOG, built_group
from sigmagroups.errors import OverlappingBlocks, ParseError
from sigmagroups.formats import (
    emit_group_file,
    emit_manifest,
    emit_sigma_file,
    parse_group_file,
    parse_manifest,
    parse_sigma_file,
)
from sigmagroups.sigma import REST_ONE_BLOCK, REST_SINGLETONS


def test_parse_group_s3():
    G = parse_group_file("degree 3\ngen (1 2 3)\ngen (1 2)\n")
    assert G.order == 6


def test_parse_group_with_name_and_comments():
    text = "# a comment\nname thing\ndegree 4  # trailing\ngen (1 2)(3 4)\n"
    G = parse_group_file(text)
    assert G.name == "thing" and G.order == 2


def test_parse_group_overlapping_cycles():
    with pytest.raises(ParseError):
        parse_group_file("degree 3\ngen (1 2)(2 3)\n")


def test_parse_group_errors_carry_line_numbers():
    with pytest.raises(ParseError) as err:
        parse_group_file("degree 3\ngen (1 5)\n")
    assert err.value.line == 2
    with pytest.raises(ParseError):
        parse_group_file("gen (1 2)\ndegree 3\n")
    with pytest.raises(ParseError):
        parse_group_file("degree 3\nfoo bar\n")
    with pytest.raises(ParseError):
        parse_group_file("")


def test_group_roundtrip_is_stable():
    text = "degree 3\ngen (1 2 3)\ngen (1 2)\n"
    once = emit_group_file(parse_group_file(text))
    twice = emit_group_file(parse_group_file(once))
    assert once == twice


def test_catalog_groups_roundtrip():
    for name in CATALOG:
        G = built_group(name)
        text = emit_group_file(G)
        H = parse_group_file(text, max_order=G.order)
        assert H.order == G.order
        assert H.elements == G.elements
        assert emit_group_file(H) == text


def test_trivial_group_emits_identity_gen():
    from sigmagroups.group import group_from_generators

    text = emit_group_file(group_from_generators(1, []))
    assert "gen ()" in text
    assert parse_group_file(text).order == 1


def test_parse_sigma_examples():
    sigma = parse_sigma_file("block 2 3\nrest one-block\n")
    assert sigma.blocks == ((2, 3),)
    assert sigma.rest_policy == REST_ONE_BLOCK
    sigma = parse_sigma_file("rest singletons\n")
    assert sigma.blocks == ()
    assert sigma.rest_policy == REST_SINGLETONS


def test_parse_sigma_errors():
    with pytest.raises(OverlappingBlocks):
        parse_sigma_file("block 2\nblock 2 5\nrest singletons\n")
    with pytest.raises(ParseError):
        parse_sigma_file("block 4\nrest singletons\n")
    with pytest.raises(ParseError):
        parse_sigma_file("block 2\n")
    with pytest.raises(ParseError):
        parse_sigma_file("rest singletons\nrest one-block\n")
    with pytest.raises(ParseError):
        parse_sigma_file("rest sometimes\n")


def test_sigma_roundtrip():
    for text in ("block 2 3\nrest one-block\n", "rest singletons\n", "block 5\nblock 2 3\nrest one-block\n"):
        sigma = parse_sigma_file(text)
        assert parse_sigma_file(emit_sigma_file(sigma)) == sigma


def test_manifest_roundtrip():
    text = (
        "check s3 s0 psigmat expect true  # enumeration\n"
        "check g168 p23 sigma-soluble expect record\n"
    )
    manifest = parse_manifest(text)
    assert len(manifest.checks) == 2
    assert manifest.checks[0].expect is True
    assert manifest.checks[1].expect is None
    assert manifest.checks[0].provenance == "enumeration"
    assert manifest.pairs() == [("s3", "s0"), ("g168", "p23")]
    assert parse_manifest(emit_manifest(manifest)) == manifest


def test_manifest_errors():
    with pytest.raises(ParseError):
        parse_manifest("check s3 s0 psigmat expect maybe\n")
    with pytest.raises(ParseError):
        parse_manifest("verify s3 s0 psigmat expect true\n")


def test_builtin_manifest_parses():
    from sigmagroups.catalog import BUILTIN_MANIFEST

    manifest = parse_manifest(BUILTIN_MANIFEST)
    assert any(c.group_ref == "g168" and c.expect for c in manifest.checks)
