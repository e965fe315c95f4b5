from conftest import load_sample
from tanglekit.render import render
from tanglekit.tanglecalc import braid_block, identity, unit_circle, validate


def test_unit_circle():
    assert render(unit_circle()) == "  (empty)\n  .--.\n  '--'\n  (empty)\n"


def test_single_crossing():
    assert render(validate([braid_block("s1", "uu")])) == "  uu\n  \\+ /\n  uu\n"
    assert render(validate([braid_block("s1^-1", "ud")])) == "  du\n  \\- /\n  ud\n"


def test_bottom_letter_drawn_last():
    picture = render(validate([braid_block("s1 s2", "uuu")]))
    assert picture == "  uuu\n  \\+ /  ^\n  ^  \\+ /\n  uuu\n"


def test_empty_block_and_identity():
    assert render(validate([braid_block("e", "ud")])) == "  ud\n  ^  v\n  ud\n"
    assert render(identity("u")) == "  u\n  u\n"


def test_kinked_strand():
    expected = "  u\n  ^  .--.\n  \\+ /  ^\n  '--'  ^\n  u\n"
    assert render(load_sample("kinked_strand.tgl")) == expected
