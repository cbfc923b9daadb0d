import pytest
from hypothesis import given, strategies as st

from hnt.constructions import diag_full_group, k2_group, rep
from hnt.errors import ParameterError
from hnt.groups import GroupGens
from hnt.io import format_code, format_group, parse_code, parse_group, read_code, write_code

from conftest import aut_elems, codes, small_params


@given(small_params.flatmap(codes))
def test_code_roundtrip(C):
    assert parse_code(format_code(C)) == C


@given(small_params.flatmap(lambda p: st.lists(aut_elems(p), min_size=1, max_size=4).map(
    lambda gs: GroupGens(p, tuple(gs)))))
def test_group_roundtrip(X):
    assert parse_group(format_group(X)) == X


def test_named_groups_roundtrip():
    for X in (diag_full_group(3, 5), k2_group(2, 3)):
        assert parse_group(format_group(X)) == X


def test_file_roundtrip(tmp_path):
    path = tmp_path / "rep.hc"
    write_code(rep(3, 5), path)
    assert read_code(path) == rep(3, 5)
    lines = path.read_text().splitlines()
    assert lines[0] == "3 5" and len(lines) == 6


def test_comments_and_blank_lines():
    assert parse_code("# header\n2 3\n\n0 1\n# x\n1 2\n").words == {(0, 1), (1, 2)}


@pytest.mark.parametrize("text", ["", "2\n0 0\n", "2 3\n0 3\n", "2 3\n0 1\n0 1\n", "2 3\n0 1 2\n"])
def test_bad_code_files(text):
    with pytest.raises(ParameterError):
        parse_code(text)


@pytest.mark.parametrize("text", ["2 3\n0 1 2 | 0 1\n", "2 3\n0 1 2; 0 1 2 | 0 0\n",
                                  "2 2\n0 1 2; 0 1 2; 0 1 2 | 0 1 2\n"])
def test_bad_group_files(text):
    with pytest.raises(ParameterError):
        parse_group(text)
