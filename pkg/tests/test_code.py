import pytest

from toric_codes.code import (Code, CodeFormatError, DomainError, c1_code, example_code,
                              full_code, has_down_steps, internal_code, is_external,
                              lawrence_code, load_code, parse_code, support, tree_code,
                              word_from_support, write_code)


def test_parse_skips_comments_and_blanks():
    code = parse_code(["# three neurons", "", "000", "110 ", "100"])
    assert code.n == 3
    assert code.variables == ((1,), (1, 2))


def test_parse_errors():
    with pytest.raises(CodeFormatError):
        parse_code(["01x"])
    with pytest.raises(CodeFormatError):
        parse_code(["01", "011"])
    with pytest.raises(CodeFormatError):
        parse_code(["# nothing"])


def test_duplicates_collapse_and_order_is_canonical():
    code = parse_code(["111", "100", "011", "100", "010"])
    assert code.variables == ((1,), (2,), (2, 3), (1, 2, 3))
    assert code.variable_names() == ["t1", "t2", "t23", "t123"]


def test_matrix_columns_are_words():
    code = example_code()
    assert code.matrix == ((1, 0, 1, 1, 1), (0, 0, 1, 0, 1), (0, 1, 0, 1, 1))
    assert code.num_variables == 5


def test_support_round_trip():
    assert support((0, 1, 1)) == (2, 3)
    assert word_from_support((2, 3), 3) == (0, 1, 1)


def test_round_trip_through_file(tmp_path):
    code = example_code()
    path = tmp_path / "ci.code"
    write_code(code, path)
    assert load_code(path).words == code.words


def test_silent_neurons():
    code = parse_code(["000", "100", "011"])
    assert code.silent_neurons() == []
    assert parse_code(["000", "100", "110"]).silent_neurons() == [3]
    assert parse_code(["000", "100"]).silent_neurons() == [2, 3]


def test_families():
    assert len(full_code(3)) == 8 and c1_code() == full_code(3)
    assert is_external(c1_code()) and not is_external(example_code())
    assert len(internal_code(4).nonzero_words) == 6
    assert len(internal_code(4, literal=True).nonzero_words) == 7
    assert internal_code(3, literal=True).variables == ((1,), (2,), (1, 2), (2, 3), (1, 2, 3))
    assert lawrence_code(3).variables == ((2,), (3,), (1, 2), (1, 3))
    with pytest.raises(DomainError):
        internal_code(1)


def test_tree_code_words():
    code = tree_code(4, [(1, 2), (2, 3), (3, 4)])
    assert code.variables == ((1,), (2,), (3,), (4,), (1, 2), (2, 3), (3, 4))


def test_down_steps():
    assert has_down_steps(c1_code())
    assert not has_down_steps(Code.from_supports(3, [(), (1,), (2,), (3,), (1, 2, 3)]))
