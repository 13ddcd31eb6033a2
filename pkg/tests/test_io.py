"""Instance file round-trips and reader validation."""

import pytest

from paretosum import ParetoSet, read_pareto_set, write_pareto_set
from paretosum.oracles import FIG1


def test_round_trip(tmp_path):
    path = tmp_path / "a.ps"
    write_pareto_set(path, FIG1.a, header=["round trip"])
    assert read_pareto_set(path) == FIG1.a


def test_shipped_fixture_files_match_code(request):
    root = request.config.rootpath
    assert read_pareto_set(root / "fixtures" / "fig1_a.ps") == FIG1.a
    assert read_pareto_set(root / "fixtures" / "fig1_b.ps") == FIG1.b


def test_comment_header_is_skipped(tmp_path):
    path = tmp_path / "c.ps"
    path.write_text("# one\n# two\n2\n0 3\n2 1\n")
    assert read_pareto_set(path) == ParetoSet([(0, 3), (2, 1)])


@pytest.mark.parametrize(
    "content,fragment",
    [
        ("", "count"),
        ("x\n", "count"),
        ("2\n0 3\n", "expected 2 points"),
        ("1\n0\n", "malformed"),
        ("1\n0 zz\n", "malformed"),
        ("2\n0 1\n1 1\n", "Pareto"),
        ("2\n1 2\n0 3\n", "Pareto"),
        ("1\n2147483648 0\n", "2^31"),
        ("1\n0 -2147483648\n", "2^31"),
    ],
)
def test_reader_rejections(tmp_path, content, fragment):
    path = tmp_path / "bad.ps"
    path.write_text(content)
    with pytest.raises(ValueError) as err:
        read_pareto_set(path)
    assert fragment in str(err.value)
    assert "bad.ps" in str(err.value)


def test_negative_coordinates_allowed(tmp_path):
    path = tmp_path / "neg.ps"
    write_pareto_set(path, FIG1.b)
    assert read_pareto_set(path) == FIG1.b
