import io

import pytest

from zhom import cli
from zhom.cli import EXIT_SIZE_GUARD, EXIT_USAGE, run
from zhom.core import (
    bipartisation,
    complete,
    edgeless,
    format_graph,
    format_matrix,
    format_poly,
    fourier_grid,
    hadamard,
    vertex_cover,
)
from zhom.cyclotomic import CycNum, format_approx, format_cycnum, make_root, parse_cycnum
from zhom.gausssum import QuadPoly
from zhom.utils.errors import InternalInconsistency


def call(*argv: str) -> tuple[int, str, str]:
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def files(tmp_path):
    paths = {
        "hadamard": (tmp_path / "hadamard.txt", format_matrix(hadamard())),
        "vcover": (tmp_path / "vcover.txt", format_matrix(vertex_cover())),
        "f3": (tmp_path / "f3.txt", format_matrix(bipartisation(fourier_grid(3)))),
        "k2": (tmp_path / "k2.txt", format_graph(complete(2))),
        "big": (tmp_path / "big.txt", format_graph(edgeless(30))),
        "gauss5": (tmp_path / "gauss5.txt", format_poly(QuadPoly.build(5, 1, {(0, 0): 1}))),
        "broken": (tmp_path / "broken.txt", "matrix 2\n0 0 1\n0 1 w(0,1)\n"),
    }
    for path, text in paths.values():
        path.write_text(text)
    out = {name: str(path) for name, (path, _) in paths.items()}
    out["cert"] = str(tmp_path / "cert.json")
    return out


def test_decide(files):
    assert call("decide", files["hadamard"]) == (0, "TRACTABLE\n", "")
    code, out, _ = call("decide", files["vcover"])
    assert code == 0
    assert out == "P-HARD step1:bulatov-grohe\n"


def test_certificate_round_trip(files):
    code, out, _ = call("decide", files["f3"], "--certificate", files["cert"])
    assert code == 0 and out == "TRACTABLE\n"
    assert call("validate", files["f3"], files["cert"])[:2] == (0, "VALID\n")
    assert call("validate", files["hadamard"], files["cert"])[:2] == (0, "INVALID\n")
    code, out, _ = call("eval", files["f3"], files["k2"], "--certificate", files["cert"])
    assert code == 0
    assert parse_cycnum(out.splitlines()[0]) == 6


def test_eval(files):
    code, out, _ = call("eval", files["hadamard"], files["k2"])
    assert code == 0
    value = CycNum.rational(2)
    lines = out.splitlines()
    assert parse_cycnum(lines[0]) == value
    assert lines[1] == format_approx(value, 12) == "2.000000000000 + 0.000000000000i"
    code, out, _ = call("eval", files["vcover"], files["k2"], "--digits", "3")
    assert code == 0
    assert out.splitlines()[1] == format_approx(CycNum.rational(3), 3)
    code, out, _ = call("eval", files["vcover"], files["k2"], "--mode", "brute")
    assert code == 0 and parse_cycnum(out.splitlines()[0]) == 3
    code, _, err = call("eval", files["vcover"], files["k2"], "--mode", "fast")
    assert code == EXIT_USAGE
    assert "P-HARD" in err


def test_brute_and_size_guard(files):
    code, out, _ = call("brute", files["hadamard"], files["k2"])
    assert code == 0 and parse_cycnum(out.splitlines()[0]) == 2
    code, _, err = call("brute", files["hadamard"], files["big"], "--size-guard", "1000")
    assert code == EXIT_SIZE_GUARD
    assert "1000" in err
    code, out, _ = call("eval", files["hadamard"], files["big"], "--size-guard", "1000")
    assert code == 0 and parse_cycnum(out.splitlines()[0]) == 2**30


def test_gauss(files):
    code, out, _ = call("gauss", files["gauss5"])
    assert code == 0
    w = make_root(5, 1)
    value = 1 + 2 * w + 2 * w**4
    assert out.splitlines()[0] == format_cycnum(value)
    assert out.splitlines()[1].startswith("2.236067977")


def test_usage_and_input_errors(files):
    assert call()[0] == EXIT_USAGE
    assert call("decide")[0] == EXIT_USAGE
    assert call("frobnicate", files["hadamard"])[0] == EXIT_USAGE
    assert call("eval", files["hadamard"], files["k2"], "--mode", "slow")[0] == EXIT_USAGE
    code, _, err = call("decide", files["broken"])
    assert code == EXIT_USAGE
    assert "line 3" in err
    assert call("decide", files["hadamard"] + ".missing")[0] == EXIT_USAGE
    assert call("validate", files["hadamard"], files["k2"])[0] == EXIT_USAGE


def test_config_applies_to_every_subcommand(files, monkeypatch):
    levels = []
    monkeypatch.setattr(cli, "set_log_level", levels.append)
    assert call("decide", files["hadamard"], "--config-name", "quick") == (0, "TRACTABLE\n", "")
    assert call("decide", files["f3"], "--certificate", files["cert"])[0] == 0
    assert call("validate", files["f3"], files["cert"], "--config-name", "quick")[:2] == (0, "VALID\n")
    assert len(levels) == 3
    for command in (["decide", files["hadamard"]], ["validate", files["f3"], files["cert"]]):
        code, out, err = call(*command, "--config-name", "no-such-config")
        assert code == EXIT_USAGE
        assert out == ""
        assert "config error" in err


def test_library_errors_exit_with_usage_status(files, monkeypatch):
    def broken(A):
        raise InternalInconsistency("twin classes disagree")

    monkeypatch.setattr(cli, "decide", broken)
    code, out, err = call("decide", files["hadamard"])
    assert code == EXIT_USAGE
    assert out == ""
    assert "twin classes disagree" in err


def test_corpus():
    code, out, _ = call("corpus", "--entries", "hadamard", "vertex-cover")
    assert code == 0
    assert "hadamard" in out
    assert "P-HARD step1:bulatov-grohe" in out
    assert "100/100" in out
    assert call("corpus", "--entries", "no-such-matrix")[0] == EXIT_USAGE
