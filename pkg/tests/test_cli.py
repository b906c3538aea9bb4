import json
import subprocess
import sys
from pathlib import Path

import pytest

from mdslab.field import GF
from mdslab.matrix import SquareMatrix, identity
from mdslab.matrixfile import format_matrix, parse_matrices
from mdslab.properties import is_involutory

from conftest import complete_orthogonal_4, load_tuples, nonsymmetric_semi_involutory

GOLDEN = Path(__file__).parent / "golden"


def run(*args, cwd=None, stdin=None):
    return subprocess.run(
        [sys.executable, "-m", "mdslab", *args], capture_output=True, text=True, cwd=cwd, input=stdin
    )


def write(path, *mats):
    path.write_text("".join(format_matrix(M) for M in mats))
    return path


@pytest.fixture
def a1(tmp_path):
    return write(tmp_path / "a1.mds", complete_orthogonal_4(GF(3), load_tuples("lightest_gf8.txt")[0]))


def test_check_orthogonal_holds(a1):
    r = run("check", str(a1), "--property", "orthogonal")
    assert r.returncode == 0
    assert "orthogonal" in r.stdout and "yes" in r.stdout


def test_check_identity_not_mds(tmp_path):
    p = write(tmp_path / "id.mds", identity(GF(3), 3))
    assert run("check", str(p), "--property", "mds").returncode == 1


def test_check_nonsymmetric_witness(tmp_path):
    M, _, _ = nonsymmetric_semi_involutory()
    p = write(tmp_path / "r.mds", M)
    r = run("check", str(p), "--property", "semi-involutory", "--json")
    assert r.returncode == 0
    (res,) = json.loads(r.stdout)["results"]
    assert res["holds"] is True
    d = [int(x, 16) for x in res["witness"]["d"]]
    dp = [int(x, 16) for x in res["witness"]["d_prime"]]
    from mdslab.matrix import inverse
    from mdslab.properties import DiagonalPair

    assert DiagonalPair(tuple(d), tuple(dp)).apply(M) == inverse(M)
    assert run("check", str(p), "--property", "symmetric").returncode == 1


def test_check_parse_error_exit_2(tmp_path):
    p = tmp_path / "bad.mds"
    p.write_text("gf m=3 poly=0xb n=2\n1 2\n3 z\n")
    r = run("check", str(p))
    assert r.returncode == 2
    assert "line 3, column 3" in r.stderr


def test_check_singular_exit_3(tmp_path):
    p = write(tmp_path / "s.mds", SquareMatrix(GF(3), [[1, 1], [1, 1]]))
    assert run("check", str(p), "--property", "semi-involutory").returncode == 3


def test_decompose_compose_round_trip(tmp_path, a1):
    r = run("decompose", str(a1))
    assert r.returncode == 0
    d1, m1, d2 = parse_matrices(r.stdout)
    assert m1.rows()[0] == (1, 1, 1, 1)
    assert all(row[0] == 1 for row in m1.rows())
    dec = tmp_path / "dec.mds"
    dec.write_text(r.stdout)
    c = run("compose", str(dec))
    assert c.returncode == 0
    assert c.stdout == a1.read_text()


def test_decompose_all_ones(tmp_path):
    ones = SquareMatrix(GF(3), [[1] * 3] * 3)
    p = write(tmp_path / "ones.mds", ones)
    d1, m1, d2 = parse_matrices(run("decompose", str(p)).stdout)
    assert d1 == identity(GF(3), 3) == d2
    assert m1 == ones


def test_decompose_zero_entry_exit_3(tmp_path):
    p = write(tmp_path / "z.mds", identity(GF(3), 3))
    r = run("decompose", str(p))
    assert r.returncode == 3
    assert "(1, 2)" in r.stderr


def test_count_orthogonal_both():
    r = run("count", "--n", "3", "--m", "5", "--class", "orthogonal-mds", "--both", "--json")
    assert r.returncode == 0
    res = json.loads(r.stdout)["results"]
    assert res["enumerated"] == res["closed_form"] == "24360"
    assert res["match"] is True


def test_count_orthogonal_4_enumerate():
    r = run("count", "--n", "4", "--m", "3", "--class", "orthogonal-mds", "--enumerate", "--json")
    assert r.returncode == 0
    assert json.loads(r.stdout)["results"]["enumerated"] == "720"


def test_count_budget_refusal():
    r = run("count", "--n", "4", "--m", "4", "--class", "representative-semi-involutory", "--enumerate")
    assert r.returncode == 4
    assert str(15**9) in r.stderr


def test_count_closed_form_large_is_exact():
    r = run(
        "count", "--n", "4", "--m", "8", "--class", "semi-involutory-mds",
        "--closed-form", "--representative-count", "961006331376", "--json",
    )
    assert r.returncode == 0
    assert json.loads(r.stdout)["results"]["closed_form"] == str(255**7 * 961006331376)


def test_count_unsupported_exit_2():
    r = run("count", "--n", "5", "--m", "3", "--class", "orthogonal-mds", "--enumerate")
    assert r.returncode == 2


def test_usage_error_exit_2():
    assert run("count", "--n", "3").returncode == 2
    assert run("frobnicate").returncode == 2


def test_search_light_emit(tmp_path):
    out = tmp_path / "light.txt"
    r = run("search-light", "--n", "4", "--m", "3", "--emit", str(out), "--json")
    assert r.returncode == 0
    res = json.loads(r.stdout)["results"]
    assert res["min_cost"] == "64" and res["count"] == "144"
    assert out.read_text() == (Path(__file__).parent / "fixtures" / "lightest_gf8.txt").read_text()


def test_search_light_unsupported():
    assert run("search-light", "--n", "4", "--m", "5").returncode == 2


def test_lift_orthogonal_recovers_original(tmp_path, a1):
    _, m1, _ = parse_matrices(run("decompose", str(a1)).stdout)
    p = write(tmp_path / "m1.mds", m1)
    r = run("lift", str(p), "--kind", "orthogonal")
    assert r.returncode == 0
    assert r.stdout == a1.read_text()


def test_lift_involutory_all(tmp_path):
    F = GF(3)
    p = write(tmp_path / "rep.mds", SquareMatrix(F, [[1, 1, 1], [1, 2, 3], [1, 3, 6]]))
    r = run("lift", str(p), "--kind", "involutory", "--all")
    assert r.returncode == 0
    fam = parse_matrices(r.stdout)
    assert len(fam) == 49 and all(is_involutory(M) for M in fam)
    one = tmp_path / "one.mds"
    one.write_text(format_matrix(fam[10]))
    assert run("check", str(one), "--property", "involutory").returncode == 0


def test_lift_not_liftable_exit_3(tmp_path):
    p = write(tmp_path / "bad.mds", SquareMatrix(GF(3), [[1, 1, 1], [1, 2, 3], [1, 3, 5]]))
    r = run("lift", str(p), "--kind", "involutory", "--lambdas", "1", "1")
    assert r.returncode == 3
    assert "not liftable" in r.stderr


def test_poly_mismatch_is_usage_error(a1):
    assert run("check", str(a1), "--poly", "0xd").returncode == 2


def test_stdin_input(a1):
    r = run("check", "-", "--property", "mds", stdin=a1.read_text())
    assert r.returncode == 0


@pytest.mark.parametrize(
    "name,args",
    [
        ("check_a1.json", ["check", "a1.mds", "--property", "all", "--json"]),
        ("decompose_a1.json", ["decompose", "a1.mds", "--json"]),
        ("count_omds_3_4.json", ["count", "--n", "3", "--m", "4", "--class", "orthogonal-mds", "--both", "--json"]),
    ],
)
def test_json_golden_and_stable(a1, name, args):
    first = run(*args, cwd=a1.parent)
    second = run(*args, cwd=a1.parent)
    assert first.returncode == 0
    assert first.stdout == second.stdout
    assert first.stdout == (GOLDEN / name).read_text()
