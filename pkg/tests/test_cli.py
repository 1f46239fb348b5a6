import io
import json
import subprocess
import sys

import pytest

from binops.cli import run_command

PHI1 = "points: a b\na: b a\nb: b a\n"
PHI2 = "points: a b\na: a b\nb: b a\n"
E2 = "points: a b\na: a b\nb: a b\n"
BAD = "points: a b\na: a a\nb: a b\n"
Z2 = "elements: e g\ne: e g\ng: g e\n"
KLEIN = "elements: e a b c\ne: e a b c\na: a e c b\nb: b c e a\nc: c b a e\n"
NONASSOC = (
    "elements: p q r s t\n"
    "p: p q r s t\nq: q p s t r\nr: r t p q s\ns: s r t p q\nt: t s q r p\n"
)


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, text in [
        ("phi1.bop", PHI1),
        ("phi2.bop", PHI2),
        ("e2.bop", E2),
        ("bad.bop", BAD),
        ("z2.grp", Z2),
        ("klein.grp", KLEIN),
        ("loop.grp", NONASSOC),
        ("broken.bop", "points: a b\na: a c\nb: a b\n"),
    ]:
        p = tmp_path / name
        p.write_text(text)
        paths[name] = str(p)
    return paths


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, err = run("--json", *argv)
    return code, json.loads(out)


class TestExamples:
    def test_order(self):
        assert run("order", "-n", "3") == (0, "216\n", "")

    def test_check_distributive_phi2(self, files):
        code, out, _ = run("check-distributive", files["phi2.bop"], files["phi2.bop"])
        assert code == 1
        assert "t=b t'=a" in out  # t=1, t'=0
        assert out.startswith("1 of 1 ordered pairs fail\n")
        code, obj = run_json("check-distributive", files["phi2.bop"], files["phi2.bop"])
        assert code == 1 and obj["ok"] is False
        first = obj["witness"]["pairs"][0]
        assert first["pair"] == [files["phi2.bop"], files["phi2.bop"]]
        assert first["slices"] == {"t": "b", "t'": "a"}

    def test_represent_verify_z2(self, files):
        code, out, _ = run("represent", files["z2.grp"], "--verify")
        assert code == 0
        for key in ["injective", "homomorphism", "image_is_subgroup", "image_distributive", "isomorphic_to_source"]:
            assert f"{key}: true" in out
        assert "image_order: 2" in out


class TestCommands:
    def test_compose(self, files, tmp_path):
        code, out, _ = run("compose", files["phi1.bop"], files["phi2.bop"])
        assert code == 0
        assert out == "points: a b\na: b a\nb: a b\n"
        target = tmp_path / "out.bop"
        assert run("compose", files["phi1.bop"], files["phi1.bop"], "-o", str(target))[:2] == (0, "")
        assert target.read_text() == E2

    def test_invert(self, files):
        assert run("invert", files["phi2.bop"]) == (0, PHI2, "")
        code, out, _ = run("invert", files["bad.bop"])
        assert code == 1 and "witness" in out

    def test_slices(self, files):
        code, out, _ = run("slices", files["phi2.bop"])
        assert code == 0
        assert out == "a: a b  bijective\nb: b a  bijective\n"

    def test_validate(self, files):
        assert run("validate", files["phi1.bop"])[:2] == (0, "binop n=2 invertible=yes\n")
        code, out, _ = run("validate", files["klein.grp"])
        assert code == 0 and "identified=V4" in out
        code, obj = run_json("validate", files["loop.grp"])
        assert code == 1
        assert obj["witness"]["axiom"] == "NotAssociative"

    def test_closure_identify(self, files):
        code, out, _ = run("closure", files["phi1.bop"], files["phi2.bop"], "--identify")
        assert code == 0
        assert out.count("points:") == 4
        assert out.endswith("# identified: V4\n")
        code, obj = run_json("identify", files["phi1.bop"], files["phi2.bop"])
        assert obj["result"] == "V4" and obj["counts"] == {"order": 4}

    def test_census(self):
        code, out, _ = run("census", "-n", "2", "--exhaustive-inverse")
        assert code == 0
        assert out == "n=2 total=16 row_permutation=4 two_sided=4 formula=4\n"
        code, obj = run_json("census", "-n", "3")
        assert obj["counts"]["two_sided_invertible_ops"] is None
        assert obj["counts"]["row_permutation_ops"] == 216

    def test_enumerate(self):
        code, out, _ = run("enumerate", "-n", "2", "--invertible")
        assert code == 0
        blocks = out.split("\n\n")
        assert len(blocks) == 4
        assert blocks[0] == "points: 0 1\n0: 0 1\n1: 0 1"
        code, obj = run_json("enumerate", "-n", "3", "--limit", "5")
        assert obj["counts"] == {"emitted": 5}
        assert obj["result"][1] == [[0, 0, 0], [0, 0, 0], [0, 0, 1]]

    def test_represent_tables(self, files):
        code, out, _ = run("represent", files["klein.grp"])
        assert code == 0
        assert out.count("points: e a b c") == 4
        assert "# name: i_a" in out


class TestExitCodes:
    def test_usage(self):
        assert run()[0] == 2
        assert run("order")[0] == 2
        assert run("order", "-n", "0")[0] == 2
        assert run("frobnicate")[0] == 2

    def test_parse_error(self, files):
        code, out, err = run("check-invertible", files["broken.bop"])
        assert code == 2
        assert out == "" and "UnknownLabel" in err

    def test_missing_file(self, tmp_path):
        assert run("slices", str(tmp_path / "nope.bop"))[0] == 2

    def test_guard(self):
        assert run("enumerate", "-n", "5", "--invertible")[0] == 3
        assert run("census", "-n", "4")[0] == 3

    def test_guard_env(self, files, monkeypatch):
        monkeypatch.setenv("BINOP_GUARD_MAX", "2")
        assert run("closure", files["phi1.bop"], files["phi2.bop"])[0] == 3

    def test_json_error_object(self, files):
        code, obj = run_json("check-invertible", files["broken.bop"])
        assert code == 2 and obj["ok"] is False


@pytest.mark.parametrize(
    "argv",
    [
        ["order", "-n", "2"],
        ["census", "-n", "1"],
        ["enumerate", "-n", "1"],
    ],
)
def test_json_always_has_ok(argv):
    code, obj = run_json(*argv)
    assert code == 0 and obj["ok"] is True


def test_module_entry_point(files):
    proc = subprocess.run(
        [sys.executable, "-m", "binops", "check-invertible", files["bad.bop"]],
        capture_output=True, text=True,
    )
    assert proc.returncode == 1
    assert "witness: slice a sends a and b to a" in proc.stdout
