"""CLI subcommands, output shapes, and exit codes."""

import json
import subprocess
import sys

import pytest

from trdeg.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestDep:
    def test_integer_pair_json(self, capsys):
        code, out, _ = run(capsys, "dep", "--elems", "12,18", "--order", "lex",
                           "--maxdeg", "3", "--json")
        assert code == 0
        data = json.loads(out)
        assert data["poly"] == [["1", [[2, 2]]], ["-27", [[1, 1]]]]
        assert data["trailing"] == [[2, 2]]
        assert data["verified"] is True

    def test_integer_pair_human(self, capsys):
        code, out, _ = run(capsys, "dep", "--elems", "12,18", "--order", "lex",
                           "--maxdeg", "3")
        assert code == 0
        assert out.splitlines()[0] == "dependent: f = x2^2 - 27*x1"

    def test_no_relation_exit_code(self, capsys):
        code, out, _ = run(capsys, "dep", "--elems", "2", "--maxdeg", "6")
        assert code == 1
        assert out.strip() == "no relation up to degree 6"

    def test_mod6_example(self, capsys):
        code, out, _ = run(capsys, "dep", "--coeffs", "Zmod(6)", "--ring", "Zmod(6)",
                           "--elems", "2", "--order", "lex", "--maxdeg", "3", "--json")
        assert code == 0
        data = json.loads(out)
        assert data["poly"] == [["1", [[1, 1]]], ["5", [[1, 3]]]]

    def test_polynomial_algebra(self, capsys):
        code, out, _ = run(capsys, "dep", "--coeffs", "Poly(GF(7); t1,t2)",
                           "--ring", "Poly(GF(7); t1,t2)", "--elems", "t1,t1*t2",
                           "--order", "lex:x1>x2", "--maxdeg", "1")
        assert code == 0
        assert out.startswith("dependent:")

    def test_unsupported_config(self, capsys):
        code, _, err = run(capsys, "dep", "--coeffs", "Zmod(5)", "--ring", "ZZ",
                           "--elems", "2")
        assert code == 2
        assert err.startswith("error:")

    def test_bad_element_text(self, capsys):
        code, _, err = run(capsys, "dep", "--elems", "2,,3")
        assert code == 2
        assert "empty element" in err


class TestCl:
    def test_mod12(self, capsys):
        code, out, _ = run(capsys, "cl", "--ring", "Zmod(12)", "--elems", "2",
                           "--maxexp", "5")
        assert code == 0
        assert out.startswith("membership holds with exponents (2)")

    def test_not_found(self, capsys):
        code, out, _ = run(capsys, "cl", "--elems", "2", "--maxexp", "5")
        assert code == 1
        assert out.strip() == "no exponent vector up to 5 worked"

    def test_submonic_conversion_printed(self, capsys):
        code, out, _ = run(capsys, "cl", "--ring", "Zmod(12)", "--elems", "2",
                           "--maxexp", "5", "--submonic")
        assert code == 0
        lines = out.splitlines()
        assert lines[0].startswith("membership holds")
        assert lines[1].startswith("dependent: f =")

    def test_json(self, capsys):
        code, out, _ = run(capsys, "cl", "--ring", "ZZ", "--elems", "12,18",
                           "--maxexp", "4", "--json")
        assert code == 0
        data = json.loads(out)
        assert data["exponents"] == [0, 2]
        assert data["coeffs"] == ["27", "0"]


class TestDimAndWeights:
    def test_dim(self, capsys):
        for text, expected in [("ZZ", "1"), ("Poly(QQ; x,y)", "2"),
                               ("Quot(Poly(QQ; x,y); [x*y])", "1")]:
            code, out, _ = run(capsys, "dim", "--ring", text)
            assert code == 0 and out.strip() == expected

    def test_weights(self, capsys):
        code, out, _ = run(capsys, "weights", "--order", "lex",
                           "--trailing", "0,2", "--above", "1,0")
        assert code == 0 and out.strip() == "3,1"

    def test_weights_precondition_error(self, capsys):
        code, _, err = run(capsys, "weights", "--order", "lex",
                           "--trailing", "2,0", "--above", "1,0")
        assert code == 2 and "precondition" in err


class TestMember:
    def test_member_with_cofactors(self, capsys):
        code, out, _ = run(capsys, "member", "--ring", "Poly(QQ; t1,t2)",
                           "--gens", "t1^2*t2^2,t1^3*t2", "--elem", "t1^3*t2")
        assert code == 0
        assert out.splitlines()[0] == "member"

    def test_not_member_prints_normal_form(self, capsys):
        code, out, _ = run(capsys, "member", "--ring", "Poly(QQ; t1,t2)",
                           "--gens", "t1^2*t2^2,t1^3*t2", "--elem", "t1^2*t2")
        assert code == 1
        assert out.strip() == "not a member; normal form t1^2*t2"

    def test_member_json(self, capsys):
        code, out, _ = run(capsys, "member", "--ring", "Poly(QQ; x,y)",
                           "--gens", "x-y", "--elem", "x^2-y^2", "--json")
        assert code == 0
        data = json.loads(out)
        assert data["member"] is True and len(data["cofactors"]) == 1

    def test_requires_field_base(self, capsys):
        code, _, err = run(capsys, "member", "--ring", "Poly(ZZ; x)",
                           "--gens", "x", "--elem", "x^2")
        assert code == 2 and "field" in err


class TestVerify:
    def test_roundtrip_via_file(self, capsys, tmp_path):
        code, out, _ = run(capsys, "dep", "--elems", "12,18", "--order", "lex",
                           "--maxdeg", "3", "--json")
        path = tmp_path / "cert.json"
        path.write_text(out)
        code, out, _ = run(capsys, "verify", "--cert", str(path))
        assert code == 0 and out.strip() == "verified"

    def test_tampered_certificate_fails(self, capsys, tmp_path):
        code, out, _ = run(capsys, "dep", "--elems", "12,18", "--order", "lex",
                           "--maxdeg", "3", "--json")
        data = json.loads(out)
        data["poly"][1][0] = "-26"
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(data))
        code, out, _ = run(capsys, "verify", "--cert", str(path))
        assert code == 1
        assert out.strip() == "verification failed: relation does not evaluate to zero"

    def test_cl_certificate_file(self, capsys, tmp_path):
        code, out, _ = run(capsys, "cl", "--ring", "Zmod(12)", "--elems", "2",
                           "--maxexp", "5", "--json")
        path = tmp_path / "cl.json"
        path.write_text(out)
        code, out, _ = run(capsys, "verify", "--cert", str(path))
        assert code == 0 and out.strip() == "verified"

    def test_unrecognized_shape(self, capsys, tmp_path):
        path = tmp_path / "junk.json"
        path.write_text('{"foo": 1}')
        code, _, err = run(capsys, "verify", "--cert", str(path))
        assert code == 2 and "unrecognized certificate shape" in err

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "verify", "--cert", str(tmp_path / "nope.json"))
        assert code == 2 and err.startswith("error:")


class TestDepMatrix:
    def test_summary_line(self, capsys):
        code, out, _ = run(capsys, "depmatrix", "--elems", "2,3,4,5", "--size", "2",
                           "--order", "lex", "--maxdeg", "4")
        assert code == 0
        assert out.splitlines()[0] == (
            "6 tuples of size 2: 6 dependent, 0 without a relation up to degree 4, "
            "0 resource-exceeded"
        )

    def test_independent_candidates_listed(self, capsys):
        code, out, _ = run(capsys, "depmatrix", "--elems", "2", "--size", "1",
                           "--maxdeg", "6")
        assert code == 0
        assert "independent candidate: (2)" in out

    def test_json(self, capsys):
        code, out, _ = run(capsys, "depmatrix", "--elems", "2,4", "--size", "2",
                           "--maxdeg", "4", "--json")
        assert code == 0
        data = json.loads(out)
        assert data["counts"]["dependent"] == 1


class TestExperiment:
    def test_csv_deterministic(self, capsys):
        argv = ["experiment", "--seed", "9", "--trials", "5", "--csv"]
        code_a, out_a, _ = run(capsys, *argv)
        code_b, out_b, _ = run(capsys, *argv)
        assert code_a == code_b == 0
        # timing column varies; everything else must not
        strip = lambda text: [r.rsplit(",", 1)[0] for r in text.splitlines()]
        assert strip(out_a) == strip(out_b)
        assert out_a.splitlines()[0] == "trial,arity,verdict,cert_degree,millis"

    def test_canonical_output_identical(self, capsys):
        argv = ["experiment", "--seed", "9", "--trials", "5", "--canonical"]
        _, out_a, _ = run(capsys, *argv)
        _, out_b, _ = run(capsys, *argv)
        assert out_a == out_b
        assert "millis" not in out_a

    def test_out_file(self, capsys, tmp_path):
        path = tmp_path / "report.json"
        code, out, _ = run(capsys, "experiment", "--seed", "1", "--trials", "3",
                           "--canonical", "--out", str(path))
        assert code == 0
        assert out.startswith(f"wrote {path}:")
        data = json.loads(path.read_text())
        assert data["spec"]["trials"] == 3


class TestEntryPoint:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "trdeg.cli", "dim", "--ring", "ZZ"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0 and proc.stdout.strip() == "1"

    def test_console_script(self):
        proc = subprocess.run(
            ["trdeg", "dep", "--elems", "12,18", "--order", "lex", "--maxdeg", "3"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout.splitlines()[0] == "dependent: f = x2^2 - 27*x1"

    def test_usage_error_exit_code(self):
        proc = subprocess.run(
            [sys.executable, "-m", "trdeg.cli", "dep"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 2
