import json

from padic_tate.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def records(out):
    return [json.loads(line) for line in out.strip().splitlines()]


class TestDispatch:
    def test_tate_j_worked_example(self, capsys):
        code, out = run_cli(capsys, "tate", "j", "--p", "5", "--q", "5^2",
                            "--prec", "40", "--format", "structured")
        assert code == 0
        rec = records(out)[0]
        assert rec["v_j"] == "-2"

    def test_exp_trivial(self, capsys):
        code, out = run_cli(capsys, "exp", "--p", "5", "--x", "0", "--prec", "10")
        assert code == 0
        assert "1 + O(pi^10)" in out

    def test_global_flags_before_subcommand(self, capsys):
        code, out = run_cli(capsys, "--p", "5", "--prec", "10", "exp", "--x", "0")
        assert code == 0
        assert "1 + O(pi^10)" in out

    def test_verify_hom_deterministic(self, capsys):
        args = ("tate", "verify-hom", "--p", "5", "--q", "5^2", "--trials", "4",
                "--seed", "1", "--prec", "40", "--format", "structured")
        code1, out1 = run_cli(capsys, *args)
        code2, out2 = run_cli(capsys, *args)
        assert code1 == code2 == 0
        assert out1 == out2
        assert sum(1 for r in records(out1) if r["name"].startswith("hom/")) == 4

    def test_seed_env_override(self, capsys, monkeypatch):
        base = ("tate", "verify-ode", "--p", "5", "--q", "5^2", "--trials", "2",
                "--prec", "40", "--format", "structured")
        _, out_seed3 = run_cli(capsys, *base, "--seed", "3")
        monkeypatch.setenv("PADIC_TATE_SEED", "3")
        _, out_env = run_cli(capsys, *base, "--seed", "999")
        assert out_env == out_seed3


class TestExitCodes:
    def test_usage_error_is_2(self, capsys):
        assert main(["exp", "--p", "5", "--x", "not a literal"]) == 2

    def test_unknown_flag_is_2(self, capsys):
        assert main(["exp", "--nope", "1"]) == 2

    def test_precision_error_is_3(self, capsys):
        # rv needs 11 unit digits but only 5 are known
        assert main(["rv", "--p", "5", "--x", "5", "--lambda", "10",
                     "--prec", "6"]) == 3
        # imprecise zero has no leading-term class
        assert main(["rv", "--p", "5", "--x", "0", "--prec", "6"]) == 3

    def test_domain_error_is_2(self, capsys):
        assert main(["log", "--p", "5", "--y", "2", "--prec", "6"]) == 2

    def test_verification_failure_is_1(self, tmp_path, capsys):
        # a lattice that is definitely not persistently likely
        e1 = tmp_path / "e1.json"
        e1.write_text(json.dumps({"rows": 2, "cols": 1, "entries": [[1], [0]]}))
        code = main(["geom", "plikely", "--V", str(e1), "--S", str(e1),
                     "--T", str(e1), "--n", "2"])
        assert code == 1


class TestFileFormats:
    def test_matrix_file_and_inline_agree(self, tmp_path, capsys):
        mat = tmp_path / "m.json"
        mat.write_text(json.dumps({"rows": 2, "cols": 2, "entries": [[2, 4], [6, 8]]}))
        _, out_file = run_cli(capsys, "lattice", "smith", "--matrix", str(mat),
                              "--format", "structured")
        _, out_inline = run_cli(capsys, "lattice", "smith", "--matrix", "2,4;6,8",
                                "--format", "structured")
        assert out_file == out_inline
        assert json.loads(records(out_file)[0]["D"]) == [[2, 0], [0, 4]]

    def test_wdiv_round_trip(self, tmp_path, capsys):
        g = {"nvars": 2, "degree_cap": 8, "terms": [{"exp": [0, 4], "coeff": "1"}]}
        f = {"nvars": 2, "degree_cap": 8,
             "terms": [{"exp": [0, 2], "coeff": "1"}, {"exp": [1, 0], "coeff": "5"}]}
        gp, fp = tmp_path / "g.json", tmp_path / "f.json"
        gp.write_text(json.dumps(g))
        fp.write_text(json.dumps(f))
        code, out = run_cli(capsys, "wdiv", "--g", str(gp), "--f", str(fp),
                            "--prec", "12", "--format", "structured")
        assert code == 0
        rec = records(out)[0]
        r_terms = json.loads(rec["r"])["terms"]
        assert r_terms == [{"exp": [2, 0], "coeff": "pi^2"}]
        # emitted coefficients re-parse under the element grammar
        q_terms = json.loads(rec["q"])["terms"]
        from padic_tate.field import make_field
        from padic_tate.parsing import parse_element
        field = make_field(5)
        for term in q_terms:
            parse_element(term["coeff"], field, 12)

    def test_balls_and_rv(self, capsys):
        code, out = run_cli(capsys, "balls", "same", "--C", "0", "--lambda", "0",
                            "--x", "5", "--y", "30", "--format", "structured")
        assert code == 0 and records(out)[0]["same"] is True
        code, out = run_cli(capsys, "rv", "--x", "5", "--lambda", "0",
                            "--prec", "10", "--format", "structured")
        assert code == 0 and records(out)[0]["valuation"] == "1"

    def test_relations_cli(self, capsys):
        code, out = run_cli(capsys, "relations", "search", "--z", "5", "--z", "2*5",
                            "--height", "3", "--prec", "50", "--format", "structured")
        assert code == 0
        rec = records(out)[0]
        assert [2, -1] in json.loads(rec["relations"])
        assert "false_positive_bound" in rec


class TestHarnessCommand:
    def test_lattice_suite_passes(self, capsys):
        code, out = run_cli(capsys, "harness", "--suite", "lattice",
                            "--format", "structured")
        assert code == 0
        recs = records(out)
        assert recs[-1]["summary"] is True and recs[-1]["ok"] is True

    def test_determinism_across_runs(self, capsys):
        args = ("harness", "--suite", "balls", "--seed", "5", "--format", "structured")
        _, out1 = run_cli(capsys, *args)
        _, out2 = run_cli(capsys, *args)
        assert out1 == out2


class TestPointRoundTrip:
    def test_map_output_feeds_add(self, capsys):
        # phi(7) + phi(1/7) must be the identity; coordinates are pasted
        # back from the map output verbatim
        _, out7 = run_cli(capsys, "tate", "map", "--q", "5^2", "--u", "7",
                          "--format", "structured")
        _, out_inv = run_cli(capsys, "tate", "map", "--q", "5^2", "--u", "1/7",
                             "--format", "structured")
        p7, pinv = records(out7)[0], records(out_inv)[0]
        code, out = run_cli(capsys, "tate", "add", "--q", "5^2",
                            "--x1", p7["x"], "--y1", p7["y"],
                            "--x2", pinv["x"], "--y2", pinv["y"],
                            "--format", "structured")
        assert code == 0
        assert records(out)[0]["kind"] == "identity"
