import json

import pytest

from clutters import gallery, serialize
from clutters.cli import main


def run_cli(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


def write_clutter(tmp_path, clutter, name="input.json", extra=None):
    data = serialize.clutter_to_json(clutter)
    if extra:
        data.update(extra)
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return str(path)


class TestChordalCommand:
    def test_chordal_exit_zero(self, capsys, tmp_path, fig_c):
        code, report = run_cli(capsys, "check-chordal", write_clutter(tmp_path, fig_c))
        assert code == 0
        assert report["verdict"] == "chordal"
        assert report["certificate"]["elements"]
        assert report["stats"]["nodes"] >= 1

    def test_not_chordal_exit_one(self, capsys, tmp_path, fig_d):
        code, report = run_cli(capsys, "check-chordal", write_clutter(tmp_path, fig_d))
        assert code == 1 and report["verdict"] == "not_chordal"

    def test_greedy_inconclusive_exit_two(self, capsys, tmp_path, fig_d):
        code, report = run_cli(
            capsys, "check-chordal", write_clutter(tmp_path, fig_d), "--mode", "greedy"
        )
        assert code == 2 and report["verdict"] == "inconclusive"

    def test_certificate_written(self, capsys, tmp_path, fig_c):
        outdir = tmp_path / "certs"
        code, report = run_cli(
            capsys,
            "check-chordal",
            write_clutter(tmp_path, fig_c),
            "--output-dir",
            str(outdir),
        )
        assert code == 0
        stored = json.loads((outdir / "check-chordal-certificate.json").read_text())
        assert stored == report["certificate"]


class TestDecomposableCommand:
    def test_refuted_exit_one(self, capsys, tmp_path, stubborn):
        code, report = run_cli(
            capsys, "check-decomposable", write_clutter(tmp_path, stubborn)
        )
        assert code == 1 and report["verdict"] == "refuted"
        assert "universe" in report["stats"]["note"]

    def test_found_exit_zero(self, capsys, tmp_path, glued_pair):
        code, report = run_cli(
            capsys, "check-decomposable", write_clutter(tmp_path, glued_pair)
        )
        assert code == 0 and report["certificate"]["kind"] == "union"


class TestIdealCommands:
    def test_linear_quotients_in_order(self, capsys, tmp_path):
        path = tmp_path / "ideal.json"
        path.write_text(
            json.dumps(
                {
                    "n": 5,
                    "squarefree_generators": [
                        [1, 2, 3], [1, 2, 4], [1, 3, 4], [3, 4, 5], [2, 4, 5], [2, 3, 5]
                    ],
                }
            )
        )
        code, report = run_cli(capsys, "check-linear-quotients", str(path))
        assert code == 0 and report["verdict"] == "linear-quotients"

    def test_failing_order(self, capsys, tmp_path):
        path = tmp_path / "ideal.json"
        path.write_text(json.dumps({"n": 4, "squarefree_generators": [[1, 2], [3, 4]]}))
        code, report = run_cli(capsys, "check-linear-quotients", str(path))
        assert code == 1 and report["stats"]["fail_index"] == 1

    def test_find_order_none(self, capsys, tmp_path):
        path = tmp_path / "ideal.json"
        path.write_text(json.dumps({"n": 4, "squarefree_generators": [[1, 2], [3, 4]]}))
        code, report = run_cli(capsys, "find-lq-order", str(path))
        assert code == 1 and report["verdict"] == "none"

    def test_betti_linear(self, capsys, tmp_path):
        path = tmp_path / "ideal.json"
        path.write_text(json.dumps({"n": 2, "squarefree_generators": [[1, 2]]}))
        code, report = run_cli(capsys, "betti", str(path))
        assert code == 0 and report["verdict"] == "linear"
        assert report["certificate"]["entries"] == [{"i": 0, "j": 2, "beta": 1}]

    def test_betti_power_nonlinear(self, capsys, tmp_path, square_nonlinear):
        from clutters import complement_ideal

        ideal = complement_ideal(square_nonlinear)
        path = tmp_path / "ideal.json"
        path.write_text(json.dumps(serialize.ideal_to_json(ideal)))
        code, report = run_cli(capsys, "betti", str(path), "--power", "2", "--field", "F2")
        assert code == 1 and report["verdict"] == "not-linear"
        assert report["stats"]["regularity"] == 7


class TestComplexCommands:
    def test_shelling_search(self, capsys, tmp_path):
        path = tmp_path / "cx.json"
        path.write_text(json.dumps({"n": 3, "facets": [[1, 2], [2, 3]]}))
        code, report = run_cli(capsys, "check-shelling", str(path))
        assert code == 0 and report["verdict"] == "shellable"

    def test_shelling_order_verification(self, capsys, tmp_path):
        path = tmp_path / "cx.json"
        path.write_text(
            json.dumps({"n": 4, "facets": [[1, 2], [3, 4]], "order": [[1, 2], [3, 4]]})
        )
        code, report = run_cli(capsys, "check-shelling", str(path))
        assert code == 1 and report["verdict"] == "not-a-shelling"

    def test_extendable(self, capsys, tmp_path):
        path = tmp_path / "cx.json"
        path.write_text(json.dumps({"n": 4, "facets": [[1, 2], [2, 3], [3, 4], [1, 4]]}))
        code, report = run_cli(capsys, "check-extendable", str(path))
        assert code == 0 and report["verdict"] == "extendable"

    def test_obstructed_with_witness(self, capsys, tmp_path):
        path = tmp_path / "cx.json"
        path.write_text(
            json.dumps({"n": 6, "facets": [[1, 2], [2, 3], [4, 5], [5, 6]]})
        )
        code, report = run_cli(capsys, "check-extendable", str(path))
        assert code == 1 and report["certificate"]["stuck_shelling"]


class TestRecognize:
    def test_quasiforest(self, capsys, tmp_path):
        path = tmp_path / "cx.json"
        path.write_text(json.dumps({"n": 5, "facets": [[1, 2, 3], [3, 4, 5]]}))
        code, report = run_cli(capsys, "recognize", str(path), "--kind", "quasiforest")
        assert code == 0 and report["certificate"]["leaf_order"]

    def test_stable_fails_with_witness(self, capsys, tmp_path, square_nonlinear):
        from clutters import complement_ideal

        path = tmp_path / "ideal.json"
        path.write_text(
            json.dumps(serialize.ideal_to_json(complement_ideal(square_nonlinear)))
        )
        code, report = run_cli(capsys, "recognize", str(path), "--kind", "stable")
        assert code == 1 and report["verdict"] == "not-stable"
        assert report["certificate"]["monomial"]


class TestSimonVerify:
    def test_small(self, capsys):
        code, report = run_cli(capsys, "simon-verify", "--n", "4", "--d", "3")
        assert code == 0
        cert = report["certificate"]
        assert cert["equivalence_holds"] and cert["num_residual_states"] == 12


class TestErrors:
    def test_malformed_json_reports_position(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"n": 4, "d": 3, "circuits": [[1,2,]]}')
        code, report = run_cli(capsys, "check-chordal", str(path))
        assert code == 3
        assert "line" in report and "column" in report

    def test_missing_file(self, capsys):
        code, report = run_cli(capsys, "check-chordal", "/nonexistent.json")
        assert code == 3

    def test_bad_schema(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"n": 4, "circuits": [[1, 2]]}))
        code, report = run_cli(capsys, "check-chordal", str(path))
        assert code == 3


class TestExamples:
    def test_listing(self, capsys):
        code, listing = run_cli(capsys, "example", "--list")
        assert code == 0 and set(listing) == set(gallery.INSTANCES)

    @pytest.mark.parametrize("name", sorted(gallery.INSTANCES))
    def test_pinned_verdicts_hold(self, capsys, name):
        code, report = run_cli(capsys, "example", name)
        assert code == 0, report
        assert report["stats"]["expected_verdicts_hold"]

    def test_unknown_name(self, capsys):
        code, report = run_cli(capsys, "example", "nope")
        assert code == 3
