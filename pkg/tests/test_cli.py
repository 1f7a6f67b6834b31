import json

import pytest

from distsym.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestChartable:
    def test_json_shape(self, capsys):
        code, out, _ = run_cli(capsys, "chartable", "2", "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["n"] == 2
        assert payload["classes"] == ["2;-", "1,1;-", "1;1", "-;2", "-;1,1"]
        assert payload["rows"]["2;-"] == {c: 1 for c in payload["classes"]}
        assert payload["rows"]["1;1"]["1,1;-"] == 2

    def test_table_mode(self, capsys):
        code, out, _ = run_cli(capsys, "chartable", "1")
        assert code == 0
        assert "1;-" in out and "-;1" in out


class TestXiCommand:
    def test_route_all(self, capsys):
        code, out, _ = run_cli(capsys, "xi", "1", "--route=all", "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["agreement"]["agree"] is True
        assert payload["agreement"]["routes_compared"] == ["A", "B", "C"]
        char = payload["routes"]["A"]["character"]
        assert [char[c] for c in ("1,1;-", "2;-", "1;1", "-;2", "-;1,1")] == [
            2,
            2,
            0,
            2,
            -2,
        ]

    def test_single_route(self, capsys):
        code, out, _ = run_cli(capsys, "xi", "2", "--route=B", "--json")
        assert code == 0
        payload = json.loads(out)
        assert list(payload["routes"]) == ["B"]

    def test_format_table(self, capsys):
        code, out, _ = run_cli(capsys, "xi", "1", "--format=table")
        assert code == 0
        assert "decomposition" in out

    def test_json_deterministic(self, capsys):
        _, first, _ = run_cli(capsys, "xi", "2", "--json")
        _, second, _ = run_cli(capsys, "xi", "2", "--json")
        assert first == second


class TestCellsCommands:
    def test_distinguished_rank2(self, capsys):
        code, out, _ = run_cli(capsys, "distinguished", "--n", "1", "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["count"] == 3
        assert "0,1,2|-" in payload["union"]
        assert payload["cuspidal_present"] is True

    def test_cells_matches_distinguished(self, capsys):
        _, via_cells, _ = run_cli(capsys, "cells", "--rank", "2", "--json")
        _, via_dist, _ = run_cli(capsys, "distinguished", "--n", "1", "--json")
        assert via_cells == via_dist

    def test_odd_rank_is_empty(self, capsys):
        code, out, _ = run_cli(capsys, "cells", "--rank", "5", "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["cells"] == [] and payload["count"] == 0

    def test_text_mode(self, capsys):
        code, out, _ = run_cli(capsys, "distinguished", "--n", "1")
        assert code == 0
        assert "Z = 0,2|1" in out


class TestOracleCommand:
    def test_verify(self, capsys):
        code, out, _ = run_cli(capsys, "oracle", "verify", "--max-n", "1")
        assert code == 0
        assert "FAIL" not in out and "PASS" in out


class TestVerifyCommand:
    def test_passes(self, capsys):
        code, out, _ = run_cli(capsys, "verify")
        assert code == 0
        assert "FAIL" not in out
        assert out.count("NOTED") == 2

    def test_json(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["ok"] is True
        statuses = {c["status"] for c in payload["checks"]}
        assert statuses == {"pass", "discrepancy-documented"}


class TestUsageErrors:
    def test_unknown_command(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["bogus"])
        assert exc.value.code == 2

    def test_unknown_flag(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["xi", "1", "--frobnicate"])
        assert exc.value.code == 2

    def test_rank_cap(self, capsys, monkeypatch):
        monkeypatch.setenv("DISTSYM_MAX_RANK", "2")
        with pytest.raises(SystemExit) as exc:
            main(["chartable", "3"])
        assert exc.value.code == 2
        monkeypatch.setenv("DISTSYM_MAX_RANK", "4")
        assert main(["chartable", "3"]) == 0
