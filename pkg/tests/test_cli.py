import json

from sumchoice.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestChiSc:
    def test_wheel_json(self, capsys):
        code, out, _ = run(capsys, "chi-sc", "--family", "wheel:4", "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["chi_sc"] == 12
        assert payload["gb"] == 13
        assert payload["sc_greedy"] is False

    def test_cycle5(self, capsys):
        code, out, _ = run(capsys, "chi-sc", "--family", "cycle:5", "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["chi_sc"] == 10 and payload["sc_greedy"] is True

    def test_single_vertex_graph6(self, capsys):
        code, out, _ = run(capsys, "chi-sc", "--graph6", "@", "--json")
        assert code == 0
        assert json.loads(out)["chi_sc"] == 1

    def test_bad_graph6(self, capsys):
        code, _, err = run(capsys, "chi-sc", "--graph6", "D")
        assert code == 2 and "error" in err

    def test_cache_env(self, capsys, tmp_path, monkeypatch):
        cache = tmp_path / "memo.jsonl"
        monkeypatch.setenv("SUMCHOICE_CACHE", str(cache))
        code, _, _ = run(capsys, "chi-sc", "--family", "bipartite:2,3")
        assert code == 0 and cache.exists()
        text = cache.read_text()
        assert '"chi_sc": 10' in text


class TestChoosable:
    def test_triangle_witness(self, capsys):
        code, out, _ = run(capsys, "choosable", "--family", "complete:3",
                           "--sizes", "2,2,2", "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["choosable"] is False
        assert payload["witness"] == [[0, 1], [0, 1], [0, 1]]

    def test_c4_choosable(self, capsys):
        code, out, _ = run(capsys, "choosable", "--family", "cycle:4",
                           "--sizes", "2,2,2,2", "--json")
        assert code == 0 and json.loads(out)["choosable"] is True

    def test_p2_choosable(self, capsys):
        code, out, _ = run(capsys, "choosable", "--family", "path:2",
                           "--sizes", "1,2")
        assert code == 0 and "choosable" in out

    def test_length_mismatch(self, capsys):
        code, _, err = run(capsys, "choosable", "--family", "path:2",
                           "--sizes", "1,2,3")
        assert code == 2 and "error" in err


class TestFamily:
    def test_theta(self, capsys):
        code, out, _ = run(capsys, "family", "theta:0,1,2")
        assert code == 0
        lines = out.strip().splitlines()
        assert "n=5 m=6 gb=11" in lines[1]

    def test_pathcycles(self, capsys):
        code, out, _ = run(capsys, "family", "pathcycles:4,4")
        assert code == 0 and "n=6 m=7 gb=13" in out

    def test_power_matches_brokenwheel(self, capsys):
        _, out_a, _ = run(capsys, "family", "power:path:5,2")
        _, out_b, _ = run(capsys, "family", "brokenwheel:4")
        from sumchoice import canonical_form, parse_graph6
        key_a = canonical_form(parse_graph6(out_a.splitlines()[0]))
        key_b = canonical_form(parse_graph6(out_b.splitlines()[0]))
        assert key_a == key_b

    def test_invalid(self, capsys):
        code, _, err = run(capsys, "family", "walrus:9")
        assert code == 2 and "error" in err


class TestVerify:
    def test_four_vertex_passes_json_lines(self, capsys):
        code, out, _ = run(capsys, "verify", "four-vertex", "--json")
        assert code == 0
        lines = [json.loads(x) for x in out.strip().splitlines()]
        summary = lines[-1]
        assert summary["summary"] is True
        assert summary["failed"] == 0 and summary["passed"] >= 1
        assert all("outcome" in x for x in lines[:-1])

    def test_unknown_suite(self, capsys):
        code, _, err = run(capsys, "verify", "no-such-suite")
        assert code == 2 and "error" in err

    def test_text_report_carries_provenance(self, capsys):
        code, out, _ = run(capsys, "verify", "four-vertex")
        assert code == 0
        assert "[literature]" in out and "PASS" in out
