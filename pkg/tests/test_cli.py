"""CLI contract: subcommands, exit codes, output files, determinism."""

import json

from powemb.cli import main
from powemb.lpengine import load_field


SRC = '{"family":"B","s":1,"p":2,"q":1,"gamma":0,"dim":1}'
TGT = '{"family":"B","s":0,"p":4,"q":1,"gamma":0,"dim":1}'


class TestDecide:
    def test_embeds_exit_zero(self, capsys):
        assert main(["decide", SRC, TGT]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["outcome"] == "embeds"
        assert out["trace"]

    def test_identity_trivial_rule(self, capsys):
        assert main(["decide", SRC, SRC]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["trace"][0]["rule"] == "TRIVIAL_13"

    def test_does_not_embed_exit_one(self, capsys):
        assert main(["decide", TGT, SRC]) == 1

    def test_unknown_exit_two(self, capsys):
        h_out = '{"family":"H","s":2,"p":2,"gamma":1.5,"dim":1}'
        h_tgt = '{"family":"H","s":0,"p":2,"gamma":0,"dim":1}'
        assert main(["decide", h_out, h_tgt]) == 2

    def test_malformed_json_exit_64(self, capsys):
        assert main(["decide", "not json", TGT]) == 64

    def test_validation_error_exit_64(self, capsys):
        bad = '{"family":"B","s":1,"p":2,"q":1,"gamma":-1,"dim":1}'
        assert main(["decide", bad, TGT]) == 64

    def test_rational_strings_accepted(self, capsys):
        a = '{"family":"B","s":"3/4","p":"3/2","q":"7/3","gamma":"-1/2","dim":1}'
        assert main(["decide", a, a]) == 0


class TestLattice:
    def _write(self, tmp_path, data):
        path = tmp_path / "specs.json"
        path.write_text(json.dumps(data))
        return str(path)

    def test_triangular_chain(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv("POWEMB_OUT", str(tmp_path / "out"))
        specs = [
            {"family": "B", "s": 1, "p": 2, "q": 1, "gamma": 0, "dim": 1},
            {"family": "B", "s": 0, "p": 4, "q": 1, "gamma": 0, "dim": 1},
            {"family": "B", "s": -1, "p": 8, "q": 1, "gamma": 0, "dim": 1},
        ]
        assert main(["lattice", self._write(tmp_path, specs)]) == 0
        payload = json.loads(capsys.readouterr().out.splitlines()[0])
        outcomes = [[c["outcome"] for c in row] for row in payload["cells"]]
        assert outcomes == [
            ["embeds", "embeds", "embeds"],
            ["no", "embeds", "embeds"],
            ["no", "no", "embeds"],
        ]
        assert payload["transitivity_violations"] == []
        assert (tmp_path / "out" / "lattice.json").exists()

    def test_empty_list(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv("POWEMB_OUT", str(tmp_path / "out"))
        assert main(["lattice", self._write(tmp_path, [])]) == 0

    def test_mixed_dimension_exit_64(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv("POWEMB_OUT", str(tmp_path / "out"))
        specs = [
            {"family": "B", "s": 1, "p": 2, "q": 1, "gamma": 0, "dim": 1},
            {"family": "B", "s": 1, "p": 2, "q": 1, "gamma": 0, "dim": 2},
        ]
        assert main(["lattice", self._write(tmp_path, specs)]) == 64

    def test_invalid_entry_gets_diagnostics(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv("POWEMB_OUT", str(tmp_path / "out"))
        specs = [
            {"family": "B", "s": 1, "p": 2, "q": 1, "gamma": 0, "dim": 1},
            {"family": "B", "s": 1, "p": 0.5, "q": 1, "gamma": 0, "dim": 1},
        ]
        assert main(["lattice", self._write(tmp_path, specs)]) == 0
        payload = json.loads(capsys.readouterr().out.splitlines()[0])
        assert payload["cells"][0][1]["error"]
        assert payload["cells"][0][0]["outcome"] == "embeds"


class TestWitness:
    def test_peaks_family_files(self, tmp_path, monkeypatch, capsys):
        out = tmp_path / "w"
        monkeypatch.setenv("POWEMB_OUT", str(out))
        code = main(["witness", "peaks", "--p", "2", "--gamma", "0.5",
                     "--j", "0", "--n", "3..7"])
        assert code == 0
        manifest = json.loads((out / "manifest.json").read_text())
        assert manifest["kind"] == "SpectralPeak"
        assert len(manifest["members"]) == 5
        member = load_field(out / manifest["members"][0]["file"])
        assert member.values.shape == (2 ** 14,)
        assert "config_hash" in manifest

    def test_logsing_profile_csv(self, tmp_path, monkeypatch, capsys):
        out = tmp_path / "w"
        monkeypatch.setenv("POWEMB_OUT", str(out))
        code = main(["witness", "logsing", "--p0", "2", "--p1", "1.5",
                     "--gamma0", "0", "--eps", "1e-4"])
        assert code == 0
        lines = (out / "logsing.csv").read_text().splitlines()
        assert lines[0] == "r,value"
        r0, v0 = lines[1].split(",")
        assert float(r0) > 0 and float(v0) > 0

    def test_unknown_kind_exit_64(self, tmp_path, monkeypatch, capsys):
        monkeypatch.setenv("POWEMB_OUT", str(tmp_path / "w"))
        assert main(["witness", "whatever"]) == 64

    def test_nyquist_error_exit_64(self, tmp_path, monkeypatch, capsys):
        monkeypatch.setenv("POWEMB_OUT", str(tmp_path / "w"))
        assert main(["witness", "peaks", "--n", "3..20"]) == 64


class TestVerify:
    def test_list_catalog(self, capsys):
        assert main(["verify", "--list"]) == 0
        out = capsys.readouterr().out
        for name in ("peaks", "translation", "dichotomy", "lacunary",
                     "oracle", "sharp", "coherence"):
            assert name in out

    def test_small_config_passes(self, tmp_path, monkeypatch, capsys):
        out = tmp_path / "v"
        monkeypatch.setenv("POWEMB_OUT", str(out))
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({
            "seed": 0,
            "experiments": [
                {"id": "dichotomy"},
                {"id": "sharp", "overrides": {"count": 20}},
            ],
        }))
        assert main(["verify", str(cfg)]) == 0
        text = capsys.readouterr().out
        assert "[PASS]" in text and "ALL PASS" in text
        assert (out / "dichotomy_000.json").exists()
        assert (out / "dichotomy_000.csv").exists()
        csv_lines = (out / "dichotomy_000.csv").read_text().splitlines()
        assert csv_lines[0] == "parameter,src_norm,tgt_norm,ratio,config_hash"

    def test_unknown_experiment_exit_64(self, tmp_path, monkeypatch, capsys):
        monkeypatch.setenv("POWEMB_OUT", str(tmp_path / "v"))
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"experiments": ["nonsense"]}))
        assert main(["verify", str(cfg)]) == 64

    def test_impossible_range_exit_3(self, tmp_path, monkeypatch, capsys):
        monkeypatch.setenv("POWEMB_OUT", str(tmp_path / "v"))
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({
            "seed": 0,
            "experiments": [
                {"id": "peaks", "overrides": {"n_min": 3, "n_max": 30}},
            ],
        }))
        assert main(["verify", str(cfg)]) == 3
        assert "FAILURES PRESENT" in capsys.readouterr().out

    def test_outputs_deterministic(self, tmp_path, monkeypatch, capsys):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({
            "seed": 3,
            "experiments": [{"id": "lacunary"}],
        }))
        outs = []
        for name in ("a", "b"):
            out = tmp_path / name
            monkeypatch.setenv("POWEMB_OUT", str(out))
            assert main(["verify", str(cfg)]) == 0
            outs.append((out / "lacunary_000.json").read_bytes()
                        + (out / "lacunary_000.csv").read_bytes())
        assert outs[0] == outs[1]

    def test_help_exit_zero(self, capsys):
        assert main(["--help"]) == 0

    def test_no_subcommand_is_usage(self, capsys):
        assert main([]) == 64


class TestGridFlag:
    def test_witness_honors_grid(self, tmp_path, monkeypatch, capsys):
        out = tmp_path / "w"
        monkeypatch.setenv("POWEMB_OUT", str(out))
        code = main(["--grid", "1,16,4096", "witness", "peaks",
                     "--n", "3..6", "--j", "0"])
        assert code == 0
        manifest = json.loads((out / "manifest.json").read_text())
        member = load_field(out / manifest["members"][0]["file"])
        assert member.values.shape == (4096,)

    def test_verify_config_grid_override(self, tmp_path, monkeypatch, capsys):
        monkeypatch.setenv("POWEMB_OUT", str(tmp_path / "v"))
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({
            "seed": 0,
            "grid": {"d": 1, "L": 16.0, "N": 8192},
            "experiments": [
                {"id": "peaks",
                 "overrides": {"combos": [{"p": 2, "gamma": 0}],
                               "j_values": [0], "n_max": 6}},
            ],
        }))
        assert main(["verify", str(cfg)]) == 0


class TestMatrixRendering:
    def test_render_handles_errors_and_unknowns(self, capsys):
        from powemb.cli import _render_matrix
        from powemb.oracle import embedding_matrix
        from powemb.params import SpaceSpec
        from powemb.suite import S

        bad = SpaceSpec(family="B", d=1)  # missing p/gamma -> diagnostics
        rep = embedding_matrix([
            S("H", 2, 2, gamma="3/2"), S("H", 0, 2, gamma=0), bad,
        ])
        text = _render_matrix(rep)
        assert "?" in text and "!" in text and "transitivity" in text


class TestConfigOut:
    def test_config_out_field_used(self, tmp_path, monkeypatch, capsys):
        monkeypatch.delenv("POWEMB_OUT", raising=False)
        cfg = tmp_path / "cfg.json"
        out = tmp_path / "from_config"
        cfg.write_text(json.dumps({
            "seed": 0,
            "out": str(out),
            "experiments": [{"id": "dichotomy"}],
        }))
        assert main(["verify", str(cfg)]) == 0
        assert (out / "dichotomy_000.json").exists()
