"""Command-line front end: decide, lattice, witness, verify.

Exit codes follow the embedding outcome for ``decide`` (0 embeds, 1 does
not, 2 unknown), 64 for parse/validation problems, 3 for partial verify
failures, 70 for internal errors.  All outputs are deterministic given the
config and seed, and every output file embeds the config hash (a JSON field,
or a config_hash column in CSV rows).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from pathlib import Path

from . import suite
from .lpengine import Grid, save_field, save_profile_csv
from .oracle import EMBEDS, NO, UNKNOWN, FamilyError, decide, embedding_matrix
from .params import RangeError, spec_from_json
from .witnesses import (
    dilation_family,
    gaussian_base,
    gaussian_spectral_base,
    lacunary_sum,
    log_singularity,
    riesz_log,
    spectral_peaks,
    translation_family,
)

EX_OK = 0
EX_NOEMBED = 1
EX_UNKNOWN = 2
EX_PARTIAL = 3
EX_USAGE = 64
EX_INTERNAL = 70


def _config_hash(obj) -> str:
    digest = hashlib.sha256(
        json.dumps(obj, sort_keys=True, default=str).encode("utf-8")
    )
    return digest.hexdigest()[:16]


def _out_dir(args, config_out=None) -> Path:
    out = (os.environ.get("POWEMB_OUT") or args.out or config_out
           or "powemb_out")
    path = Path(out)
    path.mkdir(parents=True, exist_ok=True)
    return path


def _parse_grid(text) -> Grid:
    parts = text.split(",")
    if len(parts) != 3:
        raise RangeError(f"--grid wants d,L,N, got {text!r}")
    return Grid(int(parts[0]), float(parts[1]), int(parts[2]))


def _parse_range(text):
    """Accept '3..7', '3:7', or a comma list '1,2,4,8'."""
    text = str(text)
    for sep in ("..", ":"):
        if sep in text:
            a, b = text.split(sep)
            return list(range(int(a), int(b) + 1))
    return [float(x) if "." in x or "e" in x.lower() else int(x)
            for x in text.split(",")]


def _write_json(path: Path, payload, cfg_hash: str):
    payload = dict(payload)
    payload["config_hash"] = cfg_hash
    path.write_text(json.dumps(payload, sort_keys=True, indent=2, default=str)
                    + "\n", encoding="utf-8")


def _write_rows_csv(path: Path, rows, cfg_hash: str):
    cols = ["parameter", "src_norm", "tgt_norm", "ratio", "config_hash"]
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(",".join(cols) + "\n")
        for row in rows:
            vals = [row.get("parameter", ""), row.get("src_norm", ""),
                    row.get("tgt_norm", ""), row.get("ratio", ""), cfg_hash]
            fh.write(",".join(repr(v) if isinstance(v, float) else str(v)
                              for v in vals) + "\n")


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def cmd_decide(args) -> int:
    try:
        src = spec_from_json(args.src)
        tgt = spec_from_json(args.tgt)
        verdict = decide(src, tgt)
    except (RangeError, FamilyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_USAGE
    print(json.dumps(verdict.to_dict(), sort_keys=True))
    return {EMBEDS: EX_OK, NO: EX_NOEMBED, UNKNOWN: EX_UNKNOWN}[verdict.outcome]


_CELL = {EMBEDS: "<=", NO: "x", UNKNOWN: "?"}


def cmd_lattice(args) -> int:
    try:
        text = Path(args.specs_file).read_text(encoding="utf-8")
        data = json.loads(text)
        if not isinstance(data, list):
            raise RangeError("lattice wants a JSON array of space descriptors")
        specs = []
        dims = set()
        for entry in data:
            try:
                spec = spec_from_json(json.dumps(entry))
                dims.add(spec.d)
            except RangeError:
                # Keeps the row/column; the matrix records the validation error.
                spec = _invalid_placeholder()
            specs.append(spec)
        if len(dims) > 1:
            raise RangeError(f"all spaces must share one dimension, got {sorted(dims)}")
    except (OSError, json.JSONDecodeError, RangeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_USAGE

    report = embedding_matrix(specs)
    payload = report.to_dict()
    cfg_hash = _config_hash(data)
    out = _out_dir(args)
    _write_json(out / "lattice.json", payload, cfg_hash)
    print(json.dumps(payload, sort_keys=True, default=str))
    print(_render_matrix(report), file=sys.stderr)
    return EX_OK


def _invalid_placeholder():
    from .params import SpaceSpec

    return SpaceSpec(family="B", d=-1)


def _render_matrix(report) -> str:
    names = [str(s) for s in report.specs]
    width = max((len(n) for n in names), default=4)
    lines = []
    header = " " * (width + 2) + "  ".join(f"{j:>4d}" for j in range(len(names)))
    lines.append(header)
    for i, row in enumerate(report.cells):
        cells = []
        for cell in row:
            cells.append("!" if cell.verdict is None else _CELL[cell.verdict.outcome])
        lines.append(f"{names[i]:<{width}} |" + "  ".join(f"{c:>4}" for c in cells))
    if report.transitivity_violations:
        lines.append(f"TRANSITIVITY VIOLATIONS: {report.transitivity_violations}")
    else:
        lines.append("transitivity audit: clean")
    return "\n".join(lines)


def cmd_witness(args) -> int:
    kind = args.kind
    out = _out_dir(args)
    grid = _parse_grid(args.grid) if args.grid else None
    params = {k: v for k, v in vars(args).items()
              if k not in ("cmd", "func", "out", "jobs")}
    cfg_hash = _config_hash(params)
    try:
        if kind == "peaks":
            grid = grid or Grid(1, 16.0, 2 ** 14)
            fam = spectral_peaks(grid, _parse_range(args.n), int(args.j))
        elif kind == "dilation":
            grid = grid or Grid(1, 16.0, 2 ** 14)
            base = (random_base(grid, args.seed) if args.seed is not None
                    else gaussian_spectral_base(grid))
            fam = dilation_family(base, [float(t) for t in _parse_range(args.t)])
        elif kind == "translation":
            grid = grid or Grid(1, 128.0, 2 ** 14)
            base = gaussian_base(grid, sigma=float(args.sigma))
            fam = translation_family(base, [float(x) for x in
                                            _parse_range(args.lam)])
        elif kind == "lacunary":
            grid = grid or Grid(1, 16.0, 2 ** 14)
            coeffs = ([float(c) for c in _parse_range(args.coeffs)]
                      if args.coeffs else [1.0] * int(args.n_terms))
            f = lacunary_sum(grid, coeffs, float(args.s0), float(args.p0),
                             float(args.gamma0))
            save_field(f, out / "lacunary.field",
                       extra_header={"config_hash": cfg_hash})
            _write_json(out / "manifest.json", {
                "kind": "LacunarySum",
                "parameters": {"coeffs": coeffs, "s0": args.s0, "p0": args.p0,
                               "gamma0": args.gamma0},
                "members": [{"index": 0, "file": "lacunary.field"}],
            }, cfg_hash)
            print(str(out / "manifest.json"))
            return EX_OK
        elif kind == "logsing":
            prof = log_singularity(float(args.p0), float(args.gamma0),
                                   float(args.p1), int(args.dim),
                                   eps=float(args.eps))
            save_profile_csv(prof, out / "logsing.csv")
            _write_json(out / "manifest.json", {
                "kind": "LogSingularity",
                "parameters": {"p0": args.p0, "gamma0": args.gamma0,
                               "p1": args.p1, "dim": args.dim, "eps": args.eps},
                "members": [{"index": 0, "file": "logsing.csv"}],
            }, cfg_hash)
            print(str(out / "manifest.json"))
            return EX_OK
        elif kind == "rieszlog":
            prof = riesz_log(float(args.a), float(args.b), int(args.dim),
                             eps=float(args.eps))
            save_profile_csv(prof, out / "rieszlog.csv")
            _write_json(out / "manifest.json", {
                "kind": "RieszLog",
                "parameters": {"a": args.a, "b": args.b, "dim": args.dim,
                               "eps": args.eps},
                "members": [{"index": 0, "file": "rieszlog.csv"}],
            }, cfg_hash)
            print(str(out / "manifest.json"))
            return EX_OK
        else:
            print(f"error: unknown witness kind {kind!r}", file=sys.stderr)
            return EX_USAGE

        manifest = fam.manifest()
        for i in range(len(fam)):
            name = f"member_{i:04d}.field"
            save_field(fam.member(i), out / name,
                       extra_header={"config_hash": cfg_hash})
            manifest["members"][i]["file"] = name
        _write_json(out / "manifest.json", manifest, cfg_hash)
        print(str(out / "manifest.json"))
        return EX_OK
    except (RangeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_USAGE


def random_base(grid, seed):
    from .witnesses import random_band_limited

    return random_band_limited(grid, int(seed), band=1.0)


def cmd_verify(args) -> int:
    if args.list:
        for name, (desc, _) in suite.CATALOG.items():
            print(f"{name:<14} {desc}")
        return EX_OK
    config = {"experiments": None, "seed": 0}
    if args.config:
        try:
            config.update(json.loads(Path(args.config).read_text(encoding="utf-8")))
        except (OSError, json.JSONDecodeError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EX_USAGE
    if args.seed is not None:
        config["seed"] = args.seed
    names = []
    overrides = {}
    selected = config.get("experiments") or list(suite.CATALOG.keys())
    for entry in selected:
        if isinstance(entry, str):
            names.append(entry)
        else:
            names.append(entry["id"])
            overrides[entry["id"]] = entry.get("overrides", {})
    if config.get("grid"):
        for name in names:
            overrides.setdefault(name, {}).setdefault("grid", config["grid"])
    if any(n not in suite.CATALOG for n in names):
        bad = [n for n in names if n not in suite.CATALOG]
        print(f"error: unknown experiments {bad}", file=sys.stderr)
        return EX_USAGE

    cfg_hash = _config_hash(config)
    out = _out_dir(args, config_out=config.get("out"))
    results = suite.run_experiments(names, overrides, seed=int(config["seed"]),
                                    jobs=args.jobs)
    all_pass = True
    for name, reports in results.items():
        for i, rep in enumerate(reports):
            stem = f"{name}_{i:03d}"
            _write_json(out / f"{stem}.json", rep.to_dict(), cfg_hash)
            if rep.rows:
                _write_rows_csv(out / f"{stem}.csv", rep.rows, cfg_hash)
            status = "PASS" if rep.passed else "FAIL"
            print(f"[{status}] {rep.kind}: {rep.experiment_id}")
            all_pass = all_pass and rep.passed
    print(f"config_hash: {cfg_hash}")
    print("ALL PASS" if all_pass else "FAILURES PRESENT")
    return EX_OK if all_pass else EX_PARTIAL


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="powemb",
        description="Embedding oracle and numerical verification for "
                    "power-weighted smoothness spaces",
    )
    ap.add_argument("--out", help="output directory (env POWEMB_OUT overrides)")
    ap.add_argument("--jobs", type=int, default=1, help="parallel experiments")
    ap.add_argument("--seed", type=int, default=None, help="run seed")
    ap.add_argument("--grid", help="grid as d,L,N", default=None)
    sub = ap.add_subparsers(dest="cmd")

    p = sub.add_parser("decide", help="decide one embedding pair")
    p.add_argument("src", help="source space JSON descriptor")
    p.add_argument("tgt", help="target space JSON descriptor")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("lattice", help="pairwise verdict matrix from a JSON file")
    p.add_argument("specs_file")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("witness", help="generate a witness family")
    p.add_argument("kind", help="peaks|dilation|translation|lacunary|logsing|rieszlog")
    p.add_argument("--p", default=2)
    p.add_argument("--gamma", default=0)
    p.add_argument("--j", default=0)
    p.add_argument("--n", default="3..7")
    p.add_argument("--t", default="0.125,0.25,0.5,1")
    p.add_argument("--lam", "--lambda", dest="lam", default="4,8,16,32,64")
    p.add_argument("--sigma", default=1.0)
    p.add_argument("--coeffs", default=None)
    p.add_argument("--n-terms", dest="n_terms", default=3)
    p.add_argument("--s0", default=1)
    p.add_argument("--p0", default=2)
    p.add_argument("--gamma0", default=0)
    p.add_argument("--p1", default=1.5)
    p.add_argument("--a", default=0.5)
    p.add_argument("--b", default=0.5)
    p.add_argument("--dim", default=1)
    p.add_argument("--eps", default=0.0)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("verify", help="run verification experiment suites")
    p.add_argument("config", nargs="?", default=None,
                   help="RunConfig JSON file (defaults to the full suite)")
    p.add_argument("--list", action="store_true", help="print the catalog")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; remap so 2 stays 'Unknown'.
        return EX_OK if exc.code in (0, None) else EX_USAGE
    if not getattr(args, "func", None):
        parser.print_help()
        return EX_USAGE
    try:
        return args.func(args)
    except (RangeError, FamilyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_USAGE
    except Exception as exc:  # keep the contract: >2 means error
        print(f"internal error: {exc}", file=sys.stderr)
        return EX_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
