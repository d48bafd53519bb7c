"""Command-line front end: fixture loading, verification batteries, reports.

Subcommands
    slice         labels of the transverse slice attached to a type-A fixture
    symmetry      label pairs and PASS/FAIL lines for a diagram move
    verify        run a named property battery (or ``all``)
    reflect       apply one reflection to a point fixture, write the image
    fixed-points  enumerate torus fixed-point decompositions for a fixture
    kmatrix       PASS lines for the boundary-matrix identities

Reports go to standard output, in plain text or JSON (``--format``).  They
are deterministic for a given fixture and seed: the seed and size caps are
echoed in every report header and no timing data is printed.  Exit codes:
0 when everything passed, 1 for a property failure, 2 for input errors.

Vertices are numbered from 1 on the command line and in fixture files, as
in the usual Dynkin labelling; the JSON graph schema itself stays 0-based.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from .embedding import slice_labels
from .graphs import Graph, Parameter, diagram_auto, identity_auto, longest_element
from .linalg import frac_from_str, frac_to_str
from .partitions import (
    classical_type,
    column_removal,
    flag_jumps,
    kostka,
    rect_symmetry,
    row_addition,
)
from .points import RepPoint
from .reflection import check_certificates, reflect_point
from .suites import CAPS_PRESETS, Caps, SUITES, run_suite
from .torus import enumerate_models


class CliError(Exception):
    """Bad input of any kind; the driver maps this to exit code 2."""


@dataclass
class RunConfig:
    command: str
    inputs: tuple[str, ...] = ()
    seed: int = 0
    caps: Caps = field(default_factory=Caps)
    fmt: str = "text"
    suite: str | None = None
    kind: str | None = None
    output: str | None = None
    rows: int = 1

    def __post_init__(self):
        if self.fmt not in ("text", "json"):
            raise CliError(f"unknown format {self.fmt!r}")
        if self.rows < 0:
            raise CliError("--rows must be nonnegative")


def parse_caps(text: str) -> Caps:
    if text in CAPS_PRESETS:
        return CAPS_PRESETS[text]
    parts = text.split(",")
    if len(parts) != 3:
        raise CliError(
            f"caps must be a preset ({', '.join(CAPS_PRESETS)}) or 'rank,dim,weight'"
        )
    try:
        rank, dim, weight = (int(p) for p in parts)
        return Caps(rank, dim, weight)
    except ValueError as exc:
        raise CliError(f"bad caps {text!r}: {exc}") from None


# ---------------------------------------------------------------------------
# report plumbing


def _caps_dict(caps: Caps) -> dict:
    return {"max_rank": caps.max_rank, "max_dim": caps.max_dim, "max_weight": caps.max_weight}


def _header_lines(cfg: RunConfig) -> list[str]:
    lines = [f"exquiver {cfg.command}"]
    for path in cfg.inputs:
        lines.append(f"  input: {path}")
    lines.append(f"  seed: {cfg.seed}")
    caps = cfg.caps
    lines.append(f"  caps: rank<={caps.max_rank} dim<={caps.max_dim} weight<={caps.max_weight}")
    return lines


def _emit(cfg: RunConfig, payload: dict, body: list[str]) -> None:
    if cfg.fmt == "json":
        base = {
            "command": cfg.command,
            "inputs": list(cfg.inputs),
            "seed": cfg.seed,
            "caps": _caps_dict(cfg.caps),
        }
        base.update(payload)
        print(json.dumps(base, indent=2))
    else:
        print("\n".join(_header_lines(cfg) + [""] + body) if body else "\n".join(_header_lines(cfg)))


def _parts(p) -> str:
    return "(" + ", ".join(str(x) for x in p) + ")"


def _flag(ok: bool) -> str:
    return "PASS" if ok else "FAIL"


# ---------------------------------------------------------------------------
# fixture loading


def _load_json(path: str) -> dict:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CliError(f"cannot read {path}: {exc}") from None
    if not isinstance(data, dict):
        raise CliError(f"{path}: expected a JSON object")
    return data


def _int_vector(d: dict, key: str, n: int | None = None, allow_negative=False) -> tuple[int, ...]:
    try:
        vec = tuple(int(t) for t in d[key])
    except (KeyError, TypeError, ValueError):
        raise CliError(f"fixture needs an integer list {key!r}") from None
    if n is not None and len(vec) != n:
        raise CliError(f"{key} must have {n} entries, got {len(vec)}")
    if not allow_negative and any(t < 0 for t in vec):
        raise CliError(f"{key} has a negative dimension")
    return vec


def _require_type_a(g: Graph) -> None:
    want = sorted((min(a, b), max(a, b)) for a, b in [(k, k + 1) for k in range(g.n - 1)])
    got = sorted((min(a, b), max(a, b)) for a, b in g.edges)
    if got != want:
        raise CliError("fixture graph is not a type-A line")


def _load_dims_fixture(path: str) -> tuple[Graph, tuple, tuple, dict]:
    d = _load_json(path)
    try:
        g = Graph.from_dict(d["graph"])
    except (KeyError, TypeError, ValueError, AssertionError) as exc:
        raise CliError(f"bad graph block: {exc}") from None
    _require_type_a(g)
    v = _int_vector(d, "v", g.n)
    w = _int_vector(d, "w", g.n)
    return g, v, w, d


# ---------------------------------------------------------------------------
# commands


def cmd_slice(cfg: RunConfig) -> int:
    g, v, w, d = _load_dims_fixture(cfg.inputs[0])
    if sum(w) == 0:
        _emit(cfg, {"empty": True}, [])
        return 0
    try:
        label = slice_labels(v, w)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    payload = {
        "mu_prime": list(label.mu_prime),
        "lambda": list(label.lam),
        "ambient_framing": label.ambient_dim,
    }
    body = [
        f"  mu' = {_parts(label.mu_prime)}",
        f"  lambda = {_parts(label.lam)}",
        f"  ambient framing = {label.ambient_dim}",
    ]
    if "delta" in d:
        deltas = _int_vector(d, "delta", g.n, allow_negative=True)
        try:
            family = classical_type(deltas)
        except ValueError as exc:
            raise CliError(f"bad delta pattern: {exc}") from None
        payload["classical_type"] = family
        body.append(f"  classical type = {family}")
    _emit(cfg, payload, body)
    return 0


def cmd_symmetry(cfg: RunConfig) -> int:
    g, v, w, _d = _load_dims_fixture(cfg.inputs[0])
    cap = cfg.caps.max_weight
    n = g.n

    def counted(lam, mu):
        try:
            return kostka(lam, mu, cap)
        except ValueError as exc:
            raise CliError(f"{exc}; raise --caps to allow larger partitions") from None

    try:
        base = slice_labels(v, w)
        if cfg.kind == "rect":
            rec = rect_symmetry(v, w)
            partner = (rec.mu_hat_prime, rec.lam_hat)
            mu = flag_jumps(v, w)
            mu_hat = flag_jumps(tuple(reversed(v)), tuple(reversed(w)))
            entry_ok = all(mu[i] + mu_hat[n - i] == sum(w) for i in range(n + 1))
            move_line = ("hat labels from the reversed chain", rec.identity_ok)
        elif cfg.kind == "col":
            rec = column_removal(v, w)
            partner = (rec.mu_prime, rec.lam)
            entry_ok = rec.inverse_ok
            move_line = ("first-column removal undoes the widening", rec.inverse_ok)
        else:  # row
            rec = row_addition(v, w, cfg.rows)
            partner = (rec.mu_prime, rec.lam)
            a = cfg.rows
            entry_ok = (
                rec.mu_prime[:a] == ((n + 1),) * a
                and rec.mu_prime[a:] == base.mu_prime
                and rec.lam[:a] == ((n + 1),) * a
                and rec.lam[a:] == base.lam
            )
            move_line = (f"removing the first {a} rows undoes the addition", entry_ok)
    except ValueError as exc:
        raise CliError(str(exc)) from None

    kostka_ok = counted(base.lam, base.mu_prime) == counted(partner[1], partner[0])
    payload = {
        "kind": cfg.kind,
        "mu_prime": list(base.mu_prime),
        "lambda": list(base.lam),
        "partner_mu_prime": list(partner[0]),
        "partner_lambda": list(partner[1]),
        "entrywise": entry_ok,
        "kostka_equal": kostka_ok,
    }
    body = [
        f"  kind = {cfg.kind}",
        f"  mu' = {_parts(base.mu_prime)}  lambda = {_parts(base.lam)}",
        f"  partner mu' = {_parts(partner[0])}  partner lambda = {_parts(partner[1])}",
        f"  [{_flag(entry_ok)}] {move_line[0]}",
        f"  [{_flag(kostka_ok)}] Kostka numbers agree",
    ]
    _emit(cfg, payload, body)
    return 0 if entry_ok and kostka_ok else 1


def cmd_verify(cfg: RunConfig) -> int:
    suite = cfg.suite or "all"
    if suite != "all" and suite not in SUITES:
        raise CliError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)} or all")
    results = run_suite(suite, cfg.seed, cfg.caps)
    passed = all(r.passed for r in results)
    payload = {
        "suite": suite,
        "checks": [
            {"suite": r.suite, "name": r.name, "passed": r.passed, "detail": r.detail}
            for r in results
        ],
        "passed": passed,
    }
    body = [f"  suite: {suite}"]
    for r in results:
        line = f"  [{_flag(r.passed)}] {r.suite}: {r.name}"
        if r.detail:
            line += f" ({r.detail})"
        body.append(line)
    body.append(f"  {sum(r.passed for r in results)}/{len(results)} checks passed")
    _emit(cfg, payload, body)
    return 0 if passed else 1


def cmd_reflect(cfg: RunConfig) -> int:
    d = _load_json(cfg.inputs[0])
    try:
        pt = RepPoint.from_dict(d["point"])
    except (KeyError, TypeError, ValueError, AssertionError) as exc:
        raise CliError(f"bad point block: {exc}") from None
    vertex = d.get("vertex", 1)
    if not isinstance(vertex, int) or not (1 <= vertex <= pt.graph.n):
        raise CliError(f"vertex must lie in 1..{pt.graph.n}")
    i = vertex - 1
    try:
        xi = _int_vector(d, "xi", pt.graph.n, allow_negative=True)
        zeta_c = tuple(frac_from_str(z) for z in d.get("zeta_c", [0] * pt.graph.n))
        zeta = Parameter(xi, zeta_c)
    except (ValueError, TypeError) as exc:
        raise CliError(f"bad parameter block: {exc}") from None
    try:
        res = reflect_point(pt, i, zeta)
    except ValueError as exc:
        raise CliError(f"reflection not defined here: {exc}") from None
    cert_ok, why = True, ""
    try:
        check_certificates(pt, res, zeta)
    except Exception as exc:
        cert_ok, why = False, str(exc)

    out_path = cfg.output or (cfg.inputs[0].rsplit(".json", 1)[0] + ".out.json")
    with open(out_path, "w") as fh:
        json.dump(res.point.to_dict(), fh, indent=2)
        fh.write("\n")

    payload = {
        "vertex": vertex,
        "v_in": list(pt.v),
        "v_out": list(res.point.v),
        "zeta_out": {
            "xi": list(res.zeta_out.xi),
            "zeta_c": [frac_to_str(z) for z in res.zeta_out.zeta_c],
        },
        "certificates": cert_ok,
        "output": out_path,
    }
    body = [
        f"  vertex = {vertex}",
        f"  v = {_parts(pt.v)} -> v' = {_parts(res.point.v)}",
        f"  parameter out: xi = {_parts(res.zeta_out.xi)}, zeta_c = "
        + _parts(tuple(frac_to_str(z) for z in res.zeta_out.zeta_c)),
        f"  [{_flag(cert_ok)}] exchange certificates" + (f" ({why})" if why else ""),
        f"  wrote {out_path}",
    ]
    _emit(cfg, payload, body)
    return 0 if cert_ok else 1


def cmd_fixed_points(cfg: RunConfig) -> int:
    d = _load_json(cfg.inputs[0])
    try:
        g = Graph.from_dict(d["graph"])
    except (KeyError, TypeError, ValueError, AssertionError) as exc:
        raise CliError(f"bad graph block: {exc}") from None
    v = _int_vector(d, "v", g.n)
    w1 = _int_vector(d, "w1", g.n)
    w2 = _int_vector(d, "w2", g.n)
    try:
        auto = diagram_auto(g, tuple(d["perm"])) if "perm" in d else identity_auto(g)
        word = tuple(d["word"]) if "word" in d else longest_element(g)[0]
        models = enumerate_models(g, auto, word, v, w1, w2)
    except (ValueError, AssertionError) as exc:
        raise CliError(str(exc)) from None
    payload = {
        "count": len(models),
        "decompositions": [{"v1": list(m.v1), "v2": list(m.v2)} for m in models],
    }
    body = [f"  {len(models)} decompositions"]
    for m in models:
        body.append(f"  v1 = {_parts(m.v1)}  v2 = {_parts(m.v2)}")
    _emit(cfg, payload, body)
    return 0


def cmd_kmatrix(cfg: RunConfig) -> int:
    results = run_suite("kmatrix", cfg.seed, cfg.caps)
    passed = all(r.passed for r in results)
    payload = {
        "checks": [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results],
        "passed": passed,
    }
    body = [f"  [{_flag(r.passed)}] {r.name}" for r in results]
    _emit(cfg, payload, body)
    return 0 if passed else 1


COMMANDS = {
    "slice": cmd_slice,
    "symmetry": cmd_symmetry,
    "verify": cmd_verify,
    "reflect": cmd_reflect,
    "fixed-points": cmd_fixed_points,
    "kmatrix": cmd_kmatrix,
}


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for randomised checks")
    common.add_argument("--caps", default="default", help="preset name or 'rank,dim,weight'")
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(
        prog="exquiver",
        description="Exact checks for framed quiver representations with forms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("slice", parents=[common], help="slice labels of a type-A fixture")
    p.add_argument("--input", required=True)

    p = sub.add_parser("symmetry", parents=[common], help="label pairs for a diagram move")
    p.add_argument("kind", choices=("rect", "col", "row"))
    p.add_argument("--input", required=True)
    p.add_argument("--rows", type=int, default=1, help="rows to add for the row move")

    p = sub.add_parser("verify", parents=[common], help="run a property battery")
    p.add_argument("suite")

    p = sub.add_parser("reflect", parents=[common], help="reflect a point fixture once")
    p.add_argument("--input", required=True)
    p.add_argument("--output", help="where to write the reflected point (JSON)")

    p = sub.add_parser("fixed-points", parents=[common], help="torus fixed-point pieces")
    p.add_argument("--input", required=True)

    sub.add_parser("kmatrix", parents=[common], help="boundary-matrix identity report")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(
            command=args.command,
            inputs=(args.input,) if getattr(args, "input", None) else (),
            seed=args.seed,
            caps=parse_caps(args.caps),
            fmt=args.format,
            suite=getattr(args, "suite", None),
            kind=getattr(args, "kind", None),
            output=getattr(args, "output", None),
            rows=getattr(args, "rows", 1),
        )
        return COMMANDS[args.command](cfg)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
