"""Command-line frontend.

Every run is fully described by its configuration: the command name, its
parameters (kept as the strings the user typed), the seed and the output
format. That configuration is echoed at the top of every output, so saving
the header as a ``key=value`` file and passing it to ``--config`` reproduces
the run.

Exit status: 0 on success, 1 on a domain error (the error class is printed),
2 on a usage error (unknown command, bad flags, unparseable weights or types).
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Callable, Sequence

from . import __version__
from . import charring as cr
from . import induction as ind
from .caps import current_caps
from .checks import SUITES, run_suite
from .errors import BottomLayerError, ParseError
from .parabolic import (
    SymmetricPairData,
    TorusElement,
    centralizer,
    compatible_parabolic,
)
from .rootdata import LieType, format_weight, parse_weight, weyl_dim
from .stabilize import finite_type_probe, parse_family, stabilization_scan
from .towers import ChainSpec, branch_diagonal, diagonal_embed, pad_weight, tower_step


@dataclass(frozen=True)
class Param:
    name: str
    help: str
    default: str | None = None

    @property
    def flag(self) -> str:
        return "--" + self.name.replace("_", "-")


@dataclass
class Output:
    data: object
    tsv: str | None = None
    ok: bool = True


Handler = Callable[[dict], Output]


# --------------------------------------------------------------------------
# argument conversion


def _type(s: str) -> LieType:
    return LieType.parse(s)


def _int(s: str, name: str) -> int:
    try:
        return int(s)
    except (TypeError, ValueError):
        raise ParseError(f"{name} must be an integer, got {s!r}") from None


def _weights(s: str) -> list[tuple[int, ...]]:
    s = s.strip()
    return [parse_weight(part) for part in s.split(";")] if s else []


def _range(s: str) -> tuple[int, int]:
    lo, sep, hi = s.partition("..")
    if not sep:
        v = _int(s, "n")
        return v, v
    return _int(lo, "n"), _int(hi, "n")


def _h(s: str) -> TorusElement:
    return TorusElement.parse(s)


def _wjson(w) -> list:
    return [int(x) if x == int(x) else str(x) for x in w]


# --------------------------------------------------------------------------
# commands


def cmd_roots(a: dict) -> Output:
    t = _type(a["type"])
    s = t.system
    rows = [list(r) for r in s.positive]
    return Output(
        {"type": str(t), "count": len(rows), "positive": rows, "simple": [list(r) for r in s.simple]},
        "\n".join(format_weight(r) for r in s.positive),
    )


def cmd_rho(a: dict) -> Output:
    t = _type(a["type"])
    return Output({"type": str(t), "rho": _wjson(t.system.rho)})


def cmd_dominant(a: dict) -> Output:
    t = _type(a["type"])
    lam = parse_weight(a["weight"])
    s = t.system
    lam = s.canonical(lam) if len(lam) == s.dim else lam
    from .rootdata import check_weight

    lam = check_weight(lam, t)
    dom, _, steps = s.to_dominant(lam)
    return Output({"weight": list(lam), "dominant": s.is_dominant(lam), "dominant_rep": _wjson(s.canonical(dom)), "steps": steps})


def cmd_weyl_dim(a: dict) -> Output:
    t = _type(a["type"])
    return Output({"type": str(t), "weight": list(parse_weight(a["weight"])), "dim": weyl_dim(t, parse_weight(a["weight"]))})


def _character_output(c: cr.Character, extra: dict | None = None) -> Output:
    data = dict(extra or {})
    data.update({"length": c.length, "dim": c.dim, "constituents": c.to_json()})
    tsv = "\n".join(["weight\tmult"] + [f"{format_weight(w)}\t{m}" for w, m in sorted(c.entries.items())])
    return Output(data, tsv)


def cmd_tensor(a: dict) -> Output:
    t = _type(a["type"])
    x = cr.irreducible(parse_weight(a["lhs"]), t)
    y = cr.irreducible(parse_weight(a["rhs"]), t)
    return _character_output(cr.tensor(x, y), {"type": str(t)})


def cmd_branch(a: dict) -> Output:
    chain = ChainSpec.parse(a["chain"])
    n = _int(a["level"], "level")
    e = tower_step(chain, n)
    c = cr.branch(cr.irreducible(parse_weight(a["weight"]), e.target), e.torus_map, e.source)
    return _character_output(c, {"from": str(e.target), "to": str(e.source)})


def cmd_branch_diagonal(a: dict) -> Output:
    m, theta = _int(a["m"], "m"), _int(a["theta"], "theta")
    return _character_output(branch_diagonal(parse_weight(a["weight"]), m, theta), {"m": m, "theta": theta})


def cmd_pad(a: dict) -> Output:
    lam = parse_weight(a["weight"])
    n = _int(a["n"], "n") if a.get("n") else len(lam)
    N = _int(a["to"], "to")
    return Output({"weight": list(lam), "padded": list(pad_weight(lam, n, N))})


def cmd_parabolic(a: dict) -> Output:
    par = compatible_parabolic(_type(a["type"]), _h(a["h"]))
    return Output(par.to_json())


def cmd_centralizer(a: dict) -> Output:
    from .oracles import classical_algebra_basis

    p, theta = _int(a["p"], "p"), _int(a["theta"], "theta")
    gens = [diagonal_embed(x, theta) for x in classical_algebra_basis(LieType("GL", p))]
    N = p * theta
    if N > current_caps().matrix:
        from .errors import CapExceeded

        raise CapExceeded(f"matrix size {N} exceeds cap {current_caps().matrix}")
    return Output({"p": p, "theta": theta, **centralizer(gens, N).to_json()})


def cmd_s_value(a: dict) -> Output:
    par = compatible_parabolic(_type(a["type"]), _h(a["h"]))
    return Output({"s": par.s})


def _k0_p0(a: dict):
    t = _type(a["type"])
    return t, compatible_parabolic(t, _h(a["h"]))


def cmd_nu_check(a: dict) -> Output:
    t, p0 = _k0_p0(a)
    nu = parse_weight(a["nu"])
    res = ind.nu_check(nu, t, p0)
    return Output({"nu": list(nu), "nu_check": res.to_json(), "degree": p0.s})


def _entries(s: str) -> list[tuple[tuple[int, ...], int]]:
    out = []
    for part in s.split(";"):
        part = part.strip()
        if not part:
            continue
        w, sep, m = part.partition(":")
        out.append((parse_weight(w), _int(m, "multiplicity") if sep else 1))
    return out


def cmd_bottom_layer(a: dict) -> Output:
    t, p0 = _k0_p0(a)
    rows = ind.bottom_layer(_entries(a["entries"]), t, p0)
    data = {"degree": p0.s, "entries": [r.to_json() for r in rows], "bottom_layer": [list(r.nu_check.weight) for r in rows if r.contributes]}
    tsv = "\n".join(["nu\tnu_check\tmult"] + [
        f"{format_weight(r.nu)}\t{format_weight(r.nu_check.weight) if r.nu_check.dominant else 'non-dominant'}\t{r.multiplicity_data}"
        for r in rows
    ])
    return Output(data, tsv)


def cmd_bbw(a: dict) -> Output:
    t, p0 = _k0_p0(a)
    res = ind.bbw_cohomology(t, p0, parse_weight(a["nu"]))
    return Output({"nu": list(parse_weight(a["nu"])), "s": p0.s, "cohomology": res.to_json()})


def cmd_mu_dominance(a: dict) -> Output:
    return Output(ind.mu_dominance(_weights(a["lambdas"])).to_json())


def cmd_vz_lambda(a: dict) -> Output:
    t, p = _k0_p0(a)
    lam = parse_weight(a["weight"]) if a.get("weight") else None
    return Output({"lambda": list(ind.vz_lambda(t, p, lam, a.get("order") or "mg"))})


def _pair(a: dict):
    n, p, q = _int(a["n"], "n"), _int(a["p"], "p"), _int(a["q"], "q")
    k = SymmetricPairData(n, p, q)
    g = LieType("A", n - 1)
    return g, k, compatible_parabolic(g, _h(a["h"]))


def cmd_vz_bottom(a: dict) -> Output:
    g, k, p = _pair(a)
    check, _ = ind.lambda_p_check(g, k, p)
    return Output({"lambda_p": list(ind.vz_lambda(g, p)), "lambda_p_check": list(check), "nonzero": ind.vz_bottom_nonzero(g, k, p)})


def cmd_fernando_kac(a: dict) -> Output:
    g, k, p = _pair(a)
    res = ind.fernando_kac(g, k, p)
    return Output(res.to_json(), f"case\ta\tb\n{res.label}\t{res.a}\t{res.b}")


def cmd_stabilize(a: dict) -> Output:
    lo, hi = _range(a["n"])
    rep = stabilization_scan(
        parse_family(a["family"]), _int(a["a"], "a"), _int(a["b"], "b"), _int(a["c"], "c"), _int(a["k"], "k"), lo, hi
    )
    return Output(rep.to_json(), rep.to_tsv())


def cmd_finite_type(a: dict) -> Output:
    rep = finite_type_probe(
        ChainSpec.parse(a["chain"]),
        _h(a["h"]),
        _weights(a.get("e") or ""),
        _int(a["t_max"], "t_max"),
        _int(a["n_start"], "n_start"),
    )
    return Output(rep.to_json(), rep.to_tsv())


def cmd_verify(a: dict) -> Output:
    suite = a["suite"]
    if suite != "all" and suite not in SUITES:
        raise ParseError(f"unknown suite {suite!r}; choose from all, {', '.join(SUITES)}")
    rows = run_suite(suite)
    ok = all(p == t for _, _, p, t in rows)
    data = {"passed": ok, "checks": [{"suite": s, "property": n, "passed": p, "total": t} for s, n, p, t in rows]}
    tsv = "\n".join(["suite\tproperty\tpassed\ttotal"] + [f"{s}\t{n}\t{p}\t{t}" for s, n, p, t in rows])
    return Output(data, tsv, ok)


_T = Param("type", "Lie type such as GL3, A2, B3", None)
_H = Param("h", "torus element such as [1,-1,0]", None)
_W = Param("weight", "weight such as [1,0,-1]", None)

COMMANDS: dict[str, tuple[str, list[Param], Handler]] = {
    "roots": ("positive and simple roots", [_T], cmd_roots),
    "rho": ("half sum of positive roots (gl uses [n-1,...,0])", [_T], cmd_rho),
    "dominant": ("dominance test and dominant representative", [_T, _W], cmd_dominant),
    "weyl-dim": ("Weyl dimension formula", [_T, _W], cmd_weyl_dim),
    "tensor": ("decompose V(lhs) (x) V(rhs)", [_T, Param("lhs", "first highest weight"), Param("rhs", "second highest weight")], cmd_tensor),
    "branch": ("restrict V(weight) from level+1 to level of a chain", [Param("chain", "chain spec"), Param("level", "lower level (1-indexed)"), _W], cmd_branch),
    "branch-diagonal": ("restrict from gl(m*theta) to the diagonal gl(m)", [Param("m", "size of the small algebra"), Param("theta", "number of diagonal copies"), _W], cmd_branch_diagonal),
    "pad": ("pad a gl(n) weight with zeros to length N", [_W, Param("to", "target length N"), Param("n", "source length (default: length of weight)", "")], cmd_pad),
    "parabolic": ("compatible parabolic of h", [_T, _H], cmd_parabolic),
    "centralizer": ("centralizer of gl(p) embedded diagonally in gl(p*theta)", [Param("p", "size of gl(p)"), Param("theta", "block size")], cmd_centralizer),
    "s-value": ("number of nilradical roots", [_T, _H], cmd_s_value),
    "nu-check": ("nu -> w_k0 w_m0^-1 . nu", [_T, _H, Param("nu", "Levi-dominant weight")], cmd_nu_check),
    "bottom-layer": ("apply nu_check to a list of Levi types", [_T, _H, Param("entries", "weight:mult pairs separated by ;")], cmd_bottom_layer),
    "bbw": ("Bott-Borel-Weil cohomology of a line bundle", [_T, _H, Param("nu", "Levi-dominant weight")], cmd_bbw),
    "mu-dominance": ("gl(p) dominance of the summed block weights", [Param("lambdas", "block weights separated by ;")], cmd_mu_dominance),
    "vz-lambda": ("Vogan-Zuckerman weight", [_T, _H, Param("weight", "dominant weight (default 0)", ""), Param("order", "mg (default) or gm", "mg")], cmd_vz_lambda),
    "vz-bottom": ("does lambda_p_check occur in Lambda(k-perp)", [Param("n", "size"), Param("p", "first block"), Param("q", "second block"), _H], cmd_vz_bottom),
    "fernando-kac": ("Fernando-Kac subalgebra of A_p(F)", [Param("n", "size"), Param("p", "first block"), Param("q", "second block"), _H], cmd_fernando_kac),
    "stabilize": ("scan T^k(V^a + V*^b + C^c) over n", [Param("family", "sl, gl, B, C or D"), Param("a", "copies of V", "0"), Param("b", "copies of V*", "0"), Param("c", "copies of C", "0"), Param("k", "tensor power", "1"), Param("n", "range lo..hi", "2..6")], cmd_stabilize),
    "finite-type": ("lengths of S^t(nbar) (x) E along a chain", [Param("chain", "chain spec"), _H, Param("e", "block weights separated by ; (empty: trivial)", ""), Param("t_max", "largest t", "3"), Param("n_start", "first level", "2")], cmd_finite_type),
    "verify": ("run the property checks", [Param("suite", "all or a module name", "all")], cmd_verify),
}

_GLOBAL_KEYS = ("command", "format", "seed")


# --------------------------------------------------------------------------
# config handling


class UsageError(Exception):
    pass


def read_config(path: str) -> dict[str, str]:
    """Flat ``key=value`` lines, or any previous output (its header is used)."""
    try:
        text = open(path, encoding="utf-8").read()
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from None
    if text.lstrip().startswith("{"):
        try:
            return {k: str(v) for k, v in json.loads(text)["header"]["config"].items()}
        except (ValueError, KeyError, TypeError):
            raise UsageError(f"{path}: not a bottomlayer JSON output") from None
    lines = text.splitlines()
    from_output = bool(lines) and lines[0].startswith("# bottomlayer")
    out: dict[str, str] = {}
    for lineno, line in enumerate(lines, 1):
        line = line.strip()
        if from_output:
            if lineno == 1:
                continue
            if not line.startswith("# ") or "=" not in line:
                break
            line = line[2:]
        elif not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise UsageError(f"{path}:{lineno}: expected key=value")
        out[key.strip().replace("-", "_")] = value.strip()
    return out


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    common.add_argument("--format", choices=("json", "tsv", "pretty"), default=argparse.SUPPRESS)
    common.add_argument("--config", default=argparse.SUPPRESS, help="key=value file; flags win")
    common.add_argument("--seed", default=argparse.SUPPRESS, help="seed for randomized sweeps")
    parser = argparse.ArgumentParser(prog="bottomlayer", description=__doc__.splitlines()[0], parents=[common], allow_abbrev=False)
    parser.add_argument("--version", action="version", version=f"bottomlayer {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="command")
    for name, (help_text, params, _) in COMMANDS.items():
        sp = sub.add_parser(name, help=help_text, parents=[common], allow_abbrev=False)
        for p in params:
            sp.add_argument(p.flag, dest=p.name, default=argparse.SUPPRESS, help=p.help)
    return parser


def resolve(argv: Sequence[str]) -> dict[str, str]:
    """Merge config file and flags into one flat string-valued configuration."""
    parser = _build_parser()
    pre = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    pre.add_argument("--config")
    known, _ = pre.parse_known_args(argv)
    cfg = read_config(known.config) if known.config else {}
    argv = list(argv)
    if not any(x in COMMANDS for x in argv) and "command" in cfg:
        argv.insert(0, cfg["command"])
    args = vars(parser.parse_args(argv))
    command = args.get("command")
    if not command:
        raise UsageError("no command given")
    _, params, _ = COMMANDS[command]
    names = {p.name for p in params}
    unknown = set(cfg) - names - set(_GLOBAL_KEYS)
    if unknown:
        raise UsageError(f"unknown config keys for {command}: {', '.join(sorted(unknown))}")
    config = {"command": command, "format": "json", "seed": "0"}
    config.update({k: v for k, v in cfg.items() if k in _GLOBAL_KEYS and k != "command"})
    for p in params:
        if p.name in args:
            config[p.name] = args[p.name]
        elif p.name in cfg:
            config[p.name] = cfg[p.name]
        elif p.default is not None:
            config[p.name] = p.default
        else:
            raise UsageError(f"{command}: missing required {p.flag}")
    for k in ("format", "seed"):
        if k in args:
            config[k] = args[k]
    if config["format"] not in ("json", "tsv", "pretty"):
        raise UsageError(f"unknown format {config['format']!r}")
    return config


def _header_lines(config: dict[str, str]) -> list[str]:
    return [f"# bottomlayer {__version__}"] + [f"# {k}={v}" for k, v in config.items()]


def render(config: dict[str, str], out: Output) -> str:
    fmt = config["format"]
    if fmt == "json":
        doc = {"header": {"tool": "bottomlayer", "version": __version__, "config": config}, "result": out.data}
        return json.dumps(doc, indent=1)
    if fmt == "tsv" and out.tsv is not None:
        body = out.tsv
    elif fmt == "tsv":
        body = "\n".join(f"{k}\t{json.dumps(v)}" for k, v in out.data.items()) if isinstance(out.data, dict) else json.dumps(out.data)
    else:
        body = json.dumps(out.data, indent=2)
    return "\n".join(_header_lines(config) + [body])


def run(config: dict[str, str]) -> tuple[int, str]:
    _, _, handler = COMMANDS[config["command"]]
    args = {k: v for k, v in config.items() if k not in _GLOBAL_KEYS}
    out = handler(args)
    return (0 if out.ok else 1), render(config, out)


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        config = resolve(argv)
    except UsageError as exc:
        print(f"bottomlayer: error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:  # argparse
        return int(exc.code or 0)
    try:
        code, text = run(config)
    except ParseError as exc:
        print(f"bottomlayer: error: ParseError: {exc}", file=sys.stderr)
        return 2
    except BottomLayerError as exc:
        print(f"bottomlayer: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except (ValueError, KeyError) as exc:
        print(f"bottomlayer: error: {exc}", file=sys.stderr)
        return 2
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
