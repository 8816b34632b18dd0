"""Command-line front end.

Text output is meant for people; ``--json`` output is the stable interface.
Exit codes: 0 success (or verdict ``full``), 1 verdict ``proper``,
2 verdict ``indeterminate`` or a failed ``check`` sweep, 64 usage error,
65 malformed or inadmissible input data.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Sequence

from . import __version__

EX_USAGE = 64
EX_DATAERR = 65


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _weight_text(w: Sequence[int]) -> str:
    return "(" + ",".join(str(x) for x in w) + ")"


# ---------------------------------------------------------------------------
# weight-engine subcommands

def _algebra_and_weight(alg: str, *weights: str):
    from .rootsys import InvalidWeight, as_semisimple, is_dominant, parse_algebra, parse_weight

    t = parse_algebra(alg)
    rank = as_semisimple(t).rank
    out = []
    for w in weights:
        lam = parse_weight(w)
        if len(lam) != rank:
            raise InvalidWeight(f"{alg} needs {rank} labels, got {len(lam)}")
        if not is_dominant(lam):
            raise InvalidWeight(f"{_weight_text(lam)} is not dominant")
        out.append(lam)
    return t, out


def _simple_and_weights(alg: str, *weights: str):
    from .rootsys import InvalidAlgebra, SimpleType

    t, ws = _algebra_and_weight(alg, *weights)
    if not isinstance(t, SimpleType):
        raise InvalidAlgebra(f"{alg} is not simple; this subcommand needs a simple algebra")
    return t, ws


def cmd_dim(a):
    from .rootsys import weyl_dim

    t, (lam,) = _algebra_and_weight(a.algebra, a.weight)
    d = weyl_dim(t, lam)
    return {"algebra": str(t), "weight": list(lam), "dimension": d}, str(d), 0


def cmd_decompose(a):
    from .repdecomp import one_norm, tensor_decompose, two_norm

    t, (lam, mu) = _simple_and_weights(a.algebra, a.weight1, a.weight2)
    dec = tensor_decompose(t, lam, mu)
    data = dec.to_json()
    data.update(one_norm=one_norm(dec), two_norm=two_norm(dec))
    return data, dec.format(), 0


def cmd_square(a):
    from .repdecomp import alt_square, sym_square

    t, (lam,) = _simple_and_weights(a.algebra, a.weight)
    dec = (sym_square if a.sym else alt_square)(t, lam)
    data = dec.to_json()
    data["kind"] = "sym" if a.sym else "alt"
    return data, dec.format(), 0


def cmd_dual(a):
    from .repdecomp import dual_weight, is_self_dual

    t, (lam,) = _simple_and_weights(a.algebra, a.weight)
    d = dual_weight(t, lam)
    return ({"algebra": str(t), "weight": list(lam), "dual": list(d), "self_dual": is_self_dual(t, lam)},
            _weight_text(d), 0)


def cmd_classify(a):
    from .reptype import fs_oracle, malcev_class

    t, (lam,) = _simple_and_weights(a.algebra, a.weight)
    c = malcev_class(t, lam)
    data = {"algebra": str(t), "weight": list(lam), "class": c.value}
    text = c.value
    if a.oracle:
        o = fs_oracle(t, lam, a.oracle)
        data["oracle"] = {"method": a.oracle, "class": o.value, "agrees": o == c}
        text += f"  (oracle {a.oracle}: {o.value})"
    return data, text, 0


def cmd_chains(a):
    from .dynkin_tools import guaranteed_constituents, minimal_chains

    t, (lam, mu) = _simple_and_weights(a.algebra, a.weight1, a.weight2)
    chains = [list(c.root_indices) for c in minimal_chains(t, lam, mu)]
    cons = sorted(guaranteed_constituents(t, lam, mu), reverse=True)
    lines = ["chains: " + ("; ".join("[" + ",".join(map(str, c)) + "]" for c in chains) or "none"),
             "guaranteed: " + ", ".join(_weight_text(w) for w in cons)]
    return ({"algebra": str(t), "weights": [list(lam), list(mu)], "chains": chains,
             "guaranteed_constituents": [list(w) for w in cons]}, "\n".join(lines), 0)


def cmd_parts(a):
    from .dynkin_tools import part_weight
    from .rootsys import parse_weight

    t, (lam,) = _simple_and_weights(a.algebra, a.weight)
    deleted = set(parse_weight(a.delete))
    h, w = part_weight(t, lam, deleted)
    pieces = h.split(w)
    text = " + ".join(f"{f} {_weight_text(p)}" for f, p in zip(h.factors, pieces))
    return ({"algebra": str(t), "weight": list(lam), "deleted": sorted(deleted),
             "part": [{"algebra": str(f), "weight": list(p)} for f, p in zip(h.factors, pieces)]}, text, 0)


def cmd_tables(a):
    from .tables import regenerate

    rows = regenerate(a.kind, a.max_rank, a.max_sum, a.non_self_dual)
    lines = []
    for r in rows:
        lines.append(f"{r['algebra']:<6} {r['type']:<4} {_weight_text(r['phi']):<18} {r['dim_phi']:>5}  "
                     f"{_weight_text(r['square']):<18} {r['dim_square']:>6}  {r['case'] or '-'}")
    data = {"kind": a.kind, "max_rank": a.max_rank, "max_sum": a.max_sum,
            "non_self_dual": a.non_self_dual, "rows": rows}
    return data, "\n".join(lines), 0


# ---------------------------------------------------------------------------
# matrix-engine subcommands

def _load(path):
    from .matio import load_rep

    return load_rep(path)


def _tol(a):
    from .matrixrep import DEFAULT_TOL

    return DEFAULT_TOL if a.tol is None else a.tol


def _derived(r, how):
    from . import matrixrep as mr

    return {"rep": r, "square": mr.tensor_square(r), "dual-square": mr.tensor_with_dual(r)}[how]


def cmd_commutant(a):
    from .matrixrep import commutant

    r = _derived(_load(a.input), a.of)
    res = commutant(r, a.backend, _tol(a), a.seed)
    data = res.to_json()
    data["of"] = a.of
    text = f"{res.dim}" + ("" if res.determinate else "  (indeterminate)")
    return data, text, 0 if res.determinate else 2


def cmd_closure(a):
    from .matrixrep import lie_closure

    c = lie_closure(_load(a.input), a.backend, _tol(a))
    gap = c.gap_ratio if c.gap_ratio is not None and c.gap_ratio != float("inf") else None
    data = {"closure_dimension": c.dimension, "dimension_kind": "real", "backend": c.backend,
            "determinate": c.determinate, "gap_ratio": gap}
    return data, str(c.dimension), 0 if c.determinate else 2


def cmd_profile(a):
    from .matrixrep import isotypic_profile

    r = _derived(_load(a.input), a.of)
    p = isotypic_profile(r, seed=a.seed, backend=a.backend)
    data = p.to_json()
    text = ", ".join(f"{d} ×{m}" for d, m in p.blocks) + f"  (seed {a.seed})"
    return data, text, 0 if p.determinate else 2


def cmd_decide(a):
    from . import decide as dc

    if a.procedure == "parent":
        if not a.parent:
            raise UsageError("decide parent needs --parent")
        rep = dc.equals_parent(_load(a.input), _load(a.parent), a.backend, _tol(a), a.seed, a.assume_semisimple)
    else:
        if a.dim is None:
            raise UsageError(f"decide {a.procedure} needs --dim")
        if a.procedure == "sp" and a.dim % 2:
            raise UsageError("decide sp needs an even --dim")
        fn = {"su": dc.is_full_su, "so": dc.is_full_so, "sp": dc.is_full_sp}[a.procedure]
        size = a.dim // 2 if a.procedure == "sp" else a.dim
        rep = fn(_load(a.input), size, a.backend, _tol(a), a.seed, a.cross_check)
    dims = ", ".join(f"{k}={v}" for k, v in rep.computed.items())
    text = f"{rep.verdict}  ({dims}; expected {rep.expected}; backend {rep.backend})"
    if rep.closure_check:
        text += f"\nclosure: {rep.closure_check['closure_dimension']} (expected {rep.closure_check['expected']})"
    return rep.to_json(), text, rep.exit_code


def cmd_check(a):
    from . import checks

    if a.suite == "ptranspose":
        res = checks.ptranspose_sweep(backend=a.backend)
    elif a.suite == "malcev-fs":
        res = checks.malcev_fs_sweep(a.max_rank, a.max_sum, a.method, a.max_dim)
    else:
        res = checks.SWEEPS[a.suite](a.max_rank, a.max_sum, a.max_dim)
    text = f"{res.name}: {res.cases} cases, {len(res.violations)} violations"
    for v in res.violations[:20]:
        text += "\n  " + json.dumps(v)
    return res.to_json(), text, 0 if res.ok else 2


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--output", choices=["text", "json"], help="output format (same as --json when json)")
    common.add_argument("--backend", choices=["auto", "exact", "float"], default=None,
                        help="linear-algebra backend (default: $LIESQ_BACKEND or auto)")
    common.add_argument("--tol", type=float, default=None, help="float-backend tolerance (ignored by exact)")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized steps (default 0)")

    p = _Parser(prog="liesq", description="Tensor squares of compact Lie algebra representations.")
    p.add_argument("--version", action="version", version=f"liesq {__version__}")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, fn, help_):
        s = sub.add_parser(name, parents=[common], help=help_)
        s.set_defaults(func=fn)
        return s

    s = add("dim", cmd_dim, "Weyl dimension")
    s.add_argument("algebra")
    s.add_argument("weight")
    s = add("decompose", cmd_decompose, "tensor product decomposition")
    s.add_argument("algebra")
    s.add_argument("weight1")
    s.add_argument("weight2")
    s = add("square", cmd_square, "alternating or symmetric square")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--alt", action="store_true")
    g.add_argument("--sym", action="store_true")
    s.add_argument("algebra")
    s.add_argument("weight")
    s = add("dual", cmd_dual, "dual highest weight")
    s.add_argument("algebra")
    s.add_argument("weight")
    s = add("classify", cmd_classify, "orthogonal / symplectic / unitary type")
    s.add_argument("algebra")
    s.add_argument("weight")
    s.add_argument("--oracle", choices=["adams", "center", "squares"])
    s = add("chains", cmd_chains, "minimal chains and guaranteed constituents")
    s.add_argument("algebra")
    s.add_argument("weight1")
    s.add_argument("weight2")
    s = add("parts", cmd_parts, "delete Dynkin nodes")
    s.add_argument("algebra")
    s.add_argument("weight")
    s.add_argument("--delete", required=True, help="comma-separated 1-based node indices")
    s = add("tables", cmd_tables, "regenerate irreducible-square tables")
    s.add_argument("--kind", choices=["alt", "sym"], required=True)
    s.add_argument("--max-rank", type=int, default=8)
    s.add_argument("--max-sum", type=int, default=3)
    s.add_argument("--non-self-dual", action="store_true")

    for name, fn, help_ in (("commutant", cmd_commutant, "commutant dimension of generator matrices"),
                            ("profile", cmd_profile, "isotypic block dimensions and multiplicities")):
        s = add(name, fn, help_)
        s.add_argument("--input", required=True)
        s.add_argument("--of", choices=["rep", "square", "dual-square"], default="rep",
                       help="use the generators, their tensor square, or tensor-with-dual")
    s = add("closure", cmd_closure, "Lie closure dimension")
    s.add_argument("--input", required=True)

    s = add("decide", cmd_decide, "full-algebra decision procedures")
    s.add_argument("procedure", choices=["su", "so", "sp", "parent"])
    s.add_argument("--dim", type=int, help="matrix size n (su: n, so: k, sp: 2l)")
    s.add_argument("--input", required=True)
    s.add_argument("--parent")
    s.add_argument("--cross-check", action="store_true", help="also compute the Lie closure")
    s.add_argument("--assume-semisimple", action="store_true")

    s = add("check", cmd_check, "property sweeps")
    s.add_argument("suite", choices=["cz", "kw", "ptranspose", "malcev-fs", "alt-sym", "chains",
                                     "subordination", "parts"])
    s.add_argument("--max-rank", type=int, default=4)
    s.add_argument("--max-sum", type=int, default=2)
    s.add_argument("--max-dim", type=int, default=None)
    s.add_argument("--method", choices=["adams", "center", "squares"], default="adams")
    return p


def run(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    from .decide import PreconditionError
    from .matio import MatrixFormatError
    from .rootsys import InvalidAlgebra, InvalidWeight

    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
        if not getattr(a, "func", None):
            raise UsageError("missing subcommand")
        data, text, code = a.func(a)
    except UsageError as exc:
        print(f"liesq: usage error: {exc}", file=err)
        parser.print_usage(err)
        return EX_USAGE
    except (InvalidAlgebra, InvalidWeight) as exc:
        print(f"liesq: {exc}", file=err)
        return EX_USAGE
    except (MatrixFormatError, PreconditionError, OSError, ValueError) as exc:
        print(f"liesq: {exc}", file=err)
        return EX_DATAERR
    if a.json or a.output == "json":
        print(json.dumps(data, sort_keys=True), file=out)
    else:
        print(text, file=out)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
