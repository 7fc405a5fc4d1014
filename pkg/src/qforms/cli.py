"""Command-line front end.

Module descriptors::

    irr:<pairings>             irreducible quotient, e.g. irr:1,0
    verma:<pairings>           Verma module, e.g. verma:-1
    par:<levi>:<pairings>      scalar parabolic module, e.g. par:1:0,3 (levi indices joined by |)

Pairings are the rationals ``(lam, alpha_i)``. Exit codes of ``check``:
0 completely reducible up to the cutoff, 2 defect found, 1 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .cartan import enumerate_drops, format_drop, get_datum, height, parse_drop, parse_weight
from .coeffs import session_degree
from .hwmodule import build
from .tensor import TensorProduct, lowest_height, theta, theta_via_verma, theta_zv, verdict
from .unitarity import positivity_check

SCHEMA = 1
OUT_DIR_ENV = "QFORMS_OUT_DIR"
KIND_TAGS = {"irr": "irreducible", "verma": "verma", "par": "parabolic"}
TAG_OF = {v: k for k, v in KIND_TAGS.items()}


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# case specifications

def _fmt_weight(hw):
    return ",".join(str(Fraction(x)) for x in hw)


@dataclass(frozen=True)
class ModuleDesc:
    kind: str
    hw: tuple
    levi: tuple = ()

    @classmethod
    def parse(cls, text):
        tag, sep, rest = str(text).partition(":")
        if not sep or tag not in KIND_TAGS:
            raise UsageError(f"bad module descriptor {text!r} (expected irr:, verma: or par:)")
        levi = ()
        if tag == "par":
            lv, sep, rest = rest.partition(":")
            if not sep:
                raise UsageError(f"parabolic descriptor needs par:<levi>:<pairings>, got {text!r}")
            try:
                levi = tuple(sorted(int(x) - 1 for x in lv.split("|") if x))
            except ValueError:
                raise UsageError(f"bad Levi subset in {text!r}") from None
        try:
            hw = parse_weight(rest)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        return cls(KIND_TAGS[tag], hw, levi)

    def to_string(self):
        tag = TAG_OF[self.kind]
        if self.kind == "parabolic":
            return f"par:{'|'.join(str(i + 1) for i in self.levi)}:{_fmt_weight(self.hw)}"
        return f"{tag}:{_fmt_weight(self.hw)}"


@dataclass(frozen=True)
class CaseSpec:
    datum: str
    v: ModuleDesc
    z: ModuleDesc
    height: int | None = None

    def to_string(self):
        h = "auto" if self.height is None else str(self.height)
        return f"{self.datum} {self.v.to_string()} {self.z.to_string()} H={h}"

    @classmethod
    def parse(cls, text):
        parts = text.split()
        if len(parts) != 4 or not parts[3].startswith("H="):
            raise UsageError(f"malformed case string {text!r}")
        h = parts[3][2:]
        return cls(parts[0], ModuleDesc.parse(parts[1]), ModuleDesc.parse(parts[2]),
                   None if h == "auto" else int(h))

    def sufficient_height(self):
        X = get_datum(self.datum)
        if self.v.kind != "irreducible" or self.z.kind != "irreducible":
            return None
        a, b = lowest_height(X, self.v.hw), lowest_height(X, self.z.hw)
        if a is None or b is None:
            return None
        return a + b

    def modules(self, H):
        X = get_datum(self.datum)
        for m in (self.v, self.z):
            if len(m.hw) != X.rank:
                raise UsageError(f"{X.label} weights need {X.rank} pairings, got {m.to_string()}")
        D = session_degree(self.v.hw + self.z.hw)
        try:
            V = build(X, self.v.hw, self.v.kind, H, self.v.levi, D=D)
            Z = build(X, self.z.hw, self.z.kind, H, self.z.levi, D=D)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        return TensorProduct(V, Z)


def _resolve_height(spec: CaseSpec):
    suff = spec.sufficient_height()
    H = spec.height if spec.height is not None else suff
    if H is None:
        raise UsageError("--height is required unless both modules are finite-dimensional")
    if H < 0:
        raise UsageError("--height must be non-negative")
    return H, suff


# ---------------------------------------------------------------------------
# reports

def _s(x):
    return x.to_string()


def _mat(m):
    return None if m is None else [[_s(x) for x in row] for row in m]


def check_report(spec: CaseSpec) -> dict:
    H, suff = _resolve_height(spec)
    T = spec.modules(H)
    vd = verdict(T, None, H)
    rep = {
        "schema": SCHEMA,
        "datum": T.datum.label,
        "D": T.D,
        "hw_v": [str(x) for x in spec.v.hw],
        "hw_z": [str(x) for x in spec.z.hw],
        "kinds": [spec.v.to_string(), spec.z.to_string()],
        "cutoff": H,
        "sufficient_height": suff,
        "unconditional": suff is not None and H >= suff,
        "drops": [
            {
                "drop": format_drop(r["drop"]),
                "dim_singular": r["dim_singular"],
                "gram_rank": r["gram_rank"],
                "theta_rank": r["theta_rank"],
                "pullback_ok": r["pullback_ok"],
            }
            for r in vd.records
        ],
        "singular_drops": [format_drop(r["drop"]) for r in vd.records if r["dim_singular"]],
        "defect": None if vd.defect is None else format_drop(vd.defect),
        "conclusion": vd.conclusion,
    }
    return rep


def twist_report(spec: CaseSpec, drop_text: str) -> dict:
    X = get_datum(spec.datum)
    try:
        drop = parse_drop(drop_text, X.rank)
    except ValueError:
        raise UsageError(f"malformed drop {drop_text!r}") from None
    H = spec.height if spec.height is not None else height(drop)
    if height(drop) > H:
        raise UsageError(f"drop {format_drop(drop)} is beyond the cutoff H={H}")
    T = spec.modules(H)
    a = theta(T, drop)
    b = theta_zv(T, drop)
    c = theta_via_verma(T, drop)
    if c["hypothesis"]:
        lift = _mat(c["matrix"])
    else:
        lift = "dimension gap"
    return {
        "schema": SCHEMA,
        "datum": T.datum.label,
        "D": T.D,
        "hw_v": [str(x) for x in spec.v.hw],
        "hw_z": [str(x) for x in spec.z.hw],
        "kinds": [spec.v.to_string(), spec.z.to_string()],
        "cutoff": H,
        "drop": format_drop(drop),
        "dim_singular": a.dim_singular,
        "gram": _mat(a.gram),
        "gram_rank": a.gram_rank,
        "theta_vz": {"matrix": _mat(a.matrix), "rank": a.theta_rank, "transversal": a.transversal},
        "theta_zv": {"matrix": _mat(b.matrix), "rank": b.theta_rank, "transversal": b.transversal},
        "verma_lift": lift,
        "verma_gap": c["gap"],
        "verma_agrees": c["agrees"],
        "pullback_ok": a.pullback_ok,
    }


# ---------------------------------------------------------------------------
# scans

def _grid_values(expr):
    expr = expr.strip()
    vals = []
    for item in expr.split("|"):
        item = item.strip()
        if ".." in item:
            lo, _, hi = item.partition("..")
            try:
                lo, hi = Fraction(lo), Fraction(hi)
            except ValueError:
                raise UsageError(f"bad range {item!r}") from None
            x = lo
            while x <= hi:
                vals.append(x)
                x += 1
        elif item:
            try:
                vals.append(Fraction(item))
            except ValueError:
                raise UsageError(f"bad grid value {item!r}") from None
    return vals


def expand_grid(template: str) -> list:
    """``verma:-3..3`` -> descriptors for every grid point (cartesian over coordinates)."""
    head, sep, coords = template.rpartition(":")
    if not sep or head.split(":")[0] not in KIND_TAGS:
        raise UsageError(f"bad grid descriptor {template!r}")
    axes = [_grid_values(c) for c in coords.split(",")]
    out = []
    for point in itertools.product(*axes):
        out.append(ModuleDesc.parse(f"{head}:{_fmt_weight(point)}"))
    return out


SCAN_HEADER = ["datum", "v", "z", "cutoff", "conclusion", "defect", "singular_drops"]


def _scan_row(args):
    label, v, z, H = args
    spec = CaseSpec(label, ModuleDesc.parse(v), ModuleDesc.parse(z), H)
    rep = check_report(spec)
    return [label, v, z, str(H), rep["conclusion"], rep["defect"] or "", " ".join(rep["singular_drops"])]


def run_scan(label, v_template, z_template, H, out=None, jobs=1):
    get_datum(label)
    keys = [
        (label, v.to_string(), z.to_string(), H)
        for v in expand_grid(v_template)
        for z in expand_grid(z_template)
    ]
    done = {}
    journal = None
    if out:
        journal = out + ".journal"
        if os.path.exists(journal):
            with open(journal) as fh:
                for line in fh:
                    line = line.strip()
                    if not line:
                        continue
                    try:
                        rec = json.loads(line)
                    except json.JSONDecodeError:
                        # a torn final line from an interrupted run
                        continue
                    done[tuple(rec["key"][:3]) + (int(rec["key"][3]),)] = rec["row"]
    todo = [k for k in keys if k not in done]
    if todo:
        fh = open(journal, "a") if journal else None
        try:
            if jobs and jobs > 1:
                with ProcessPoolExecutor(max_workers=jobs) as pool:
                    for k, row in zip(todo, pool.map(_scan_row, todo)):
                        done[k] = row
                        _journal(fh, k, row)
            else:
                for k in todo:
                    done[k] = _scan_row(k)
                    _journal(fh, k, done[k])
        finally:
            if fh:
                fh.close()
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(SCAN_HEADER)
    for k in keys:
        w.writerow(done[k])
    return buf.getvalue()


def _journal(fh, key, row):
    if fh is None:
        return
    fh.write(json.dumps({"key": list(key), "row": row}) + "\n")
    fh.flush()


# ---------------------------------------------------------------------------
# argument handling

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


CONFIG_KEYS = {"type", "v", "z", "height", "drop", "out", "jobs", "q0"}


def read_config(path):
    """``key=value`` lines (``#`` comments allowed); keys mirror the long flags."""
    cfg = {}
    try:
        with open(path) as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from None
    for n, line in enumerate(lines, 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, val = line.partition("=")
        key = key.strip().replace("-", "_")
        if not sep or key not in CONFIG_KEYS:
            raise UsageError(f"{path}:{n}: expected one of {sorted(CONFIG_KEYS)} as key=value")
        cfg[key] = val.strip()
    return cfg


def make_parser():
    p = _Parser(prog="qforms", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command")

    def common(sp, with_v=True):
        sp.add_argument("--config", help="key=value file with defaults for the flags")
        sp.add_argument("--type", help="root datum: A1, A2, A3, B2, G2")
        if with_v:
            sp.add_argument("--v", help="descriptor of the first factor")
            sp.add_argument("--z", help="descriptor of the second factor")
        sp.add_argument("--out", help=f"output file (relative paths resolve against ${OUT_DIR_ENV})")

    c = sub.add_parser("check", help="complete-reducibility verdict as JSON")
    common(c)
    c.add_argument("--height", type=int, help="height cutoff (default: sufficient height when finite-dimensional)")
    t = sub.add_parser("twist", help="extremal twist at one drop as JSON")
    common(t)
    t.add_argument("--drop", help="drop such as a1+2a2 or 1,2")
    t.add_argument("--height", type=int, help="materialization cutoff (default: height of the drop)")
    s = sub.add_parser("scan", help="verdicts over a weight grid as CSV")
    common(s)
    s.add_argument("--height", type=int)
    s.add_argument("--jobs", type=int, help="worker processes")
    u = sub.add_parser("positivity", help="Hermitian leading minors at q0 as JSON")
    common(u, with_v=False)
    u.add_argument("--v", help="irreducible descriptor")
    u.add_argument("--q0", help="positive rational q (default 2)")
    return p


def _merge_config(args):
    if not getattr(args, "config", None):
        return args
    for k, val in read_config(args.config).items():
        if hasattr(args, k) and getattr(args, k) is None:
            if k in ("height", "jobs"):
                try:
                    val = int(val)
                except ValueError:
                    raise UsageError(f"config value {k}={val!r} is not an integer") from None
            setattr(args, k, val)
    return args


def _out_path(path):
    if path is None:
        return None
    base = os.environ.get(OUT_DIR_ENV)
    if base and not os.path.isabs(path):
        path = os.path.join(base, path)
    parent = os.path.dirname(path)
    if parent:
        os.makedirs(parent, exist_ok=True)
    return path


def _emit(text, out, stdout):
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    stdout.write(text)


def _require(args, *names):
    for n in names:
        if getattr(args, n, None) in (None, ""):
            raise UsageError(f"--{n} is required")


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = make_parser()
    try:
        args = _merge_config(parser.parse_args(argv))
        if args.command is None:
            raise UsageError("choose a command: check, twist, scan, positivity")
        _require(args, "type")
        try:
            get_datum(args.type)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        label = args.type.upper()
        out = _out_path(args.out)
        if args.command == "check":
            _require(args, "v", "z")
            spec = CaseSpec(label, ModuleDesc.parse(args.v), ModuleDesc.parse(args.z), args.height)
            rep = check_report(spec)
            _emit(json.dumps(rep, indent=2) + "\n", out, stdout)
            return 0 if rep["defect"] is None else 2
        if args.command == "twist":
            _require(args, "v", "z", "drop")
            spec = CaseSpec(label, ModuleDesc.parse(args.v), ModuleDesc.parse(args.z), args.height)
            rep = twist_report(spec, args.drop)
            _emit(json.dumps(rep, indent=2) + "\n", out, stdout)
            return 0
        if args.command == "scan":
            _require(args, "v", "z", "height")
            if args.height < 0:
                raise UsageError("--height must be non-negative")
            text = run_scan(label, args.v, args.z, args.height, out, args.jobs or 1)
            _emit(text, out, stdout)
            return 0
        if args.command == "positivity":
            _require(args, "v")
            m = ModuleDesc.parse(args.v)
            X = get_datum(label)
            depth = lowest_height(X, m.hw) if len(m.hw) == X.rank else None
            if m.kind != "irreducible" or depth is None:
                raise UsageError("positivity needs an irreducible module with dominant integral weight")
            try:
                q0 = Fraction(args.q0 or 2)
                M = build(X, m.hw, "irreducible", depth)
                rep = positivity_check(M, q0)
            except (ValueError, ZeroDivisionError) as exc:
                raise UsageError(str(exc)) from None
            body = {"schema": SCHEMA, "datum": label, "module": m.to_string(), **rep.to_json()}
            _emit(json.dumps(body, indent=2) + "\n", out, stdout)
            return 0 if rep.passed else 2
    except UsageError as exc:
        stderr.write(f"qforms: error: {exc}\n")
        return 1
    return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
