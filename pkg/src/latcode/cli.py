"""Command-line front end: ``latcode construct | analyze | search | reproduce | table``.

Exit codes: 0 ok, 1 analysis FAIL (or search exhausted), 2 parse error,
3 unsupported input.  ``LATCODE_THREADS`` caps the worker pool used for
batch jobs.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import analysis as an
from .catalog import EXAMPLES, MIN_EXAMPLES, Example
from .codes import FiniteField, LinearCode, code_from_rows, format_code, parse_code, search_self_dual
from .construction import ConstructionInput, LatticeDesc, build_lattice, check_volume
from .enumeration import shortest_vectors, theta_prefix
from .errors import (
    CodeParseError,
    InvalidField,
    InvalidInput,
    LatcodeError,
    LatticeFormatError,
    NeedLargerPrefix,
    NotPrime,
    NotSystematic,
    PreconditionFailed,
    RankDeficient,
    SearchFailed,
    Unsupported,
    UnsupportedSplitting,
)
from .qfield import QuadField, is_prime, splitting_type
from .reference import REFERENCE_ROWS, ROW_EXAMPLES
from .secrecy import DEFAULT_TOL, secrecy_gain, weak_secrecy_gain
from .serialize import dumps_lattice, dumps_report, frac_str, loads_lattice

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_UNSUPPORTED = 0, 1, 2, 3

ANALYSES = ("integral", "parity", "modularity", "unimodular", "minimum", "theta",
            "secrecy", "evenness", "code-minimum", "volume")
CHI_TOL = 5e-4
DEFAULT_CUTOFF = 9
DEFAULT_MAX_CUTOFF = 20

TARGETS = ("extremal12", "q8_1", "o6", "o3", "o2_bw16", "e8")
CERTIFIED = an.Verdict.CERTIFIED.value


# ---------------------------------------------------------------------------
# worker pool


def worker_count() -> int:
    env = os.environ.get("LATCODE_THREADS")
    n = os.cpu_count() or 1
    if env:
        try:
            n = max(1, min(n, int(env)))
        except ValueError:
            pass
    return n


def run_jobs(fn, items: list) -> list:
    """Map ``fn`` over ``items`` in order, in a process pool when useful."""
    workers = min(worker_count(), len(items))
    if workers <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


# ---------------------------------------------------------------------------
# job configuration


@dataclass
class JobConfig:
    D: int
    p: int
    code: LinearCode
    alpha: Fraction | None = None
    analyses: tuple[str, ...] = ANALYSES
    theta_cutoff: int = DEFAULT_CUTOFF
    tol: float = DEFAULT_TOL
    label: str = ""

    def construction(self) -> ConstructionInput:
        K = QuadField(self.D)
        return ConstructionInput.make(K, self.p, self.code, self.alpha)


def _field_for(D: int, p: int) -> tuple[QuadField, FiniteField]:
    K = QuadField(D)
    return K, FiniteField.residue_field(K, p)


def _inline_code(spec, F: FiniteField) -> LinearCode:
    rows = []
    for i, row in enumerate(spec, 1):
        if isinstance(row, str):
            row = row.replace(",", " ").split()
        if not isinstance(row, list):
            raise CodeParseError("each code row must be a list or a string", i)
        rows.append([str(x) for x in row])
    if not rows:
        raise CodeParseError("inline code has no rows", 1)
    if len({len(r) for r in rows}) != 1:
        raise CodeParseError("inline code rows have different lengths", 1)
    try:
        return code_from_rows(F, rows)
    except (RankDeficient, NotSystematic):
        raise
    except ValueError as exc:
        raise CodeParseError(str(exc)) from None


def load_config(path: Path) -> JobConfig:
    text = path.read_text()
    try:
        if path.suffix.lower() == ".toml":
            obj = tomllib.loads(text)
        else:
            obj = json.loads(text)
    except (json.JSONDecodeError, tomllib.TOMLDecodeError) as exc:
        raise LatticeFormatError(f"{path}: cannot parse config: {exc}") from None
    if not isinstance(obj, dict):
        raise LatticeFormatError(f"{path}: config must be a table/object")
    return config_from_dict(obj, path.parent, default_label=path.stem)


def config_from_dict(obj: dict, base_dir: Path = Path("."), default_label: str = "") -> JobConfig:
    if "example" in obj:
        ex = EXAMPLES.get(obj["example"])
        if ex is None:
            raise LatticeFormatError(f"unknown example {obj['example']!r}")
        obj = {"D": ex.D, "p": ex.p, "code": _example_rows(ex), **{k: v for k, v in obj.items() if k != "example"}}
        default_label = default_label or ex.name
    for key in ("D", "p", "code"):
        if key not in obj:
            raise LatticeFormatError(f"config is missing {key!r}")
    try:
        D, p = int(obj["D"]), int(obj["p"])
    except (TypeError, ValueError):
        raise LatticeFormatError("D and p must be integers") from None
    K, F = _field_for(D, p)
    spec = obj["code"]
    if isinstance(spec, str):
        if "\n" in spec:
            code = parse_code(spec, F)
        else:
            code_path = (base_dir / spec)
            code = parse_code(code_path.read_text(), F)
    else:
        code = _inline_code(spec, F)
    alpha = obj.get("alpha")
    try:
        alpha = None if alpha is None else Fraction(str(alpha))
    except (ValueError, ZeroDivisionError):
        raise LatticeFormatError(f"alpha {alpha!r} is not a rational number") from None
    analyses = obj.get("analyses", list(ANALYSES))
    if analyses == "all":
        analyses = list(ANALYSES)
    bad = [a for a in analyses if a not in ANALYSES]
    if bad:
        raise LatticeFormatError(f"unknown analyses {bad}; choose from {', '.join(ANALYSES)}")
    return JobConfig(D=D, p=p, code=code, alpha=alpha, analyses=tuple(analyses),
                     theta_cutoff=int(obj.get("theta_cutoff", DEFAULT_CUTOFF)),
                     tol=float(obj.get("tol", DEFAULT_TOL)),
                     label=str(obj.get("label", default_label)))


def _example_rows(ex: Example) -> list[list[str]]:
    k = len(ex.A)
    return [["1" if i == j else "0" for j in range(k)] + list(ex.A[i]) for i in range(k)]


# ---------------------------------------------------------------------------
# analysis report


@dataclass
class AnalyzeOptions:
    analyses: tuple[str, ...] = ANALYSES
    level: int | None = None
    theta_cutoff: int = DEFAULT_CUTOFF
    tol: float = DEFAULT_TOL
    max_cutoff: int = DEFAULT_MAX_CUTOFF
    label: str = ""


def default_level(latt: LatticeDesc) -> int:
    K = latt.meta.field
    return K.d if K.is_real else 1


def analyze_lattice(latt: LatticeDesc, opts: AnalyzeOptions) -> dict:
    inp = latt.meta
    want = set(opts.analyses)
    level = opts.level or default_level(latt)
    integral = an.is_integral(latt)
    certs: dict = {}
    notes: list[str] = []
    report: dict = {
        "label": opts.label,
        "D": inp.field.D,
        "p": inp.p,
        "alpha": frac_str(inp.alpha),
        "dim": latt.dim,
        "det": frac_str(latt.det),
        "level": level,
        "mu": None,
        "kissing": None,
        "theta": None,
        "theta_cutoff": None,
        "chi": None,
        "chi_tail": None,
        "chi_cutoff": None,
        "growth_factor": None,
        "certificates": certs,
        "notes": notes,
    }
    if "integral" in want:
        certs["integral"] = integral
    if "volume" in want:
        certs["volume_matches_formula"] = check_volume(latt)
    if "parity" in want:
        certs["parity"] = an.parity(latt).value if integral else None
    if "unimodular" in want:
        certs["unimodular"] = an.is_unimodular(latt)
    if "modularity" in want:
        if integral:
            c = an.modularity_certificate(latt, level)
            certs["modularity"] = {"level": level, "verdict": c.verdict.value, "reason": c.reason}
        else:
            certs["modularity"] = {"level": level, "verdict": None, "reason": "lattice is not integral"}
    if "evenness" in want:
        try:
            certs["predicted_even"] = an.predict_evenness(inp)
        except (Unsupported, PreconditionFailed) as exc:
            certs["predicted_even"] = None
            notes.append(f"evenness criterion skipped: {exc}")
    if "code-minimum" in want:
        try:
            certs["minimum_via_code"] = _jsonable(an.minimum_via_code(inp))
        except Unsupported as exc:
            certs["minimum_via_code"] = None
            notes.append(f"code-based minimum skipped: {exc}")
    theta = None
    if integral and ("theta" in want or "secrecy" in want):
        theta = theta_prefix(latt.gram, opts.theta_cutoff)
        report["theta"] = list(theta.counts)
        report["theta_cutoff"] = theta.M
    if "minimum" in want:
        if theta is not None and theta.minimum is not None:
            report["mu"], report["kissing"] = theta.minimum, theta.kissing
        else:
            mu, ks = shortest_vectors(latt.gram)
            report["mu"], report["kissing"] = _jsonable(mu), ks
    if "secrecy" in want and integral:
        n = latt.dim
        try:
            rep, _ = secrecy_gain(latt.gram, level, opts.tol, max_M=max(opts.max_cutoff, theta.M),
                                  theta=theta)
        except NeedLargerPrefix:
            big = theta_prefix(latt.gram, max(opts.max_cutoff, theta.M))
            rep = weak_secrecy_gain(big, level, n, math.inf)
            notes.append(f"secrecy gain tail estimate {rep.tail_estimate:.2g} is above tol {opts.tol:g} "
                         f"at cutoff {rep.M}")
        report["chi"] = rep.chi
        report["chi_tail"] = rep.tail_estimate
        report["chi_cutoff"] = rep.M
        report["growth_factor"] = rep.growth_factor
    return report


def _jsonable(x):
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else frac_str(x)
    return x


# ---------------------------------------------------------------------------
# tables


TABLE_HEADERS = ["No.", "Dim", "d", "mu", "ks", "chi", "theta"]


def fmt_chi(chi) -> str:
    return "" if chi is None else f"{chi:.4f}"


def report_row(report: dict) -> list[str]:
    theta = report.get("theta") or []
    return [report.get("label", ""), str(report["dim"]), str(report["level"]),
            "" if report["mu"] is None else str(report["mu"]),
            "" if report["kissing"] is None else str(report["kissing"]),
            fmt_chi(report.get("chi")), " ".join(str(t) for t in theta[:10])]


def render_table(headers: list[str], rows: list[list[str]], as_csv: bool = False) -> str:
    if as_csv:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(headers)
        w.writerows(rows)
        return buf.getvalue()
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(headers)]
    line = lambda cells: "| " + " | ".join(c.ljust(w) for c, w in zip(cells, widths)) + " |"
    out = [line(headers), "|" + "|".join("-" * (w + 2) for w in widths) + "|"]
    out += [line(r) for r in rows]
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# reproduce


@dataclass
class Check:
    name: str
    expected: object
    computed: object
    ok: bool

    def line(self, target: str) -> str:
        tag = "PASS" if self.ok else "FAIL"
        return f"{tag}  {target}: {self.name}: expected {self.expected}, computed {self.computed}"


@dataclass
class TargetResult:
    name: str
    source: str
    notes: tuple[str, ...]
    checks: list[Check] = field(default_factory=list)
    report: dict | None = None

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)


def _analyses_for(name: str) -> tuple[str, ...]:
    if name == "o2_bw16":
        # no reference secrecy gain; a tight tail at dimension 16 needs a deep prefix
        return tuple(a for a in ANALYSES if a != "secrecy")
    return ANALYSES


def reproduce_target(name: str) -> TargetResult:
    ex = EXAMPLES[name]
    exp = ex.expected
    latt = ex.lattice()
    cutoff = 6 if name == "o2_bw16" else max(DEFAULT_CUTOFF, len(exp.get("theta", ())) - 1)
    rep = analyze_lattice(latt, AnalyzeOptions(analyses=_analyses_for(name), level=exp["d"],
                                               theta_cutoff=cutoff, label=name))
    res = TargetResult(name, ex.source, ex.notes, report=rep)
    add = lambda n, e, c, ok=None: res.checks.append(Check(n, e, c, (e == c) if ok is None else ok))
    certs = rep["certificates"]
    add("dim", exp["dim"], rep["dim"])
    add("integral", True, certs["integral"])
    add("minimum", exp["mu"], rep["mu"])
    if "kissing" in exp:
        add("kissing", exp["kissing"], rep["kissing"])
    add("parity", exp["parity"], certs["parity"])
    if exp.get("modular"):
        add(f"{exp['d']}-modularity", CERTIFIED, certs["modularity"]["verdict"])
    if exp.get("unimodular"):
        add("unimodular (det 1)", True, certs["unimodular"])
    if "theta" in exp:
        t = tuple(exp["theta"])
        add(f"theta prefix (M={len(t) - 1})", " ".join(map(str, t)),
            " ".join(map(str, rep["theta"][:len(t)])))
    if "chi" in exp:
        add("weak secrecy gain", f"{exp['chi']:.4f} +- {CHI_TOL:g}", fmt_chi(rep["chi"]),
            rep["chi"] is not None and abs(rep["chi"] - exp["chi"]) <= CHI_TOL)
    if name in MIN_EXAMPLES:
        add("minimum via code", exp["mu"], certs["minimum_via_code"])
    if certs.get("predicted_even") is not None:
        add("parity vs code criterion", "even" if certs["predicted_even"] else "odd", certs["parity"])
    add("volume formula", True, certs["volume_matches_formula"])
    return res



def expand_target(target: str) -> list[str]:
    if target == "all":
        return list(TARGETS)
    if target == "min-examples":
        return list(MIN_EXAMPLES)
    if target in EXAMPLES:
        return [target]
    raise InvalidInput(f"unknown target {target!r}")


def format_result(res: TargetResult) -> str:
    lines = [f"== {res.name}: {res.source}"]
    lines += [f"NOTE  {n}" for n in res.notes]
    lines += [c.line(res.name) for c in res.checks]
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# search


def default_search_field(q: int, D: int | None) -> FiniteField:
    p, f = _prime_power(q)
    if D is not None:
        K = QuadField(D)
        sp = splitting_type(K, p)
        if sp.f != f:
            raise Unsupported(f"F_{q} is not the residue field of {p} in Q(sqrt({D})) "
                              f"({p} is {sp.kind.value})")
        return FiniteField.residue_field(K, p)
    if f == 1:
        return FiniteField.prime(p)
    if p == 2:
        return FiniteField.residue_field(QuadField(5), 2)
    r = next(r for r in range(2, p) if pow(r, (p - 1) // 2, p) == p - 1)
    return FiniteField.residue_field(QuadField(r), p)


def _prime_power(q: int) -> tuple[int, int]:
    if is_prime(q):
        return q, 1
    r = math.isqrt(q)
    if r * r == q and is_prime(r):
        return r, 2
    raise InvalidInput(f"q = {q} must be a prime or the square of a prime")


def search_codes(F: FiniteField, N: int, count: int, seed: int, budget: int) -> list[LinearCode]:
    found: list[LinearCode] = []
    attempts = 0
    while len(found) < count:
        if attempts >= 50 * count:
            raise SearchFailed(f"found only {len(found)} distinct codes after {attempts} searches")
        C = search_self_dual(F, N, seed=seed * 100003 + attempts, budget=budget)
        attempts += 1
        if C not in found:
            found.append(C)
    return found


def _field_comment(F: FiniteField) -> str:
    if F.f == 1:
        return f"# over F_{F.p}"
    c0, c1 = F.modulus
    base = f", residue field of Q(sqrt({F.base.D}))" if F.base is not None else ""
    return f"# over F_{F.q} with w^2 = {c0} + {c1}*w{base}"


# ---------------------------------------------------------------------------
# subcommands


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_construct(args) -> int:
    cfg = load_config(Path(args.config))
    latt = build_lattice(cfg.construction())
    _emit(dumps_lattice(latt), args.output)
    return EXIT_OK


def _analyze_one(job) -> dict:
    path, opts = job
    text = Path(path).read_text()
    obj = None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError:
        pass
    if isinstance(obj, dict) and "gram" in obj:
        latt = loads_lattice(text)
    else:
        cfg = load_config(Path(path))
        latt = build_lattice(cfg.construction())
        if opts.analyses == ANALYSES:
            opts = AnalyzeOptions(cfg.analyses, opts.level, cfg.theta_cutoff, cfg.tol,
                                  opts.max_cutoff, opts.label)
    label = opts.label or Path(path).stem
    return analyze_lattice(latt, AnalyzeOptions(opts.analyses, opts.level, opts.theta_cutoff,
                                                opts.tol, opts.max_cutoff, label))


def cmd_analyze(args) -> int:
    analyses = ANALYSES if args.analyses in (None, "all") else tuple(a.strip() for a in args.analyses.split(","))
    bad = [a for a in analyses if a not in ANALYSES]
    if bad:
        raise InvalidInput(f"unknown analyses {bad}; choose from {', '.join(ANALYSES)}")
    opts = AnalyzeOptions(analyses, args.level, args.theta_cutoff, args.tol, args.max_cutoff,
                          args.label or "")
    reports = run_jobs(_analyze_one, [(p, opts) for p in args.inputs])
    if args.output:
        payload = reports[0] if len(reports) == 1 else reports
        Path(args.output).write_text(dumps_report(payload))
    elif args.json:
        payload = reports[0] if len(reports) == 1 else reports
        sys.stdout.write(dumps_report(payload))
    if not args.json:
        sys.stdout.write(render_table(TABLE_HEADERS, [report_row(r) for r in reports], args.csv))
        for r in reports:
            sys.stdout.write(_summary(r) + "\n")
    return EXIT_OK


def _summary(r: dict) -> str:
    c = r["certificates"]
    parts = []
    if c.get("unimodular"):
        parts.append("unimodular")
    if c.get("parity"):
        parts.append(c["parity"])
    if r["mu"] is not None:
        parts.append(f"mu={r['mu']}")
    mod = c.get("modularity")
    if mod and mod["verdict"]:
        parts.append(f"{mod['level']}-modularity: {mod['verdict']}")
    if c.get("integral") is False:
        parts.append("not integral")
    line = f"{r['label']}: " + ", ".join(parts)
    return "\n".join([line] + [f"  note: {n}" for n in r["notes"]])


def cmd_search(args) -> int:
    F = default_search_field(args.q, args.D)
    codes = search_codes(F, args.N, args.count, args.seed, args.budget)
    texts = []
    for i, C in enumerate(codes):
        header = (f"# self-dual [{C.N},{C.k}] code, seed {args.seed}, #{i}\n"
                  f"{_field_comment(F)}\n")
        texts.append(header + format_code(C))
    if args.output:
        out = Path(args.output)
        out.mkdir(parents=True, exist_ok=True)
        for i, t in enumerate(texts):
            path = out / f"selfdual_q{args.q}_N{args.N}_{i}.txt"
            path.write_text(t)
            print(path)
    else:
        sys.stdout.write("\n".join(texts))
    return EXIT_OK


def cmd_reproduce(args) -> int:
    names = expand_target(args.target)
    results = run_jobs(reproduce_target, names)
    for res in results:
        print(format_result(res))
    if args.output:
        Path(args.output).write_text(dumps_report({r.name: r.report for r in results}))
    failed = [r.name for r in results if not r.ok]
    print(f"{'FAIL' if failed else 'PASS'}: {len(results) - len(failed)}/{len(results)} targets reproduced")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_table(args) -> int:
    rows = [r for r in REFERENCE_ROWS if args.dim is None or r.dim == args.dim]
    computed = {}
    if args.compute:
        names = sorted({ROW_EXAMPLES[r.number] for r in rows if r.number in ROW_EXAMPLES})
        for res in run_jobs(reproduce_target, names):
            computed[res.name] = res
    headers = TABLE_HEADERS + ["status"]
    out = []
    failed = False
    for r in rows:
        status = []
        name = ROW_EXAMPLES.get(r.number)
        if name is None:
            status.append("statistics only, code not published")
        else:
            status.append(f"built-in code {name}")
        if r.mu <= 9 and r.theta[r.mu] != r.kissing:
            status.append(f"ks differs from theta coefficient {r.theta[r.mu]}")
        out.append([str(r.number), str(r.dim), str(r.d), str(r.mu), str(r.kissing),
                    f"{r.chi:.4f}", " ".join(map(str, r.theta)), "; ".join(status)])
        if name in computed:
            rep = computed[name].report
            ok = computed[name].ok
            failed |= not ok
            row = report_row(rep)
            row[0] = f"{r.number} (computed)"
            out.append(row + ["PASS" if ok else "FAIL"])
    sys.stdout.write(render_table(headers, out, args.csv))
    return EXIT_FAIL if failed else EXIT_OK


# ---------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="latcode", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a lattice from a TOML/JSON job config")
    p.add_argument("config")
    p.add_argument("-o", "--output", help="write the lattice JSON here instead of stdout")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("analyze", help="certify and measure lattices (lattice JSON or job config)")
    p.add_argument("inputs", nargs="+")
    p.add_argument("--analyses", help=f"comma-separated subset of: {', '.join(ANALYSES)}")
    p.add_argument("--level", type=int, help="modularity level d (default |D|, or 1 for imaginary fields)")
    p.add_argument("--theta-cutoff", type=int, default=DEFAULT_CUTOFF)
    p.add_argument("--max-cutoff", type=int, default=DEFAULT_MAX_CUTOFF,
                   help="largest theta cutoff tried for the secrecy gain")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--label")
    p.add_argument("--csv", action="store_true", help="CSV instead of Markdown")
    p.add_argument("--json", action="store_true", help="print the JSON report instead of a table")
    p.add_argument("-o", "--output", help="write the JSON report here")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("search", help="random self-dual codes over F_q")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--D", type=int, help="bind F_q to the residue field of Q(sqrt(D))")
    p.add_argument("--budget", type=int, default=20000)
    p.add_argument("-o", "--output", help="directory for the code files (default: stdout)")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("reproduce", help="rebuild a named lattice and compare with reference values")
    p.add_argument("target", choices=TARGETS + ("min-examples", "all"))
    p.add_argument("-o", "--output", help="write the JSON reports here")
    p.set_defaults(func=cmd_reproduce)

    p = sub.add_parser("table", help="reference statistics, optionally recomputed for built-in codes")
    p.add_argument("--dim", type=int, choices=(8, 12, 16))
    p.add_argument("--compute", action="store_true")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_table)
    return ap


_PARSE_ERRORS = (CodeParseError, LatticeFormatError)
_UNSUPPORTED = (UnsupportedSplitting, Unsupported, InvalidField, NotPrime, InvalidInput,
                PreconditionFailed, RankDeficient, NotSystematic)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _PARSE_ERRORS as exc:
        print(f"latcode: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except _UNSUPPORTED as exc:
        print(f"latcode: unsupported input ({type(exc).__name__}): {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except SearchFailed as exc:
        print(f"latcode: search failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except FileNotFoundError as exc:
        print(f"latcode: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except LatcodeError as exc:
        print(f"latcode: error ({type(exc).__name__}): {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
