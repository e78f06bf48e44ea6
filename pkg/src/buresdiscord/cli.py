"""Command-line front end.

Reads states from JSON, dispatches to closed forms or the brute-force
engine, runs the verification suite, and emits JSON or CSV results.

Exit codes: 0 success, 1 verification failure, 2 invalid input
(machine-readable error JSON on stderr), 3 I/O failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass

import numpy as np

from .closed_forms import (
    char_poly_coeffs,
    classical_correlation_symmetric,
    degenerate_fidelity,
    symmetric_fidelity,
    x_candidate_discord,
    x_fidelity_equatorial,
    x_fidelity_z,
)
from .discord_core import (
    GridConfig,
    MeasurementDirection,
    ccs_from_measurement,
    entropic_discord,
    fidelity_at_direction,
    helstrom_success,
    induced_ensemble,
    lambda_matrix,
    make_result,
    max_fidelity_bruteforce,
)
from .errors import (
    BuresDiscordError,
    InvalidParams,
    NotSymmetricFamily,
    PreconditionNotMet,
)
from .linalg import check_density_matrix, herm_eig
from .sampling import (
    random_classical_params,
    random_direction,
    random_state,
    random_symmetric_params,
    random_unitary,
    random_x_params,
)
from .states import (
    ClassicalStateParams,
    XStateParams,
    classical_state,
    is_symmetric_family,
    local_unitary,
    werner_params,
    x_params_from_matrix,
    x_state,
)

A_CLASSICAL_TOL = 1e-6

# fidelity of the maximally mixed state at w = 0.5 mixing, and the other
# frozen regression targets checked by the verify subcommand
_WERNER_HALF_FIDELITY = 0.5 + 0.125 + np.sqrt(0.125 * 0.625)
_BELL_DISCORD = 2.0 - np.sqrt(2.0)
_REFERENCE_AXIAL = 0.5 + np.sqrt(5.0) / 6.0
_REFERENCE_EQUATORIAL = 0.5 + np.sqrt(2.0) / 3.0


# ---------------------------------------------------------------------------
# serialization helpers


def _fmt(value: float) -> str:
    return format(float(value), ".17g")


def _dumps(obj, indent: int = 0) -> str:
    """JSON text with floats at 17 significant digits."""
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if obj is None:
        return "null"
    if isinstance(obj, (bool, np.bool_)):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _fmt(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, (list, tuple, np.ndarray)):
        items = [_dumps(v, indent + 1) for v in obj]
        if not items:
            return "[]"
        return "[\n" + ",\n".join(inner + s for s in items) + "\n" + pad + "]"
    if isinstance(obj, dict):
        items = [f"{json.dumps(str(k))}: {_dumps(v, indent + 1)}" for k, v in obj.items()]
        if not items:
            return "{}"
        return "{\n" + ",\n".join(inner + s for s in items) + "\n" + pad + "}"
    raise TypeError(f"cannot serialize {type(obj)!r}")


def _matrix_parts(mat: np.ndarray) -> tuple:
    arr = np.asarray(mat, dtype=complex)
    return arr.real.tolist(), arr.imag.tolist()


def _direction_entry(direction: MeasurementDirection) -> dict:
    return {"theta": direction.theta, "psi": direction.psi}


def _write_text(text: str, out_path: str | None) -> None:
    if out_path is None or out_path == "-":
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
        return
    with open(out_path, "w", encoding="utf-8") as handle:
        handle.write(text)
        if not text.endswith("\n"):
            handle.write("\n")


def _error_exit(kind: str, message: str, code: int) -> int:
    sys.stderr.write(json.dumps({"error": kind, "message": message}) + "\n")
    return code


# ---------------------------------------------------------------------------
# input parsing


@dataclass
class ResolvedState:
    kind: str
    rho: np.ndarray
    params: XStateParams | None


def _read_input(path: str) -> dict:
    if path == "-":
        raw = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as handle:
            raw = handle.read()
    loaded = json.loads(raw)
    if not isinstance(loaded, dict):
        raise InvalidParams("input JSON must be an object")
    return loaded


def _x_params_from_fields(fields: dict) -> XStateParams:
    try:
        return XStateParams(
            a=float(fields["a"]),
            b=float(fields["b"]),
            c=float(fields["c"]),
            d=float(fields["d"]),
            x=complex(float(fields.get("x_re", 0.0)), float(fields.get("x_im", 0.0))),
            y=complex(float(fields.get("y_re", 0.0)), float(fields.get("y_im", 0.0))),
        )
    except KeyError as exc:
        raise InvalidParams(f"x_state spec missing field {exc.args[0]!r}") from exc


def resolve_state(spec: dict) -> ResolvedState:
    """Turn a StateSpec JSON object into a density matrix plus, when the
    state is X-shaped, its parameter block."""
    kind = spec.get("kind")
    if kind == "x_state":
        params = _x_params_from_fields(spec.get("x_state", {}))
        return ResolvedState(kind, x_state(params), params)
    if kind == "werner":
        body = spec.get("werner", {})
        if "w" not in body:
            raise InvalidParams("werner spec requires field 'w'")
        params = werner_params(float(body["w"]))
        return ResolvedState(kind, x_state(params), params)
    if kind == "classical":
        body = spec.get("classical", {})
        try:
            cp = ClassicalStateParams(
                p=float(body["p"]),
                r=tuple(float(v) for v in body["r"]),
                s=tuple(float(v) for v in body["s"]),
                t=tuple(float(v) for v in body["t"]),
            )
        except KeyError as exc:
            raise InvalidParams(f"classical spec missing field {exc.args[0]!r}") from exc
        rho = classical_state(cp)
        params = _try_x_params(rho)
        return ResolvedState(kind, rho, params)
    if kind == "matrix":
        body = spec.get("matrix", {})
        if "re" not in body:
            raise InvalidParams("matrix spec requires field 're'")
        re = np.asarray(body["re"], dtype=float)
        im = np.asarray(body.get("im", np.zeros_like(re)), dtype=float)
        if re.shape != (4, 4) or im.shape != (4, 4):
            raise InvalidParams("matrix spec must be 4x4")
        rho = check_density_matrix(re + 1j * im)
        return ResolvedState(kind, rho, _try_x_params(rho))
    raise InvalidParams(f"unknown state kind {kind!r}")


def _try_x_params(rho: np.ndarray) -> XStateParams | None:
    try:
        return x_params_from_matrix(rho)
    except InvalidParams:
        return None


def _grid_from_args(args) -> GridConfig:
    return GridConfig(
        n_theta=args.grid_theta,
        n_phi=args.grid_psi,
        refine_iters=args.refine_iters,
    )


# ---------------------------------------------------------------------------
# discord subcommand


def _degenerate_result(params: XStateParams):
    """DiscordResult wrapper around the rank-two endpoint closed form."""
    value, m_opt, regime = degenerate_fidelity(params)
    axial = MeasurementDirection((0.0, 0.0, 1.0))
    eq = x_fidelity_equatorial(params)
    equatorial = MeasurementDirection.from_angles(np.pi / 2.0, eq.psi_opt)
    if isinstance(m_opt, tuple):
        dirs = [axial, equatorial]
        family = None
    elif m_opt == 1.0:
        dirs = [axial]
        family = None
    else:
        dirs = [equatorial]
        family = "free_psi" if eq.free_psi else None
    return make_result(value, dirs, "degenerate", family), m_opt, regime


def _run_discord(resolved: ResolvedState, method: str, grid: GridConfig) -> dict:
    params = resolved.params
    dispatch: list = []
    candidate_gap = None
    extra: dict = {}

    if method in ("closed", "candidates") and params is None:
        raise InvalidParams(f"method={method} requires an X-shaped state")

    if method == "bruteforce" or (method == "auto" and params is None):
        dispatch.append("bruteforce")
        result = max_fidelity_bruteforce(resolved.rho, grid)
    elif method == "candidates":
        dispatch.append("candidates")
        result, breakdown = x_candidate_discord(params)
        extra["candidates"] = _breakdown_dict(breakdown)
    elif method == "closed":
        result, extra, dispatch = _closed_dispatch(params)
    else:
        if is_symmetric_family(params):
            dispatch.append("symmetric_family->symmetric_fidelity")
            result, branch = symmetric_fidelity(params)
            extra["symmetric_branch"] = {
                "case": branch.case,
                "xy_zero": branch.xy_zero,
                "optimal_family": branch.optimal_family,
            }
        else:
            try:
                result, m_opt, regime = _degenerate_result(params)
                dispatch.append("degenerate_preconditions->degenerate_fidelity")
                extra["degenerate"] = {"m_opt": m_opt, "regime": regime}
            except PreconditionNotMet:
                dispatch.append("general->candidates+bruteforce")
                cand_result, breakdown = x_candidate_discord(params)
                extra["candidates"] = _breakdown_dict(breakdown)
                result = max_fidelity_bruteforce(resolved.rho, grid)
                candidate_gap = result.fidelity - cand_result.fidelity

    if candidate_gap is None and params is not None and result.method != "x_candidates":
        cand_result, _ = x_candidate_discord(params)
        candidate_gap = result.fidelity - cand_result.fidelity

    report = {
        "input_kind": resolved.kind,
        "method_requested": method,
        "method": result.method,
        "fidelity": result.fidelity,
        "discord": result.discord,
        "optimal_directions": [_direction_entry(d) for d in result.optimal_directions],
        "degenerate_family": result.degenerate_family,
        "dispatch": dispatch,
        "candidate_gap": candidate_gap,
    }
    report.update(extra)
    return report


def _closed_dispatch(params: XStateParams):
    if is_symmetric_family(params):
        result, branch = symmetric_fidelity(params)
        extra = {"symmetric_branch": {
            "case": branch.case,
            "xy_zero": branch.xy_zero,
            "optimal_family": branch.optimal_family,
        }}
        return result, extra, ["closed->symmetric_fidelity"]
    result, m_opt, regime = _degenerate_result(params)
    return result, {"degenerate": {"m_opt": m_opt, "regime": regime}}, \
        ["closed->degenerate_fidelity"]


def _breakdown_dict(breakdown) -> dict:
    return {
        "F_axial": breakdown.F_axial,
        "F_equatorial": breakdown.F_equatorial,
        "h_max": breakdown.h_max,
        "k": breakdown.k,
        "tau": breakdown.tau,
        "kappa": breakdown.kappa,
        "chosen": breakdown.chosen,
    }


def cmd_discord(args) -> int:
    resolved = resolve_state(_read_input(args.input))
    report = _run_discord(resolved, args.method, _grid_from_args(args))
    _write_text(_dumps(report), args.out)
    return 0


# ---------------------------------------------------------------------------
# ccs subcommand


def cmd_ccs(args) -> int:
    resolved = resolve_state(_read_input(args.input))
    grid = _grid_from_args(args)
    if args.theta is not None:
        direction = MeasurementDirection.from_angles(args.theta, args.psi or 0.0)
        source = "override"
    else:
        report = _run_discord(resolved, "auto", grid)
        entry = report["optimal_directions"][0]
        direction = MeasurementDirection.from_angles(entry["theta"], entry["psi"])
        source = report["method"]

    ccs = ccs_from_measurement(resolved.rho, direction)
    check = max_fidelity_bruteforce(ccs.state, grid)
    re, im = _matrix_parts(ccs.state)
    report = {
        "direction": _direction_entry(direction),
        "direction_source": source,
        "ccs_re": re,
        "ccs_im": im,
        "fidelity_check": ccs.fidelity_check,
        "objective_fidelity": fidelity_at_direction(resolved.rho, direction),
        "degenerate_projector": ccs.degenerate_projector,
        "a_classical_discord": check.discord,
        "a_classical": bool(check.discord <= A_CLASSICAL_TOL),
    }
    _write_text(_dumps(report), args.out)
    return 0


# ---------------------------------------------------------------------------
# classical subcommand


def cmd_classical(args) -> int:
    resolved = resolve_state(_read_input(args.input))
    if resolved.params is None:
        raise NotSymmetricFamily("input state is not X-shaped")
    value, product = classical_correlation_symmetric(resolved.params)
    re, im = _matrix_parts(product)
    report = {
        "classical_correlation": value,
        "closest_product_re": re,
        "closest_product_im": im,
    }
    _write_text(_dumps(report), args.out)
    return 0


# ---------------------------------------------------------------------------
# sweep subcommand

CSV_COLUMNS = [
    "param_value",
    "fidelity",
    "discord",
    "theta_opt",
    "psi_opt",
    "method",
    "candidate_gap",
    "classical_corr",
    "entropic_discord",
]

_SWEEP_METHODS = {"bruteforce", "closed", "candidates", "entropic"}


def _interpolate_params(start: XStateParams, stop: XStateParams, t: float) -> XStateParams:
    s = 1.0 - t
    return XStateParams(
        a=s * start.a + t * stop.a,
        b=s * start.b + t * stop.b,
        c=s * start.c + t * stop.c,
        d=s * start.d + t * stop.d,
        x=s * start.x + t * stop.x,
        y=s * start.y + t * stop.y,
    )


def _sweep_points(spec: dict) -> tuple:
    """Expand a SweepSpec into (param_values, XStateParams list)."""
    steps = int(spec.get("steps", 0))
    if steps < 2:
        raise InvalidParams("sweep requires steps >= 2")
    family = spec.get("family")
    if family == "werner":
        lo = float(spec.get("start", 0.0))
        hi = float(spec.get("stop", 1.0))
        ws = np.linspace(lo, hi, steps)
        return list(ws), [werner_params(w) for w in ws]
    if family == "x_line":
        if "start" not in spec or "stop" not in spec:
            raise InvalidParams("x_line sweep requires 'start' and 'stop' parameter blocks")
        start = _x_params_from_fields(spec["start"])
        stop = _x_params_from_fields(spec["stop"])
        ts = np.linspace(0.0, 1.0, steps)
        points = [_interpolate_params(start, stop, t) for t in ts]
        values = _line_param_values(spec["start"], spec["stop"], ts)
        return values, points
    raise InvalidParams(f"unknown sweep family {family!r}")


def _line_param_values(start_fields: dict, stop_fields: dict, ts: np.ndarray) -> list:
    """When the endpoints differ in exactly one field, report that
    field's interpolated value; otherwise the bare parameter t."""
    names = ("a", "b", "c", "d", "x_re", "x_im", "y_re", "y_im")
    changed = [n for n in names
               if float(start_fields.get(n, 0.0)) != float(stop_fields.get(n, 0.0))]
    if len(changed) != 1:
        return list(ts)
    lo = float(start_fields.get(changed[0], 0.0))
    hi = float(stop_fields.get(changed[0], 0.0))
    return [lo + (hi - lo) * t for t in ts]


def _sweep_row(param_value: float, params: XStateParams, methods: set,
               grid: GridConfig) -> dict:
    rho = x_state(params)
    if "bruteforce" in methods:
        result = max_fidelity_bruteforce(rho, grid)
    elif "closed" in methods:
        if is_symmetric_family(params):
            result, _ = symmetric_fidelity(params)
        else:
            try:
                result, _, _ = _degenerate_result(params)
            except PreconditionNotMet:
                result, _ = x_candidate_discord(params)
    else:
        result, _ = x_candidate_discord(params)

    if result.method != "x_candidates":
        cand_result, _ = x_candidate_discord(params)
        gap = _fmt(result.fidelity - cand_result.fidelity)
    else:
        gap = ""

    classical = ""
    if is_symmetric_family(params):
        classical = _fmt(classical_correlation_symmetric(params)[0])
    entropic = ""
    if "entropic" in methods:
        entropic = _fmt(entropic_discord(rho, grid)[1])

    best = result.optimal_directions[0]
    return {
        "param_value": _fmt(param_value),
        "fidelity": _fmt(result.fidelity),
        "discord": _fmt(result.discord),
        "theta_opt": _fmt(best.theta),
        "psi_opt": _fmt(best.psi),
        "method": result.method,
        "candidate_gap": gap,
        "classical_corr": classical,
        "entropic_discord": entropic,
    }


def cmd_sweep(args) -> int:
    spec = _read_input(args.input)
    methods = set(spec.get("methods", ["bruteforce"]))
    unknown = methods - _SWEEP_METHODS
    if unknown:
        raise InvalidParams(f"unknown sweep methods {sorted(unknown)!r}")
    if not methods & {"bruteforce", "closed", "candidates"}:
        raise InvalidParams("sweep needs at least one of bruteforce/closed/candidates")
    values, points = _sweep_points(spec)
    grid = _grid_from_args(args)

    rows = [_sweep_row(v, p, methods, grid) for v, p in zip(values, points)]
    if args.out is None or args.out == "-":
        writer = csv.DictWriter(sys.stdout, fieldnames=CSV_COLUMNS)
        writer.writeheader()
        writer.writerows(rows)
    else:
        with open(args.out, "w", encoding="utf-8", newline="") as handle:
            writer = csv.DictWriter(handle, fieldnames=CSV_COLUMNS)
            writer.writeheader()
            writer.writerows(rows)
    return 0


# ---------------------------------------------------------------------------
# verify subcommand


def _suite_closed_vs_bruteforce(rng, samples, grid):
    worst = 0.0
    for _ in range(samples):
        params = random_symmetric_params(rng)
        closed, _ = symmetric_fidelity(params)
        brute = max_fidelity_bruteforce(x_state(params), grid)
        worst = max(worst, abs(closed.fidelity - brute.fidelity))
    return worst, samples


def _suite_candidate_bound(rng, samples, grid):
    worst = 0.0
    for _ in range(samples):
        params = random_x_params(rng)
        cand, _ = x_candidate_discord(params)
        brute = max_fidelity_bruteforce(x_state(params), grid)
        worst = max(worst, cand.fidelity - brute.fidelity)
    return max(worst, 0.0), samples


def _suite_unitary_invariance(rng, samples, grid):
    worst = 0.0
    n = max(samples // 2, 5)
    for _ in range(n):
        params = random_x_params(rng)
        rho = x_state(params)
        rotated = local_unitary(rho, random_unitary(rng), random_unitary(rng))
        base = max_fidelity_bruteforce(rho, grid)
        moved = max_fidelity_bruteforce(rotated, grid)
        worst = max(worst, abs(base.fidelity - moved.fidelity))
    return worst, n


def _suite_discrimination_bridge(rng, samples, _grid):
    worst = 0.0
    n = samples * 2
    for _ in range(n):
        rho = random_state(rng)
        direction = MeasurementDirection(tuple(random_direction(rng)))
        ensemble = induced_ensemble(rho, direction)
        worst = max(worst, abs(helstrom_success(ensemble)
                               - fidelity_at_direction(rho, direction)))
    return worst, n


def _suite_zero_discord(rng, samples, grid):
    worst = 0.0
    n = max(samples // 2, 5)
    for _ in range(n):
        rho = classical_state(random_classical_params(rng))
        result = max_fidelity_bruteforce(rho, grid)
        worst = max(worst, result.discord)
    return worst, n


def _suite_char_poly(rng, samples, _grid):
    worst = 0.0
    n = samples * 2
    for _ in range(n):
        params = random_x_params(rng)
        m = rng.uniform(-1.0, 1.0)
        psi = rng.uniform(0.0, 2.0 * np.pi)
        coeffs = char_poly_coeffs(params, m, psi)
        sin_theta = np.sqrt(1.0 - m * m)
        direction = MeasurementDirection((sin_theta * np.cos(psi),
                                          sin_theta * np.sin(psi), m))
        lam = herm_eig(lambda_matrix(x_state(params), direction)).eigenvalues
        e1 = lam.sum()
        e2 = sum(lam[i] * lam[j] for i in range(4) for j in range(i + 1, 4))
        e3 = sum(lam[i] * lam[j] * lam[k]
                 for i in range(4) for j in range(i + 1, 4) for k in range(j + 1, 4))
        e4 = lam.prod()
        worst = max(worst,
                    abs(coeffs.t3 + e1), abs(coeffs.t2 - e2),
                    abs(coeffs.t1 + e3), abs(coeffs.t0 - e4))
    return worst, n


def _suite_reference_values(_rng, _samples, _grid):
    checks = []
    werner = werner_params(0.5)
    closed, _ = symmetric_fidelity(werner)
    checks.append(abs(closed.fidelity - _WERNER_HALF_FIDELITY))
    checks.append(abs(classical_correlation_symmetric(werner)[0]
                      - (2.0 - 3.0 * np.sqrt(0.125) - np.sqrt(0.625))))

    bell = XStateParams(0.5, 0.0, 0.0, 0.5, 0.0, 0.5)
    closed, _ = symmetric_fidelity(bell)
    checks.append(abs(closed.discord - _BELL_DISCORD))
    checks.append(abs(classical_correlation_symmetric(bell)[0] - 1.0))

    mixed = werner_params(0.0)
    closed, _ = symmetric_fidelity(mixed)
    checks.append(abs(closed.fidelity - 1.0))
    checks.append(abs(classical_correlation_symmetric(mixed)[0]))

    reference = XStateParams(1.0 / 3.0, 1.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0,
                             1.0 / 6.0, 1.0 / 6.0)
    checks.append(abs(x_fidelity_z(reference) - _REFERENCE_AXIAL))
    checks.append(abs(x_fidelity_equatorial(reference).fidelity - _REFERENCE_EQUATORIAL))
    return max(checks), len(checks)


_VERIFY_SUITES = [
    ("closed_vs_bruteforce", _suite_closed_vs_bruteforce, 2e-6),
    ("candidate_bound", _suite_candidate_bound, 1e-9),
    ("unitary_invariance", _suite_unitary_invariance, 2e-6),
    ("discrimination_bridge", _suite_discrimination_bridge, 1e-9),
    ("zero_discord", _suite_zero_discord, 1e-6),
    ("char_poly", _suite_char_poly, 1e-10),
    ("reference_values", _suite_reference_values, 1e-9),
]


def cmd_verify(args) -> int:
    grid = _grid_from_args(args)
    summary = {"seed": args.seed, "samples": args.samples, "suites": {}}
    all_passed = True
    for index, (name, runner, default_tol) in enumerate(_VERIFY_SUITES):
        tol = args.tolerance if args.tolerance is not None else default_tol
        rng = np.random.default_rng([args.seed, index])
        max_dev, count = runner(rng, args.samples, grid)
        passed = max_dev <= tol
        all_passed = all_passed and passed
        summary["suites"][name] = {
            "max_deviation": float(max_dev),
            "tolerance": float(tol),
            "samples": count,
            "passed": passed,
        }
        print(f"{name}: samples={count} max_dev={_fmt(max_dev)} "
              f"tol={_fmt(tol)} {'PASS' if passed else 'FAIL'}")
    summary["passed"] = all_passed
    _write_text(_dumps(summary), args.out)
    return 0 if all_passed else 1


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="buresdiscord",
        description="Bures-geometric discord of two-qubit X-states",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, needs_input=True):
        if needs_input:
            p.add_argument("--input", required=True,
                           help="path to a JSON StateSpec, or - for stdin")
        p.add_argument("--grid-theta", type=int, default=64)
        p.add_argument("--grid-psi", type=int, default=128)
        p.add_argument("--refine-iters", type=int, default=200)
        p.add_argument("--out", default=None, help="output path (default stdout)")
        p.add_argument("--seed", type=int, default=42)

    p_discord = sub.add_parser("discord", help="maximal fidelity and discord")
    add_common(p_discord)
    p_discord.add_argument("--method", default="auto",
                           choices=["auto", "bruteforce", "closed", "candidates"])
    p_discord.set_defaults(func=cmd_discord)

    p_ccs = sub.add_parser("ccs", help="closest classical state")
    add_common(p_ccs)
    p_ccs.add_argument("--theta", type=float, default=None,
                       help="override the measurement polar angle")
    p_ccs.add_argument("--psi", type=float, default=None,
                       help="override the measurement azimuth")
    p_ccs.set_defaults(func=cmd_ccs)

    p_sweep = sub.add_parser("sweep", help="one-parameter family sweep to CSV")
    add_common(p_sweep)
    p_sweep.set_defaults(func=cmd_sweep)

    p_verify = sub.add_parser("verify", help="run the self-check suites")
    add_common(p_verify, needs_input=False)
    p_verify.add_argument("--samples", type=int, default=50)
    p_verify.add_argument("--tolerance", type=float, default=None,
                          help="override every suite tolerance")
    p_verify.set_defaults(func=cmd_verify)

    p_classical = sub.add_parser("classical",
                                 help="geometric classical correlation (a=d, b=c family)")
    add_common(p_classical)
    p_classical.set_defaults(func=cmd_classical)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        return _error_exit("FileNotFound", str(exc), 3)
    except IsADirectoryError as exc:
        return _error_exit("IsADirectory", str(exc), 3)
    except PermissionError as exc:
        return _error_exit("PermissionDenied", str(exc), 3)
    except json.JSONDecodeError as exc:
        return _error_exit("InvalidJSON", str(exc), 2)
    except BuresDiscordError as exc:
        return _error_exit(type(exc).__name__, str(exc), 2)
    except (KeyError, TypeError, ValueError) as exc:
        return _error_exit(type(exc).__name__, str(exc), 2)
    except OSError as exc:
        return _error_exit("IOError", str(exc), 3)


if __name__ == "__main__":
    sys.exit(main())
