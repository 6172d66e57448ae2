"""Command-line front end: ``wpgl <command> [options]``.

Every command returns a :class:`CommandResult`; ``main`` prints either its
canonical JSON (default) or its text rendering and exits with its code.
Exit codes: 0 success, 1 validation failure, 2 input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from .automorphism import compose, decompose, recompose, unipotent_factorize
from .butterfly import check_butterfly, is_strictifiable, quotient_invariants
from .counting import section_series, series_product, global_section_count
from .errors import (
    FieldMismatchError,
    HomogeneityError,
    InvalidStructureError,
    MalformedError,
    NotAutomorphismError,
    SignatureError,
    WPGLError,
)
from .fields import field_from_flag
from .golden import run_examples
from .serialize import (
    block_linear_to_json,
    butterfly_from_json,
    dumps,
    extension_from_json,
    map_from_json,
    unipotent_to_json,
    xmod_from_json,
)
from .signature import WeightSignature
from .structure import pi0_report
from .xmod import check_crossed_module, is_split_extension

OK, INVALID, BAD_INPUT = 0, 1, 2


@dataclass
class CommandResult:
    payload: dict
    text: str
    code: int = OK
    errors: list[str] = field(default_factory=list)

    def render(self, as_json: bool = True) -> str:
        if as_json:
            return dumps(self.payload)
        return self.text.rstrip("\n") + "\n" if self.text else ""


class InputError(Exception):
    """Raised for unreadable files or bad flags; maps to exit code 2."""


def _weights(text: str) -> WeightSignature:
    try:
        return WeightSignature.parse(text)
    except (SignatureError, ValueError) as exc:
        raise InputError(str(exc) or f"bad weight list {text!r}") from None


def _load(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from None


def _report_text(report) -> str:
    if report.ok:
        return f"{report.kind}: ok"
    lines = [f"{report.kind}: {len(report.violations)} violation(s)"]
    for v in report.violations:
        where = f" [{v.map}]" if v.map else ""
        lines.append(f"  {v.axiom}{where}: {v.message} at {json.dumps(v.witness, sort_keys=True)}")
    return "\n".join(lines)


def _invalid(err: InvalidStructureError, kind: str) -> CommandResult:
    report = err.report
    payload = {"ok": False, "kind": kind, "error": str(err)}
    if report is not None:
        payload["report"] = report.to_json()
        text = _report_text(report)
    else:
        text = f"{kind}: {err}"
    return CommandResult(payload, text, INVALID)


# -- commands -----------------------------------------------------------------


def cmd_counts(weights: str) -> CommandResult:
    sig = _weights(weights)
    rep = pi0_report(sig).to_json()
    lines = [
        f"weights {','.join(map(str, sig.raw_weights))}: distinct {list(sig.weights)} with ranks {list(sig.mults)}",
        f"k = {tuple(rep['k'])}",
        f"unipotent dimensions = {tuple(rep['unipotent_dims'])}",
        f"pi1 order = {rep['pi1_order']}",
        f"G = {rep['group_shape']}",
        f"pi0 = {rep['pi0_shape']}" + (f" ({rep['pi0_tag']})" if rep.get("pi0_tag") not in (None, rep["pi0_shape"]) else ""),
        f"split = {rep['split']}",
    ]
    for key, row in sorted(rep["d_tables"].items()):
        lines.append(f"d_l({key}) for l = 0.. : {row}")
    return CommandResult(rep, "\n".join(lines))


def cmd_decompose(weights: str, field_flag: str, map_path: str) -> CommandResult:
    sig = _weights(weights)
    try:
        ring = field_from_flag(field_flag)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    obj = _load(map_path)
    try:
        F = map_from_json(obj, sig, ring)
    except HomogeneityError as exc:
        return CommandResult({"ok": False, "error": f"invalid map: {exc}"}, f"invalid map: {exc}", INVALID)
    try:
        u, ell = decompose(F)
    except NotAutomorphismError as exc:
        return CommandResult({"ok": False, "error": str(exc)}, str(exc), INVALID)
    factors = unipotent_factorize(u)
    rebuilt = compose(recompose(factors, sig, ring), ell.as_map())
    ok = rebuilt == F
    levels = [f.levels()[0] for f in factors]
    payload = {
        "ok": ok,
        "signature": list(sig.raw_weights),
        "field": ring.to_json(),
        "linear_blocks": block_linear_to_json(ell),
        "unipotent": unipotent_to_json(u),
        "factors": [unipotent_to_json(f, a) for f, a in zip(factors, levels)],
        "recomposition_ok": ok,
    }
    lines = [f"linear blocks: {payload['linear_blocks']}"]
    if not factors:
        lines.append("unipotent factors: none")
    for f, a in zip(factors, levels):
        lines.append(f"u_{a}: coordinates {[ring.format(c) for c in f.coordinates(a)]}")
    lines.append(f"recomposition check: {str(ok).lower()}")
    return CommandResult(payload, "\n".join(lines), OK if ok else INVALID)


def cmd_sections(weights: str, degree: int, upto: bool = False) -> CommandResult:
    sig = _weights(weights)
    if degree < 0:
        raise InputError("degree must be non-negative")
    count = global_section_count(sig, degree)
    payload = {"signature": list(sig.raw_weights), "degree": degree, "count": count}
    text = str(count)
    if upto:
        counts = section_series(sig, degree)
        gf = series_product(sig.raw_weights, degree)
        payload["counts"] = counts
        payload["generating_function_ok"] = counts == gf
        text = " ".join(map(str, counts)) + f"\ngenerating function check: {str(counts == gf).lower()}"
    return CommandResult(payload, text, OK if payload.get("generating_function_ok", True) else INVALID)


def cmd_verify(xmod_path: str | None = None, butterfly_path: str | None = None) -> CommandResult:
    if xmod_path:
        report = check_crossed_module(xmod_from_json(_load(xmod_path)))
    else:
        report = check_butterfly(butterfly_from_json(_load(butterfly_path)))
    payload = report.to_json()
    return CommandResult(payload, _report_text(report), OK if report.ok else INVALID)


def cmd_split(butterfly_path: str | None = None, extension_path: str | None = None) -> CommandResult:
    if extension_path:
        ext = extension_from_json(_load(extension_path))
        try:
            s = is_split_extension(ext)
        except InvalidStructureError as exc:
            return _invalid(exc, "central_extension")
        payload = {"kind": "central_extension", "split": s is not None, "section": s}
        text = "none" if s is None else f"section: {s}"
        return CommandResult(payload, text)
    b = butterfly_from_json(_load(butterfly_path))
    try:
        found = is_strictifiable(b)
    except InvalidStructureError as exc:
        return _invalid(exc, "butterfly")
    payload = {"kind": "butterfly", "split": found is not None, "section": None if found is None else found["section"]}
    if found is not None:
        payload["f1"], payload["f0"] = found["f1"], found["f0"]
        text = f"section: {found['section']}\nstrict morphism f1={found['f1']} f0={found['f0']}"
    else:
        text = "none"
    return CommandResult(payload, text)


def cmd_quotient(butterfly_path: str) -> CommandResult:
    b = butterfly_from_json(_load(butterfly_path))
    try:
        q = quotient_invariants(b)
    except InvalidStructureError as exc:
        return _invalid(exc, "butterfly")
    payload = q.to_json()
    text = "\n".join(
        [f"{key}: {payload[key]['structure']} (order {payload[key]['order']})"
         for key in ("ker_kappa", "coker_kappa", "im_rho", "middle")]
        + [f"1-stack: {str(q.is_1_stack).lower()}", f"orbifold type: {str(q.is_orbifold_type).lower()}"]
    )
    return CommandResult(payload, text)


def cmd_examples() -> CommandResult:
    payload = run_examples()
    lines = []
    for ex in payload["examples"]:
        status = "ok" if ex["match"] else "DIFF"
        lines.append(f"{status:4} {ex['fixture']} {tuple(ex['case'])}: {ex['computed']['group_shape']}")
        if "erratum" in ex:
            lines.append(f"     erratum: {ex['erratum']}")
    for d in payload["diffs"]:
        lines.append(f"diff {d['fixture']} {tuple(d['case'])} {d['key']}: expected {d['expected']} got {d['computed']}")
    return CommandResult(payload, "\n".join(lines), OK if payload["ok"] else INVALID)


# -- argument parsing -----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    out = argparse.ArgumentParser(add_help=False)
    mode = out.add_mutually_exclusive_group()
    mode.add_argument("--json", dest="as_json", action="store_true", default=True, help="canonical JSON (default)")
    mode.add_argument("--text", dest="as_json", action="store_false", help="human-readable text")

    p = argparse.ArgumentParser(prog="wpgl", description="Weighted PGL 2-groups, crossed modules and butterflies.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("counts", parents=[out], help="k, d_l and pi0/pi1 data for a weight list")
    s.add_argument("--weights", required=True)

    s = sub.add_parser("decompose", parents=[out], help="split an automorphism into unipotent factors and linear part")
    s.add_argument("--weights", required=True)
    s.add_argument("--field", default="q", help="q or fp:p (default q)")
    s.add_argument("--map", required=True, dest="map_path")

    s = sub.add_parser("sections", parents=[out], help="global sections of O(d)")
    s.add_argument("--weights", required=True)
    s.add_argument("--degree", type=int, required=True)
    s.add_argument("--upto", action="store_true", help="list counts for degrees 0..d")

    s = sub.add_parser("verify", parents=[out], help="check crossed module or butterfly axioms")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--xmod", dest="xmod_path")
    g.add_argument("--butterfly", dest="butterfly_path")

    s = sub.add_parser("split", parents=[out], help="look for a splitting section")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--butterfly", dest="butterfly_path")
    g.add_argument("--extension", dest="extension_path")

    s = sub.add_parser("quotient", parents=[out], help="quotient invariants of a butterfly")
    s.add_argument("--butterfly", required=True, dest="butterfly_path")

    sub.add_parser("examples", parents=[out], help="recompute the worked examples and diff against fixtures")
    return p


def run(args: argparse.Namespace) -> CommandResult:
    c = args.command
    if c == "counts":
        return cmd_counts(args.weights)
    if c == "decompose":
        return cmd_decompose(args.weights, args.field, args.map_path)
    if c == "sections":
        return cmd_sections(args.weights, args.degree, args.upto)
    if c == "verify":
        return cmd_verify(args.xmod_path, args.butterfly_path)
    if c == "split":
        return cmd_split(args.butterfly_path, args.extension_path)
    if c == "quotient":
        return cmd_quotient(args.butterfly_path)
    return cmd_examples()


def execute(argv=None) -> tuple[int, str, str]:
    """Run a command line; returns (exit code, stdout text, stderr text)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), "", ""
    try:
        result = run(args)
    except (InputError, MalformedError, SignatureError, FieldMismatchError) as exc:
        result = CommandResult({"ok": False, "error": str(exc)}, "", BAD_INPUT, [str(exc)])
    except InvalidStructureError as exc:
        result = _invalid(exc, args.command)
    except (WPGLError, ValueError, TypeError, ZeroDivisionError) as exc:
        result = CommandResult({"ok": False, "error": str(exc)}, "", BAD_INPUT, [str(exc)])
    err = "".join(f"wpgl: error: {e}\n" for e in result.errors)
    return result.code, result.render(args.as_json), err


def main(argv=None) -> int:
    code, out, err = execute(argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
